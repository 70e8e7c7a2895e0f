// Copyright 2026 The perioband Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "perioband/band_matrix.hpp"

#include <string>

#include "perioband/scalar.hpp"

namespace perioband {

void validate_shape(std::size_t n, std::size_t k) {
  if (k < 3 || k % 2 == 0) {
    raise(ErrorCode::kInvalidBandwidth, "bandwidth k=" + std::to_string(k) + " must be odd and >= 3");
  }
  if (n < k + 1) {
    raise(ErrorCode::kInvalidBandwidth,
          "order n=" + std::to_string(n) + " must be at least k+1=" + std::to_string(k + 1));
  }
}

std::string_view to_string(ScalarKind kind) {
  return kind == ScalarKind::kExactLambda ? "exact" : "float";
}

ScalarKind parse_scalar_kind(std::string_view text) {
  if (text == "exact") return ScalarKind::kExactLambda;
  if (text == "float") return ScalarKind::kFloat;
  raise(ErrorCode::kParseError, "unknown mode '" + std::string(text) + "' (expected exact|float)");
}

}  // namespace perioband
