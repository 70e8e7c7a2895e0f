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

#include "dense_baseline.hpp"

#include <cmath>
#include <utility>

#include "perioband/error.hpp"

namespace perioband::cli {

std::vector<double> dense_float_solve(DenseMatrix<double> a, std::vector<double> b) {
  const std::size_t n = a.rows();
  for (std::size_t c = 1; c <= n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r <= n; ++r) {
      if (std::fabs(a(r, c)) > std::fabs(a(p, c))) p = r;
    }
    if (a(p, c) == 0.0) raise(ErrorCode::kZeroPivotNeedsExact, "dense baseline hit a zero pivot");
    if (p != c) {
      for (std::size_t j = 1; j <= n; ++j) std::swap(a(p, j), a(c, j));
      std::swap(b[p - 1], b[c - 1]);
    }
    for (std::size_t r = c + 1; r <= n; ++r) {
      const double factor = a(r, c) / a(c, c);
      for (std::size_t j = c; j <= n; ++j) a(r, j) -= factor * a(c, j);
      b[r - 1] -= factor * b[c - 1];
    }
  }
  for (std::size_t i = n; i >= 1; --i) {
    double s = b[i - 1];
    for (std::size_t j = i + 1; j <= n; ++j) s -= a(i, j) * b[j - 1];
    b[i - 1] = s / a(i, i);
  }
  return b;
}

}  // namespace perioband::cli
