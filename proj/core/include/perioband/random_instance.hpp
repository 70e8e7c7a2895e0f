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

#pragma once

#include <cstddef>
#include <cstdint>

#include "perioband/band_matrix.hpp"
#include "perioband/rational.hpp"

namespace perioband {

struct GenerateOptions {
  std::size_t n = 0;
  std::size_t k = 3;
  std::uint64_t seed = 0;
  /// Chance that each band entry is forced to zero; corners are never zeroed.
  double zero_probability = 0.0;
};

/// Random integer-valued instance: nonzero values in [-3, 3], then each band
/// entry independently zeroed. Bit-for-bit deterministic in the options.
PeriodicBandMatrix<Rational> generate_instance(const GenerateOptions& options);

/// Strictly row diagonally dominant float instance with every band entry and
/// both corners nonzero.
PeriodicBandMatrix<double> diagonally_dominant_instance(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace perioband
