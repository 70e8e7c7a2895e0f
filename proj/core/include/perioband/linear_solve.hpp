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

#include <span>
#include <vector>

#include "perioband/band_matrix.hpp"
#include "perioband/factorization.hpp"
#include "perioband/lambda_rational.hpp"
#include "perioband/rational.hpp"

namespace perioband {

/// Result of L z = y, U x = z. In exact mode `z` is kept as functions of λ
/// (it may legitimately diverge at λ = 0) while `x` and `det` are the
/// λ = 0 values.
template <class Value, class Work>
struct SolveOutcome {
  std::vector<Value> x;
  std::vector<Work> z;
  Value det{};
  bool used_lambda = false;
};

using ExactSolveOutcome = SolveOutcome<Rational, LambdaRational>;
using FloatSolveOutcome = SolveOutcome<double, double>;

/// Throws SingularMatrix when det(M) = 0, DimensionMismatch when y has the
/// wrong length.
ExactSolveOutcome solve(const PeriodicBandMatrix<Rational>& m, std::span<const Rational> y);
/// Reuses one factorization; safe to call concurrently on the same factors.
ExactSolveOutcome solve(const LUFactors<LambdaRational>& f, std::span<const Rational> y);

FloatSolveOutcome solve(const PeriodicBandMatrix<double>& m, std::span<const double> y,
                        double zero_tolerance = 1e-12);
FloatSolveOutcome solve(const LUFactors<double>& f, std::span<const double> y);

}  // namespace perioband
