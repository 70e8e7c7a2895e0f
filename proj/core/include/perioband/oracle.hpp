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
#include <optional>
#include <span>
#include <vector>

#include "perioband/dense_matrix.hpp"
#include "perioband/rational.hpp"

// Dense exact reference routines. They only see plain rationals in dense
// storage and share nothing with the band algorithms, so agreement between
// the two is meaningful evidence.
namespace perioband::oracle {

/// Bareiss fraction-free elimination. Returns 0 for a singular matrix.
Rational oracle_det(const DenseMatrix<Rational>& d);

/// Gauss-Jordan on [d | I], pivoting on the first nonzero entry of each
/// column. Throws SingularMatrix.
DenseMatrix<Rational> oracle_invert(const DenseMatrix<Rational>& d);

/// Gauss-Jordan on [d | y]. Throws SingularMatrix.
std::vector<Rational> oracle_solve(const DenseMatrix<Rational>& d, std::span<const Rational> y);

/// Determinant of the n x n exchange (reversal) matrix.
Rational oracle_exchange_det(std::size_t n);

struct OracleReport {
  Rational det;
  std::optional<DenseMatrix<Rational>> inverse;
  /// d * inverse == I and inverse * d == I, exactly (false when singular).
  bool residual_zero = false;
};

OracleReport oracle_report(const DenseMatrix<Rational>& d);

}  // namespace perioband::oracle
