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
#include <map>
#include <set>
#include <vector>

#include "perioband/band_matrix.hpp"
#include "perioband/dense_matrix.hpp"
#include "perioband/factorization.hpp"

namespace perioband {

/// Selected columns of T = L^{-1}. Column r stores t(r+1, r) .. t(n, r); the
/// diagonal entry is 1 and entries above it are 0.
template <class T>
struct LInverseColumns {
  std::size_t n = 0;
  std::map<std::size_t, std::vector<T>> cols;

  /// t(i, r) for a stored column r (or r = n, which is e_n).
  T at(std::size_t i, std::size_t r) const;
};

/// Columns C_r = (S(1, r), ..., S(n, r)) of the inverse, keyed by r.
template <class T>
struct InverseColumns {
  std::size_t n = 0;
  std::map<std::size_t, std::vector<T>> cols;

  bool complete() const { return cols.size() == n; }
  DenseMatrix<T> assemble() const;
};

/// t(i, r) = -l(i, r) - sum_{j=r+1}^{i-1} l(i, j) t(j, r) for i = r+1..n.
/// Throws InvalidInput for a wanted column outside [1, n-1].
template <class T>
LInverseColumns<T> linverse_columns(const LUFactors<T>& f, const std::set<std::size_t>& wanted);

/// The last h+1 columns of the inverse by back substitution U C_r = T e_r,
/// r = n down to n-h. Requires t columns n-h .. n-1.
template <class T>
InverseColumns<T> last_columns(const LUFactors<T>& f, const LInverseColumns<T>& t);

/// Fills columns n-h-1 down to 1 from column j+h of M^{-1} M = I:
///   C_j = (E_{j+h} - sum_{r=j+1}^{j+k-1} a(r, j+h) C_r) / a(j, j+h).
/// `work` must be the matrix the partial columns invert (the factorization's
/// working matrix), so a(j, j+h) is never identically zero.
template <class T>
InverseColumns<T> remaining_columns(const PeriodicBandMatrix<T>& work, InverseColumns<T> partial);

/// Full inverse; throws SingularMatrix ("Singular Matrix") when det(M) = 0.
DenseMatrix<Rational> invert(const PeriodicBandMatrix<Rational>& m);
DenseMatrix<Rational> invert(const LUFactors<LambdaRational>& f);
/// Same result, carrying λ through every column recurrence before setting
/// λ = 0. Cost grows with the degree of the intermediate rational functions.
DenseMatrix<Rational> invert_symbolic(const LUFactors<LambdaRational>& f);
/// Float inverse; throws ZeroPivotNeedsExact where exact mode would use λ.
DenseMatrix<double> invert(const PeriodicBandMatrix<double>& m, double zero_tolerance = 1e-12);
DenseMatrix<double> invert(const LUFactors<double>& f);

/// N^{-1} = R M^{-1} with M = N R.
DenseMatrix<Rational> invert_anti(const AntiPeriodicBandMatrix<Rational>& nmat);
DenseMatrix<double> invert_anti(const AntiPeriodicBandMatrix<double>& nmat, double zero_tolerance = 1e-12);

}  // namespace perioband
