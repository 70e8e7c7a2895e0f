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
#include <vector>

#include "perioband/band_matrix.hpp"
#include "perioband/dense_matrix.hpp"
#include "perioband/lambda_rational.hpp"
#include "perioband/rational.hpp"

namespace perioband {

enum class SubstitutionKind {
  kBandSuper,  // zero a(i, i+h), i <= n-h-1, replaced by λ
  kBandSub,    // zero a(i, i-h), i >= h+2, replaced by λ
  kPivot,      // pivot u(i, i) identically zero, replaced by λ
};

struct Substitution {
  SubstitutionKind kind;
  std::size_t row;
  std::size_t col;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

/// Doolittle factors M = L U of a periodic band matrix. L is unit lower
/// triangular with band width h plus a full last row; U is upper triangular
/// with band width h plus a full last column. Indices are 1-based and any
/// position outside those patterns reads as zero.
template <class T>
class LUFactors {
 public:
  LUFactors(PeriodicBandMatrix<T> working);

  std::size_t order() const { return n_; }
  std::size_t bandwidth() const { return k_; }
  std::size_t half_bandwidth() const { return h_; }

  T lower(std::size_t i, std::size_t j) const;
  T upper(std::size_t i, std::size_t j) const;
  const T& pivot(std::size_t i) const { return i == n_ ? unn_ : upper_[(i - 1) * (h_ + 1)]; }

  DenseMatrix<T> lower_dense() const;
  DenseMatrix<T> upper_dense() const;

  /// Positions where λ was inserted, in the order they happened.
  const std::vector<Substitution>& substitutions() const { return substitutions_; }
  bool used_lambda() const { return !substitutions_.empty(); }

  /// The matrix that L U reproduces exactly: the input with every λ
  /// substitution applied (zero band entries set to λ, and λ added on the
  /// diagonal wherever a pivot was replaced). Equal to the input when no
  /// substitution happened, and equal to it at λ = 0 in every case.
  const PeriodicBandMatrix<T>& working() const { return working_; }

  // Unchecked storage access used by the solvers. l_band requires
  // i <= n-1 and i-h <= j < i; u_band requires i <= j <= min(i+h, n-1).
  const T& l_band(std::size_t i, std::size_t j) const { return lower_[(i - 1) * h_ + (j + h_ - i)]; }
  T& l_band(std::size_t i, std::size_t j) { return lower_[(i - 1) * h_ + (j + h_ - i)]; }
  const T& u_band(std::size_t i, std::size_t j) const { return upper_[(i - 1) * (h_ + 1) + (j - i)]; }
  T& u_band(std::size_t i, std::size_t j) { return upper_[(i - 1) * (h_ + 1) + (j - i)]; }
  /// l(n, j), j < n.
  const T& l_last_row(std::size_t j) const { return last_row_[j - 1]; }
  T& l_last_row(std::size_t j) { return last_row_[j - 1]; }
  /// u(i, n), i < n.
  const T& u_last_col(std::size_t i) const { return last_col_[i - 1]; }
  T& u_last_col(std::size_t i) { return last_col_[i - 1]; }
  T& pivot_ref(std::size_t i) { return i == n_ ? unn_ : upper_[(i - 1) * (h_ + 1)]; }

  PeriodicBandMatrix<T>& mutable_working() { return working_; }
  void record(Substitution s) { substitutions_.push_back(s); }

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t h_;
  std::vector<T> lower_;
  std::vector<T> upper_;
  std::vector<T> last_row_;
  std::vector<T> last_col_;
  T unn_;
  std::vector<Substitution> substitutions_;
  PeriodicBandMatrix<T> working_;
};

/// Exact factorization. Zero entries a(i, i+h) (i <= n-h-1) and a(i, i-h)
/// (i >= h+2) and identically zero pivots are replaced by λ; the caller's
/// matrix is left untouched.
LUFactors<LambdaRational> factorize(const PeriodicBandMatrix<Rational>& m);

/// Float factorization. Throws ZeroPivotNeedsExact whenever exact mode would
/// have substituted λ: a pivot or a required a(i, i±h) with magnitude at or
/// below `zero_tolerance` times the largest magnitude in its row.
LUFactors<double> factorize(const PeriodicBandMatrix<double>& m, double zero_tolerance = 1e-12);

// Runs the recurrences over plain rationals with no substitution. Returns
// nullopt when a pivot is zero.
std::optional<LUFactors<Rational>> factorize_plain(const PeriodicBandMatrix<Rational>& m);

/// Product of the pivots as a function of λ.
LambdaRational pivot_product(const LUFactors<LambdaRational>& f);

/// det(M): the pivot product at λ = 0. Zero for a singular matrix.
Rational determinant(const LUFactors<LambdaRational>& f);
double determinant(const LUFactors<double>& f);

}  // namespace perioband
