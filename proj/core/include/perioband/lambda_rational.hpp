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

#include <iosfwd>
#include <string>

#include "perioband/polynomial.hpp"
#include "perioband/rational.hpp"

namespace perioband {

/// Ratio of two polynomials in the perturbation symbol λ, kept canonical:
/// numerator and denominator coprime, denominator monic, zero stored as 0/1.
/// Exact-mode band algorithms compute with these so that zero entries and
/// zero pivots can be replaced by λ and the limit λ → 0 taken at the end.
class LambdaRational {
 public:
  LambdaRational() = default;
  LambdaRational(const Rational& constant) : num_(constant) {}
  LambdaRational(int constant) : num_(Rational(constant)) {}
  /// Canonicalizes; throws DivisionByZero when `den` is the zero polynomial.
  LambdaRational(Polynomial num, Polynomial den);

  static LambdaRational lambda();

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.is_zero() && num_.is_constant(); }
  bool depends_on_lambda() const { return !is_constant(); }

  const Polynomial& numerator() const { return num_; }
  Polynomial denominator() const;

  /// Value at λ = 0; throws PoleAtZero when the canonical denominator
  /// vanishes there.
  Rational evaluate_at_zero() const;
  /// Value at an arbitrary point; throws PoleAtZero on a pole.
  Rational evaluate(const Rational& at) const;

  LambdaRational operator-() const;
  LambdaRational& operator+=(const LambdaRational& rhs);
  LambdaRational& operator-=(const LambdaRational& rhs);
  LambdaRational& operator*=(const LambdaRational& rhs);
  /// Throws DivisionByZero when `rhs` is the zero function.
  LambdaRational& operator/=(const LambdaRational& rhs);

  friend LambdaRational operator+(LambdaRational lhs, const LambdaRational& rhs) { return lhs += rhs; }
  friend LambdaRational operator-(LambdaRational lhs, const LambdaRational& rhs) { return lhs -= rhs; }
  friend LambdaRational operator*(LambdaRational lhs, const LambdaRational& rhs) { return lhs *= rhs; }
  friend LambdaRational operator/(LambdaRational lhs, const LambdaRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const LambdaRational&, const LambdaRational&) = default;

  /// Re-runs canonicalization on the stored fields; a no-op on values
  /// produced by this class.
  LambdaRational normalized() const;

  std::string to_string() const;

 private:
  void canonicalize();
  // Scales num/den so den is monic; assumes they are already coprime.
  void normalize_leading();

  Polynomial num_;
  // Empty means the denominator 1; otherwise monic of degree >= 1.
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const LambdaRational& value);

}  // namespace perioband
