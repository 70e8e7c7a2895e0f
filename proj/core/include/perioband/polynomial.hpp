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
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "perioband/rational.hpp"

namespace perioband {

/// Univariate polynomial in λ with rational coefficients. Coefficient i is
/// the coefficient of λ^i; the leading coefficient is never zero and the zero
/// polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);
  Polynomial(std::initializer_list<Rational> coefficients);
  explicit Polynomial(std::vector<Rational> coefficients);

  /// The indeterminate λ itself.
  static Polynomial lambda();

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  const Rational& leading() const { return coeffs_.back(); }
  Rational constant_term() const { return coeffs_.empty() ? Rational() : coeffs_.front(); }

  Rational evaluate(const Rational& at) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& scale(const Rational& factor);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws DivisionByZero when
/// the divisor is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor. Throws InvalidInput when both are zero.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

}  // namespace perioband
