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

#include "perioband/lambda_rational.hpp"

#include <ostream>
#include <utility>

#include "perioband/error.hpp"

namespace perioband {

LambdaRational::LambdaRational(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) raise(ErrorCode::kDivisionByZero, "rational function with zero denominator");
  canonicalize();
}

LambdaRational LambdaRational::lambda() {
  LambdaRational out;
  out.num_ = Polynomial::lambda();
  return out;
}

Polynomial LambdaRational::denominator() const {
  return den_.is_zero() ? Polynomial(Rational(1)) : den_;
}

void LambdaRational::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial();
    return;
  }
  if (den_.is_zero()) return;
  if (den_.degree() > 0) {
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  if (!den_.leading().is_one()) {
    const Rational inv = Rational(1) / den_.leading();
    num_.scale(inv);
    den_.scale(inv);
  }
  if (den_.degree() == 0) den_ = Polynomial();
}

void LambdaRational::normalize_leading() {
  if (num_.is_zero()) {
    den_ = Polynomial();
    return;
  }
  if (den_.is_zero()) return;
  if (!den_.leading().is_one()) {
    const Rational inv = Rational(1) / den_.leading();
    num_.scale(inv);
    den_.scale(inv);
  }
  if (den_.degree() == 0) den_ = Polynomial();
}

namespace {

Polynomial exact_quotient(const Polynomial& p, const Polynomial& g) {
  return g.degree() > 0 ? divmod(p, g).first : p;
}

}  // namespace

LambdaRational LambdaRational::normalized() const {
  LambdaRational out = *this;
  if (!out.den_.is_zero() && out.den_.is_constant() && out.den_.leading().is_one()) {
    out.den_ = Polynomial();
  }
  out.canonicalize();
  return out;
}

Rational LambdaRational::evaluate_at_zero() const {
  if (den_.is_zero()) return num_.constant_term();
  const Rational d0 = den_.constant_term();
  if (d0.is_zero()) raise(ErrorCode::kPoleAtZero, "rational function " + to_string() + " has a pole at 0");
  return num_.constant_term() / d0;
}

Rational LambdaRational::evaluate(const Rational& at) const {
  if (den_.is_zero()) return num_.evaluate(at);
  const Rational d = den_.evaluate(at);
  if (d.is_zero()) raise(ErrorCode::kPoleAtZero, "rational function " + to_string() + " has a pole at " + at.to_string());
  return num_.evaluate(at) / d;
}

LambdaRational LambdaRational::operator-() const {
  LambdaRational out = *this;
  out.num_ = -out.num_;
  return out;
}

LambdaRational& LambdaRational::operator+=(const LambdaRational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_zero()) canonicalize();
    else if (num_.is_zero()) den_ = Polynomial();
    return *this;
  }
  if (rhs.den_.is_zero()) {
    num_ += rhs.num_ * den_;
    normalize_leading();
    return *this;
  }
  if (den_.is_zero()) {
    num_ = num_ * rhs.den_ + rhs.num_;
    den_ = rhs.den_;
    normalize_leading();
    return *this;
  }
  // With g = gcd(b, d): a/b + c/d = (a d' + c b') / (b' d' g), b = b' g,
  // d = d' g. Only g can share a factor with the new numerator.
  const Polynomial g = gcd(den_, rhs.den_);
  const Polynomial b1 = exact_quotient(den_, g);
  const Polynomial d1 = exact_quotient(rhs.den_, g);
  num_ = num_ * d1 + rhs.num_ * b1;
  den_ = b1 * rhs.den_;
  if (g.degree() > 0 && !num_.is_zero()) {
    const Polynomial g2 = gcd(num_, g);
    num_ = exact_quotient(num_, g2);
    den_ = exact_quotient(den_, g2);
  }
  normalize_leading();
  return *this;
}

LambdaRational& LambdaRational::operator-=(const LambdaRational& rhs) { return *this += -rhs; }

LambdaRational& LambdaRational::operator*=(const LambdaRational& rhs) {
  if (rhs.is_constant()) {
    num_.scale(rhs.num_.constant_term());
    if (num_.is_zero()) den_ = Polynomial();
    return *this;
  }
  if (is_constant()) {
    const Rational c = num_.constant_term();
    *this = rhs;
    num_.scale(c);
    if (num_.is_zero()) den_ = Polynomial();
    return *this;
  }
  // Cross cancellation keeps canonical operands canonical.
  const Polynomial g1 = rhs.den_.is_zero() ? Polynomial(Rational(1)) : gcd(num_, rhs.den_);
  const Polynomial g2 = den_.is_zero() ? Polynomial(Rational(1)) : gcd(rhs.num_, den_);
  num_ = exact_quotient(num_, g1) * exact_quotient(rhs.num_, g2);
  const Polynomial left = den_.is_zero() ? Polynomial(Rational(1)) : exact_quotient(den_, g2);
  const Polynomial right = rhs.den_.is_zero() ? Polynomial(Rational(1)) : exact_quotient(rhs.den_, g1);
  den_ = left * right;
  normalize_leading();
  return *this;
}

LambdaRational& LambdaRational::operator/=(const LambdaRational& rhs) {
  if (rhs.is_zero()) raise(ErrorCode::kDivisionByZero, "division by the zero function");
  if (rhs.is_constant()) {
    num_.scale(Rational(1) / rhs.num_.constant_term());
    return *this;
  }
  LambdaRational reciprocal;
  reciprocal.num_ = rhs.denominator();
  reciprocal.den_ = rhs.num_;
  reciprocal.normalize_leading();
  return *this *= reciprocal;
}

std::string LambdaRational::to_string() const {
  if (den_.is_zero()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const LambdaRational& value) {
  return os << value.to_string();
}

}  // namespace perioband
