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

#include "perioband/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <sstream>

#include "perioband/error.hpp"

namespace perioband {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::lambda() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  Polynomial out = *this;
  const Rational inv = Rational(1) / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::scale(const Rational& factor) {
  if (factor.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational magnitude = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude.is_one();
    if (i == 0 || !unit) os << magnitude;
    if (i >= 1) os << (unit ? "" : "*") << "λ";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) raise(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {Polynomial(), dividend};

  std::vector<Rational> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dn = d.size();
  std::vector<Rational> quot(rem.size() - dn + 1);
  const Rational inv_lead = Rational(1) / d.back();

  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const Rational factor = rem[shift + dn - 1] * inv_lead;
    quot[shift] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[shift + j] -= factor * d[j];
  }
  rem.resize(dn - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace {

__extension__ using Wide = unsigned __int128;

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a)) {
    if (e & 1) r = mul_mod(r, a);
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

// Image of p modulo kPrime, or nullopt when a denominator or the leading
// coefficient vanishes there.
std::optional<std::vector<std::uint64_t>> reduce(const Polynomial& p) {
  std::vector<std::uint64_t> out;
  out.reserve(p.coefficients().size());
  for (const Rational& c : p.coefficients()) {
    const mpq_class& q = c.raw();
    const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
    if (den == 0) return std::nullopt;
    out.push_back(mul_mod(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), inv_mod(den)));
  }
  if (out.back() == 0) return std::nullopt;
  return out;
}

std::size_t gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv_lead = inv_mod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t factor = mul_mod(a.back(), inv_lead);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub_mod(a[shift + j], mul_mod(factor, b[j]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

// True when p and q are certainly coprime over Q: a common factor of degree d
// survives reduction modulo a prime that keeps both degrees.
bool coprime_by_reduction(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return false;
  const auto a = reduce(p);
  const auto b = reduce(q);
  if (!a || !b) return false;
  return gcd_degree_mod(*a, *b) == 0;
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) raise(ErrorCode::kInvalidInput, "gcd of two zero polynomials");
  if (coprime_by_reduction(p, q)) return Polynomial(Rational(1));
  Polynomial a = p.monic();
  Polynomial b = q.monic();
  while (!b.is_zero()) {
    if (b.degree() == 0) return Polynomial(Rational(1));
    Polynomial r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace perioband
