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

#include "perioband/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <system_error>

#include "perioband/error.hpp"

namespace perioband {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kPoleAtZero: return "PoleAtZero";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kInvalidBandwidth: return "InvalidBandwidth";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kPatternViolation: return "PatternViolation";
    case ErrorCode::kZeroPivotNeedsExact: return "ZeroPivotNeedsExact";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view digits) {
  return BigInt(std::string(digits), 10);
}

// [sign] digits [. digits] [(e|E) [sign] digits], at least one mantissa digit.
bool parse_decimal(std::string_view s, BigInt& num, BigInt& den) {
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string mantissa;
  std::size_t frac_digits = 0;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (mantissa.empty()) return false;
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') return false;
    ++pos;
    std::string_view rest = s.substr(pos);
    bool exp_negative = false;
    if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
      exp_negative = rest[0] == '-';
      rest.remove_prefix(1);
    }
    if (!all_digits(rest) || rest.size() > 6) return false;
    exponent = std::stol(std::string(rest));
    if (exp_negative) exponent = -exponent;
  }
  num = parse_integer(mantissa);
  if (negative) num = -num;
  const long scale = exponent - static_cast<long>(frac_digits);
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale >= 0) {
    num *= power;
    den = 1;
  } else {
    den = power;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) raise(ErrorCode::kDivisionByZero, "rational with zero denominator");
  value_.get_num() = numerator;
  value_.get_den() = denominator;
  value_.canonicalize();
}

Rational Rational::parse(std::string_view literal) {
  const std::string_view s = literal;
  if (s.empty()) raise(ErrorCode::kParseError, "empty numeric literal");

  const auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view top = s.substr(0, slash);
    const std::string_view bottom = s.substr(slash + 1);
    bool negative = false;
    if (!top.empty() && (top[0] == '+' || top[0] == '-')) {
      negative = top[0] == '-';
      top.remove_prefix(1);
    }
    if (!all_digits(top) || !all_digits(bottom)) {
      raise(ErrorCode::kParseError, "malformed rational literal '" + std::string(s) + "'");
    }
    BigInt num = parse_integer(top);
    const BigInt den = parse_integer(bottom);
    if (den == 0) {
      raise(ErrorCode::kParseError, "zero denominator in '" + std::string(s) + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);
  }

  BigInt num;
  BigInt den;
  if (!parse_decimal(s, num, den)) {
    raise(ErrorCode::kParseError, "malformed numeric literal '" + std::string(s) + "'");
  }
  return Rational(num, den);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) raise(ErrorCode::kInvalidInput, "non-finite double");
  mpq_class q(value);
  return Rational(std::move(q));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) raise(ErrorCode::kDivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

double parse_double_literal(std::string_view literal) {
  if (literal.find('/') != std::string_view::npos) {
    return Rational::parse(literal).to_double();
  }
  std::string_view s = literal;
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty() || !std::isfinite(value)) {
    raise(ErrorCode::kParseError, "malformed float literal '" + std::string(literal) + "'");
  }
  return value;
}

std::string format_double(double value) {
  if (value == 0.0) return "0";
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  (void)ec;
  return std::string(buffer, end);
}

}  // namespace perioband
