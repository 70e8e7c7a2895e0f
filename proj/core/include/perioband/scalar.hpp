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

#include <cmath>
#include <string>
#include <string_view>

#include "perioband/lambda_rational.hpp"
#include "perioband/rational.hpp"

namespace perioband {

enum class ScalarKind { kExactLambda, kFloat };

/// Selects exact λ arithmetic or plain doubles. The tolerance only applies to
/// float mode and is relative to the largest magnitude in a pivot's row.
struct ScalarMode {
  ScalarKind kind = ScalarKind::kExactLambda;
  double float_zero_tolerance = 1e-12;

  static ScalarMode exact() { return {ScalarKind::kExactLambda, 0.0}; }
  static ScalarMode floating(double tolerance = 1e-12) { return {ScalarKind::kFloat, tolerance}; }
};

std::string_view to_string(ScalarKind kind);
/// "exact" or "float"; throws ParseError otherwise.
ScalarKind parse_scalar_kind(std::string_view text);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr ScalarKind kind = ScalarKind::kExactLambda;
  static bool is_zero(const Rational& v) { return v.is_zero(); }
  static Rational parse(std::string_view text) { return Rational::parse(text); }
  static std::string format(const Rational& v) { return v.to_string(); }
  static double magnitude(const Rational& v) { return std::fabs(v.to_double()); }
};

template <>
struct ScalarTraits<double> {
  static constexpr ScalarKind kind = ScalarKind::kFloat;
  static bool is_zero(double v) { return v == 0.0; }
  static double parse(std::string_view text) { return parse_double_literal(text); }
  static std::string format(double v) { return format_double(v); }
  static double magnitude(double v) { return std::fabs(v); }
};

template <>
struct ScalarTraits<LambdaRational> {
  static constexpr ScalarKind kind = ScalarKind::kExactLambda;
  static bool is_zero(const LambdaRational& v) { return v.is_zero(); }
  static std::string format(const LambdaRational& v) { return v.to_string(); }
};

}  // namespace perioband
