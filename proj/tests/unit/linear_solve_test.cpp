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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "example_values.hpp"
#include "perioband/linear_solve.hpp"
#include "perioband/oracle.hpp"
#include "perioband/random_instance.hpp"
#include "test_support.hpp"

namespace perioband {
namespace {

using testing::error_code_of;

std::vector<Rational> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 4) + 1;
    out.push_back(Rational(num) / Rational(den));
  }
  return out;
}

std::vector<Rational> z_at_zero(const ExactSolveOutcome& out) {
  std::vector<Rational> z;
  for (const auto& v : out.z) z.push_back(v.evaluate_at_zero());
  return z;
}

TEST(Solve, ThirdExample) {
  const auto& ex = testing::example_three();
  const auto m = testing::load_pkb(ex.file);
  const auto y = testing::rationals(ex.rhs);
  const auto out = solve(m, y);
  EXPECT_EQ(out.x, testing::rationals(ex.x));
  EXPECT_EQ(out.det, Rational(14));
  EXPECT_FALSE(out.used_lambda);
  std::vector<Rational> z;
  for (std::size_t i = 1; i <= ex.z.size(); ++i) {
    z.push_back(Rational::parse(testing::corrected("ex3", "z", i, 0, ex.z[i - 1])));
  }
  EXPECT_EQ(z_at_zero(out), z);
  EXPECT_EQ(out.z.back(), LambdaRational(Rational::parse("-14/3")));
}

TEST(Solve, ThirdExampleIntermediateIsLowerSolve) {
  // z solves L z = y, and U x = z.
  const auto& ex = testing::example_three();
  const auto m = testing::load_pkb(ex.file);
  const auto f = factorize(m);
  const auto out = solve(f, testing::rationals(ex.rhs));
  auto value = [](const LambdaRational& v) { return v.evaluate_at_zero(); };
  const auto lower = transform<Rational>(f.lower_dense(), value);
  const auto upper = transform<Rational>(f.upper_dense(), value);
  const auto z = z_at_zero(out);
  EXPECT_EQ(lower * std::span<const Rational>(z), testing::rationals(ex.rhs));
  EXPECT_EQ(upper * std::span<const Rational>(out.x), z);
}

TEST(Solve, TheFactorizationCanBeReused) {
  const auto m = testing::load_pkb("ex2.pkb");
  const auto f = factorize(m);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const auto y = random_vector(10, rng);
    EXPECT_EQ(solve(f, y).x, solve(m, y).x);
  }
}

TEST(Solve, IdentityReturnsRightHandSide) {
  PeriodicBandMatrix<Rational> id(9, 5);
  for (std::size_t i = 1; i <= 9; ++i) id.set(i, i, Rational(1));
  std::mt19937_64 rng(1);
  const auto y = random_vector(9, rng);
  const auto out = solve(id, y);
  EXPECT_EQ(out.x, y);
  EXPECT_EQ(z_at_zero(out), y);
  EXPECT_EQ(out.det, Rational(1));
}

TEST(Solve, RecoversConstructedSolution) {
  std::mt19937_64 rng(20);
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 5; ++seed) {
    const auto m = generate_instance({20, 5, seed, 0.0});
    if (oracle::oracle_det(to_dense(m)).is_zero()) continue;
    const auto w = random_vector(20, rng);
    EXPECT_EQ(solve(m, testing::band_times_vector(m, w)).x, w) << "seed " << seed;
    ++checked;
  }
}

TEST(Solve, MatchesOracleWithZeroResidual) {
  std::mt19937_64 rng(31);
  auto check = [&rng](const testing::Instance& inst) {
    const std::size_t n = inst.m.order();
    const auto y = random_vector(n, rng);
    const auto out = solve(inst.m, y);
    EXPECT_EQ(out.x, oracle::oracle_solve(to_dense(inst.m), y)) << inst.label;
    EXPECT_EQ(testing::band_times_vector(inst.m, out.x), y) << inst.label;
    EXPECT_EQ(out.det, inst.det) << inst.label;
  };
  for (const auto& inst : testing::property_instances(200, 7)) check(inst);
  for (const auto& inst : testing::adversarial_instances(50, 8)) {
    check(inst);
    EXPECT_TRUE(solve(inst.m, std::vector<Rational>(inst.m.order(), Rational(1))).used_lambda) << inst.label;
  }
}

TEST(Solve, UnitRightHandSidesGiveInverseColumns) {
  std::mt19937_64 rng(12);
  for (const auto& inst : testing::property_instances(20, 12)) {
    const std::size_t n = inst.m.order();
    const auto f = factorize(inst.m);
    const auto inv = invert(f);
    for (int pick = 0; pick < 3; ++pick) {
      const std::size_t j = 1 + rng() % n;
      std::vector<Rational> e(n, Rational(0));
      e[j - 1] = Rational(1);
      const auto x = solve(f, e).x;
      for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(x[i - 1], inv(i, j)) << inst.label << " j=" << j;
    }
  }
}

TEST(Solve, IsLinearInTheRightHandSide) {
  std::mt19937_64 rng(13);
  for (const auto& inst : testing::property_instances(20, 13)) {
    const std::size_t n = inst.m.order();
    const auto y1 = random_vector(n, rng);
    const auto y2 = random_vector(n, rng);
    std::vector<Rational> sum(n);
    for (std::size_t i = 0; i < n; ++i) sum[i] = y1[i] + y2[i];
    const auto f = factorize(inst.m);
    const auto x1 = solve(f, y1).x;
    const auto x2 = solve(f, y2).x;
    const auto xs = solve(f, sum).x;
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(xs[i], x1[i] + x2[i]) << inst.label;
  }
}

TEST(Solve, FloatResidualOnDominantInstances) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto m = diagonally_dominant_instance(200, 7, seed);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> y(200);
    for (auto& v : y) v = dist(rng);
    const auto out = solve(m, y);
    const auto r = to_dense(m) * std::span<const double>(out.x);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < 200; ++i) {
      num = std::max(num, std::fabs(r[i] - y[i]));
      den = std::max(den, std::fabs(y[i]));
    }
    EXPECT_LE(num / den, 1e-8) << "seed " << seed;
  }
}

TEST(Solve, FloatAgreesWithExactOnWorkedExample) {
  const auto& ex = testing::example_three();
  const auto m = testing::load_pkb(ex.file);
  const auto fm = transform<double>(m, [](const Rational& v) { return v.to_double(); });
  const std::vector<double> y = {3, -1, 4, 1, 1, 4};
  const auto out = solve(fm, y);
  for (double v : out.x) EXPECT_NEAR(v, 1.0, 1e-12);
  EXPECT_NEAR(out.det, 14.0, 1e-10);
}

TEST(Solve, Errors) {
  const auto m = testing::load_pkb("ex3.pkb");
  EXPECT_EQ(error_code_of([&] { (void)solve(m, std::vector<Rational>(5, Rational(1))); }),
            ErrorCode::kDimensionMismatch);
  const auto fm = transform<double>(m, [](const Rational& v) { return v.to_double(); });
  EXPECT_EQ(error_code_of([&] { (void)solve(fm, std::vector<double>(7, 1.0)); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(error_code_of([] { (void)solve(PeriodicBandMatrix<Rational>(6, 3), std::vector<Rational>(6, Rational(1))); }),
            ErrorCode::kSingularMatrix);
  auto zeroed = fm;
  zeroed.set(1, 3, 0.0);
  EXPECT_EQ(error_code_of([&] { (void)solve(zeroed, std::vector<double>(6, 1.0)); }), ErrorCode::kZeroPivotNeedsExact);
}

}  // namespace
}  // namespace perioband
