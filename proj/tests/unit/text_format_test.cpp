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

#include <random>
#include <string>

#include "perioband/random_instance.hpp"
#include "perioband/text_format.hpp"
#include "test_support.hpp"

namespace perioband {
namespace {

using testing::error_code_of;

std::string slurp(const std::string& name) { return read_text_file(testing::data_path(name)); }

TEST(BandFormat, ParsesHeaderAndBody) {
  const BandDocument doc = parse_band_document(slurp("ex1.pkb"));
  EXPECT_EQ(doc.header().n, 6u);
  EXPECT_EQ(doc.header().k, 3u);
  EXPECT_EQ(doc.header().mode, ScalarKind::kExactLambda);
  EXPECT_FALSE(doc.is_anti());
  const auto m = doc.periodic<Rational>();
  EXPECT_EQ(m.get(6, 6), Rational(5));
  EXPECT_EQ(m.get(5, 4), Rational(2));
  EXPECT_TRUE(parse_band_document(slurp("ex1.apkb")).is_anti());
}

TEST(BandFormat, WriterReproducesShippedFilesByteForByte) {
  for (const char* name : {"ex1.pkb", "ex2.pkb", "ex3.pkb"}) {
    const std::string text = slurp(name);
    const auto m = parse_band_document(text).periodic<Rational>();
    EXPECT_EQ(format_pkb(m), text) << name;
    EXPECT_EQ(parse_band_document(format_pkb(m)).periodic<Rational>(), m);
  }
  for (const char* name : {"ex1.apkb", "ex2.apkb"}) {
    const std::string text = slurp(name);
    const auto nmat = parse_band_document(text).anti<Rational>();
    EXPECT_EQ(format_apkb(nmat), text) << name;
  }
}

TEST(BandFormat, AntiFileDescribesReversedColumns) {
  const auto m = parse_band_document(slurp("ex1.pkb")).periodic<Rational>();
  const auto nmat = parse_band_document(slurp("ex1.apkb")).anti<Rational>();
  EXPECT_EQ(to_dense(nmat), to_dense(reverse_columns(m)));
}

TEST(BandFormat, CommentsAndBlankLinesAreIgnored) {
  const std::string text =
      "# periodic tridiagonal\nPKB 1\n\nn 4 k 3 mode exact\ncorner_1n 1/2\n# corner\ncorner_n1 -3\n"
      "diag -1 1 1 1\ndiag 0 2 2 2 2\ndiag 1 1 1 1\n";
  const auto m = parse_band_document(text).periodic<Rational>();
  EXPECT_EQ(m.corner_1n(), Rational::parse("1/2"));
  EXPECT_EQ(m.get(4, 1), Rational(-3));
}

TEST(BandFormat, FloatModeAcceptsDecimalLiterals) {
  const std::string text =
      "PKB 1\nn 4 k 3 mode float\ncorner_1n 0.5\ncorner_n1 -1e-3\n"
      "diag -1 1 1 1\ndiag 0 2.25 2 2 2\ndiag 1 1 1 1\n";
  const BandDocument doc = parse_band_document(text);
  EXPECT_EQ(doc.header().mode, ScalarKind::kFloat);
  const auto m = doc.periodic<double>();
  EXPECT_EQ(m.get(1, 1), 2.25);
  EXPECT_EQ(m.corner_n1(), -1e-3);
  const std::string canonical = format_pkb(m);
  EXPECT_NE(canonical.find("corner_n1 -0.001\n"), std::string::npos) << canonical;
  EXPECT_EQ(format_pkb(parse_band_document(canonical).periodic<double>()), canonical);
}

struct BadInput {
  const char* text;
  ErrorCode code;
};

TEST(BandFormat, RejectsMalformedInput) {
  const BadInput cases[] = {
      {"", ErrorCode::kParseError},
      {"PKB 2\nn 4 k 3 mode exact\ncorner_1n 1\ncorner_n1 1\ndiag -1 1 1 1\ndiag 0 1 1 1 1\ndiag 1 1 1 1\n",
       ErrorCode::kParseError},
      {"PKB 1\nn 4 k 3 mode exotic\ncorner_1n 1\ncorner_n1 1\ndiag -1 1 1 1\ndiag 0 1 1 1 1\ndiag 1 1 1 1\n",
       ErrorCode::kParseError},
      {"PKB 1\nn 3 k 3 mode exact\ncorner_1n 1\ncorner_n1 1\ndiag -1 1 1\ndiag 0 1 1 1\ndiag 1 1 1\n",
       ErrorCode::kInvalidBandwidth},
      {"PKB 1\nn 6 k 4 mode exact\ncorner_1n 1\ncorner_n1 1\n", ErrorCode::kInvalidBandwidth},
      {"PKB 1\nn 4 k 3 mode exact\ncorner_1n 1\ncorner_n1 1\ndiag -1 1 1 1\ndiag 0 1 1 1\ndiag 1 1 1 1\n",
       ErrorCode::kParseError},
      {"PKB 1\nn 4 k 3 mode exact\ncorner_1n 1\ncorner_n1 1\ndiag 0 1 1 1 1\ndiag -1 1 1 1\ndiag 1 1 1 1\n",
       ErrorCode::kParseError},
      {"PKB 1\nn 4 k 3 mode exact\ncorner_1n 1\ncorner_n1 1\ndiag -1 1 1 1\ndiag 0 1 1 1 1\n",
       ErrorCode::kParseError},
      {"PKB 1\nn 4 k 3 mode exact\ncorner_1n 0.5.1\ncorner_n1 1\ndiag -1 1 1 1\ndiag 0 1 1 1 1\ndiag 1 1 1 1\n",
       ErrorCode::kParseError},
      {"PKB 1\nn 4 k 3 mode exact\ncorner_1n 1\ncorner_n1 1\ndiag -1 1 x 1\ndiag 0 1 1 1 1\ndiag 1 1 1 1\n",
       ErrorCode::kParseError},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(error_code_of([&] { (void)parse_band_document(c.text); }), c.code) << c.text;
  }
}

TEST(BandFormat, ErrorsCarryLineNumbers) {
  const std::string text =
      "PKB 1\nn 4 k 3 mode exact\ncorner_1n 1\ncorner_n1 1\ndiag -1 1 1 1\ndiag 0 1 1 1\ndiag 1 1 1 1\n";
  try {
    (void)parse_band_document(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos) << e.what();
  }
}

TEST(BandFormat, RandomInstancesRoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 3 + 2 * (rng() % 4);
    const std::size_t n = k + 1 + rng() % 25;
    const auto m = generate_instance({n, k, rng(), 0.3});
    const std::string text = format_pkb(m);
    const auto back = parse_band_document(text).periodic<Rational>();
    EXPECT_EQ(back, m);
    EXPECT_EQ(format_pkb(back), text);
    const std::string anti = format_apkb(reverse_columns(m));
    EXPECT_EQ(format_apkb(parse_band_document(anti).anti<Rational>()), anti);
  }
}

TEST(DenseFormat, ShippedInversesRoundTrip) {
  for (const char* name : {"ex1_inverse.dense", "ex2_inverse.dense"}) {
    const std::string text = slurp(name);
    const auto d = parse_dense<Rational>(text);
    EXPECT_EQ(format_dense(d), text) << name;
  }
  EXPECT_EQ(parse_dense<Rational>(slurp("ex1_inverse.dense"))(1, 3), Rational::parse("-44/153"));
}

TEST(DenseFormat, RejectsShapeErrors) {
  EXPECT_EQ(error_code_of([] { (void)parse_dense<Rational>("DENSE 1\nn 2 2\n1 2\n3\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(error_code_of([] { (void)parse_dense<Rational>("DENSE 1\nn 2 2\n1 2\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(error_code_of([] { (void)parse_dense<Rational>("VEC 1\nn 2 2\n1 2\n3 4\n"); }),
            ErrorCode::kParseError);
}

TEST(DenseFormat, FloatValuesRoundTripExactly) {
  DenseMatrix<double> d(2, 2, {0.1, -1.0 / 3.0, 6.02e23, 0.0});
  const std::string text = format_dense(d);
  EXPECT_EQ(parse_dense<double>(text), d);
  EXPECT_EQ(format_dense(parse_dense<double>(text)), text);
}

TEST(VecFormat, ShippedRightHandSideRoundTrips) {
  const std::string text = slurp("ex3.vec");
  const auto y = parse_vec<Rational>(text);
  EXPECT_EQ(y, testing::rationals({"3", "-1", "4", "1", "1", "4"}));
  EXPECT_EQ(format_vec<Rational>(y), text);
}

TEST(VecFormat, ValuesMaySpanLines) {
  EXPECT_EQ(parse_vec<Rational>("VEC 1\nn 3\n1\n2/3\n-4\n"), testing::rationals({"1", "2/3", "-4"}));
  EXPECT_EQ(error_code_of([] { (void)parse_vec<Rational>("VEC 1\nn 3\n1 2\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(error_code_of([] { (void)parse_vec<Rational>("VEC 1\nn 1\n1 2\n"); }), ErrorCode::kParseError);
}

TEST(TextFiles, MissingFileIsAParseError) {
  EXPECT_EQ(error_code_of([] { (void)read_text_file("/nonexistent/perioband.pkb"); }),
            ErrorCode::kParseError);
}

}  // namespace
}  // namespace perioband
