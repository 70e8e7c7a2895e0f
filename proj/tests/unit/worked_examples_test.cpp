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

#include <set>
#include <sstream>
#include <tuple>

#include "example_values.hpp"
#include "perioband/perioband.hpp"
#include "test_support.hpp"

namespace perioband {
namespace {

// (example, quantity, i, j, printed, exact)
using Finding = std::tuple<std::string, std::string, std::size_t, std::size_t, std::string, std::string>;

struct Census {
  std::string example;
  std::set<Finding> findings;

  void compare(const std::string& quantity, std::size_t i, std::size_t j, const std::string& printed,
               const Rational& exact) {
    if (Rational::parse(printed) != exact) findings.insert({example, quantity, i, j, printed, exact.to_string()});
  }
  void compare_matrix(const std::string& quantity, const testing::LiteralMatrix& printed, const DenseMatrix<Rational>& exact) {
    for (std::size_t i = 1; i <= printed.size(); ++i) {
      for (std::size_t j = 1; j <= printed[i - 1].size(); ++j) compare(quantity, i, j, printed[i - 1][j - 1], exact(i, j));
    }
  }
};

Rational value(const LambdaRational& v) { return v.evaluate_at_zero(); }

// Compares every published number of one example with exact values. The
// factors are certified by L U = M and the inverse by the dense oracle, so
// every exact value here is independent of the printed ones.
std::set<Finding> census(const testing::PublishedExample& ex) {
  Census c{testing::example_name(ex), {}};
  const auto m = testing::load_pkb(ex.file);
  const std::size_t n = m.order();
  const auto dense = to_dense(m);
  const auto f = factorize(m);
  EXPECT_FALSE(f.used_lambda()) << ex.file;
  const auto lower = transform<Rational>(f.lower_dense(), value);
  const auto upper = transform<Rational>(f.upper_dense(), value);
  EXPECT_EQ(lower * upper, dense) << ex.file;

  c.compare("det", 0, 0, ex.det, oracle::oracle_det(dense));
  for (std::size_t i = 1; i <= ex.pivots.size(); ++i) c.compare("pivots", i, 0, ex.pivots[i - 1], upper(i, i));
  for (std::size_t i = 1; i <= ex.u_last_col.size(); ++i) c.compare("u_last_col", i, 0, ex.u_last_col[i - 1], upper(i, n));
  for (std::size_t j = 1; j <= ex.l_last_row.size(); ++j) c.compare("l_last_row", j, 0, ex.l_last_row[j - 1], lower(n, j));
  for (const auto& [d, lits] : ex.u_super) {
    for (std::size_t i = 1; i <= lits.size(); ++i) c.compare("u_super", i, d, lits[i - 1], upper(i, i + d));
  }
  for (const auto& [d, lits] : ex.l_sub) {
    for (std::size_t p = 1; p <= lits.size(); ++p) c.compare("l_sub", p + d, d, lits[p - 1], lower(p + d, p));
  }
  if (!ex.t.empty()) {
    const auto tinv = oracle::oracle_invert(lower);
    for (const auto& [r, lits] : ex.t) {
      for (std::size_t p = 0; p < lits.size(); ++p) c.compare("t", r + 1 + p, r, lits[p], tinv(r + 1 + p, r));
    }
  }
  if (!ex.columns.empty()) {
    const auto inv = oracle::oracle_invert(dense);
    for (const auto& [r, lits] : ex.columns) {
      for (std::size_t p = 0; p < lits.size(); ++p) c.compare("column", n - p, r, lits[p], inv(n - p, r));
    }
    c.compare_matrix("inverse_display", ex.inverse_display, inv);
    c.compare_matrix("anti_inverse_display", ex.anti_inverse_display,
                     oracle::oracle_invert(to_dense(reverse_columns(m))));
  }
  c.compare_matrix("m_display", ex.m_display, dense);
  if (!ex.rhs.empty()) {
    const auto y = testing::rationals(ex.rhs);
    const auto x = oracle::oracle_solve(dense, y);
    // z = U x solves L z = y.
    const auto ux = upper * std::span<const Rational>(x);
    EXPECT_EQ(lower * std::span<const Rational>(ux), y) << ex.file;
    for (std::size_t i = 1; i <= n; ++i) {
      c.compare("z", i, 0, ex.z[i - 1], ux[i - 1]);
      c.compare("x", i, 0, ex.x[i - 1], x[i - 1]);
    }
  }
  return c.findings;
}

std::string show(const std::set<Finding>& s) {
  std::ostringstream os;
  for (const auto& [ex, q, i, j, printed, exact] : s) {
    os << "  " << ex << " " << q << " (" << i << "," << j << ") printed " << printed << " exact " << exact << "\n";
  }
  return os.str();
}

TEST(WorkedExamples, EveryDiscrepancyIsCatalogued) {
  std::set<Finding> found;
  for (const auto* ex : {&testing::example_one(), &testing::example_two(), &testing::example_three()}) {
    const auto part = census(*ex);
    found.insert(part.begin(), part.end());
  }
  std::set<Finding> catalogued;
  for (const auto& m : testing::known_misprints()) catalogued.insert({m.example, m.quantity, m.i, m.j, m.printed, m.exact});
  EXPECT_EQ(found, catalogued) << "found:\n" << show(found) << "catalogued:\n" << show(catalogued);
}

TEST(WorkedExamples, PrintedAntiBandedMatrices) {
  const auto m1 = testing::load_pkb("ex1.pkb");
  EXPECT_EQ(testing::literal_matrix(testing::example_one(), testing::example_one().n_display, "n_display", false),
            to_dense(reverse_columns(m1)));
  // The second printed anti-banded matrix is R M rather than M R; its printed
  // inverse is still the inverse of M R.
  const auto m2 = testing::load_pkb("ex2.pkb");
  const auto printed = testing::literal_matrix(testing::example_two(), testing::example_two().n_display, "n_display", false);
  EXPECT_EQ(printed, reverse_rows(to_dense(m2)));
  EXPECT_NE(printed, to_dense(reverse_columns(m2)));
}

TEST(WorkedExamples, ColumnListsDisagreeWithDisplaysOnlyAtCataloguedPositions) {
  // Where the assembled display and the column list of the same example
  // disagree, the oracle sides with exactly one of them.
  for (const auto* ex : {&testing::example_one(), &testing::example_two()}) {
    const auto inv = oracle::oracle_invert(to_dense(testing::load_pkb(ex->file)));
    const auto display = testing::literal_matrix(*ex, ex->inverse_display, "inverse_display", false);
    for (std::size_t r = 1; r <= inv.cols(); ++r) {
      const auto listed = testing::inverse_column(*ex, r, false);
      for (std::size_t i = 1; i <= inv.rows(); ++i) {
        if (listed[i - 1] == display(i, r)) continue;
        EXPECT_TRUE(listed[i - 1] == inv(i, r) || display(i, r) == inv(i, r)) << ex->file << " (" << i << "," << r << ")";
      }
    }
  }
}

}  // namespace
}  // namespace perioband
