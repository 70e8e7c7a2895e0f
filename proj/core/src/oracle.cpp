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

#include "perioband/oracle.hpp"

#include <utility>

#include "perioband/error.hpp"

namespace perioband::oracle {

namespace {

void require_square(const DenseMatrix<Rational>& d) {
  if (!d.is_square()) raise(ErrorCode::kDimensionMismatch, "oracle needs a square matrix");
}

// Reduces the augmented system [a | b] in place to [I | a^{-1} b].
void gauss_jordan(std::vector<std::vector<Rational>>& a, std::vector<std::vector<Rational>>& b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) raise(ErrorCode::kSingularMatrix, "Singular Matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);

    const Rational inv = Rational(1) / a[col][col];
    for (auto& v : a[col]) {
      if (!v.is_zero()) v *= inv;
    }
    for (auto& v : b[col]) {
      if (!v.is_zero()) v *= inv;
    }

    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = col; j < n; ++j) {
        if (!a[col][j].is_zero()) a[row][j] -= factor * a[col][j];
      }
      for (std::size_t j = 0; j < b[col].size(); ++j) {
        if (!b[col][j].is_zero()) b[row][j] -= factor * b[col][j];
      }
    }
  }
}

std::vector<std::vector<Rational>> rows_of(const DenseMatrix<Rational>& d) {
  std::vector<std::vector<Rational>> out(d.rows());
  for (std::size_t i = 1; i <= d.rows(); ++i) {
    const auto r = d.row(i);
    out[i - 1].assign(r.begin(), r.end());
  }
  return out;
}

}  // namespace

Rational oracle_det(const DenseMatrix<Rational>& d) {
  require_square(d);
  const std::size_t n = d.rows();
  if (n == 0) return Rational(1);
  std::vector<std::vector<Rational>> a = rows_of(d);
  Rational sign(1);
  Rational previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Rational(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
      a[i][k] = Rational(0);
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

DenseMatrix<Rational> oracle_invert(const DenseMatrix<Rational>& d) {
  require_square(d);
  const std::size_t n = d.rows();
  std::vector<std::vector<Rational>> a = rows_of(d);
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = Rational(1);
  gauss_jordan(a, b);
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (auto& row : b) {
    for (auto& v : row) entries.push_back(std::move(v));
  }
  return DenseMatrix<Rational>(n, n, std::move(entries));
}

std::vector<Rational> oracle_solve(const DenseMatrix<Rational>& d, std::span<const Rational> y) {
  require_square(d);
  const std::size_t n = d.rows();
  if (y.size() != n) raise(ErrorCode::kDimensionMismatch, "right-hand side length mismatch");
  std::vector<std::vector<Rational>> a = rows_of(d);
  std::vector<std::vector<Rational>> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = {y[i]};
  gauss_jordan(a, b);
  std::vector<Rational> x;
  x.reserve(n);
  for (auto& row : b) x.push_back(std::move(row[0]));
  return x;
}

Rational oracle_exchange_det(std::size_t n) {
  if (n < 1) raise(ErrorCode::kInvalidInput, "exchange matrix order must be >= 1");
  DenseMatrix<Rational> r(n, n);
  for (std::size_t i = 1; i <= n; ++i) r(i, n + 1 - i) = Rational(1);
  return oracle_det(r);
}

OracleReport oracle_report(const DenseMatrix<Rational>& d) {
  OracleReport report;
  report.det = oracle_det(d);
  if (report.det.is_zero()) return report;
  report.inverse = oracle_invert(d);
  const auto identity = DenseMatrix<Rational>::identity(d.rows());
  report.residual_zero = d * *report.inverse == identity && *report.inverse * d == identity;
  return report;
}

}  // namespace perioband::oracle
