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

#include "perioband/linear_solve.hpp"

#include <algorithm>
#include <string>

#include "perioband/error.hpp"

namespace perioband {

namespace {

template <class Work, class Value>
void substitute(const LUFactors<Work>& f, std::span<const Value> y, std::vector<Work>& z,
                std::vector<Work>& x) {
  const std::size_t n = f.order();
  const std::size_t h = f.half_bandwidth();
  if (y.size() != n) {
    raise(ErrorCode::kDimensionMismatch, "right-hand side has " + std::to_string(y.size()) +
                                             " entries, matrix order is " + std::to_string(n));
  }

  z.assign(n, Work(0));
  for (std::size_t i = 1; i < n; ++i) {
    Work s(y[i - 1]);
    for (std::size_t j = i > h ? i - h : 1; j < i; ++j) s -= f.l_band(i, j) * z[j - 1];
    z[i - 1] = std::move(s);
  }
  {
    Work s(y[n - 1]);
    for (std::size_t j = 1; j < n; ++j) s -= f.l_last_row(j) * z[j - 1];
    z[n - 1] = std::move(s);
  }

  // Backward sweep. u(i, j) for j > min(i+h, n-1) is zero except the last
  // column, which covers both the i >= n-h band tail and the fill-in rows.
  x.assign(n, Work(0));
  x[n - 1] = z[n - 1] / f.pivot(n);
  for (std::size_t i = n - 1; i >= 1; --i) {
    Work s = z[i - 1];
    const std::size_t hi = std::min(i + h, n - 1);
    for (std::size_t j = i + 1; j <= hi; ++j) s -= f.u_band(i, j) * x[j - 1];
    s -= f.u_last_col(i) * x[n - 1];
    s /= f.pivot(i);
    x[i - 1] = std::move(s);
  }
}

}  // namespace

ExactSolveOutcome solve(const LUFactors<LambdaRational>& f, std::span<const Rational> y) {
  ExactSolveOutcome out;
  out.det = determinant(f);
  out.used_lambda = f.used_lambda();
  if (out.det.is_zero()) raise(ErrorCode::kSingularMatrix, "Singular Matrix");

  std::vector<LambdaRational> x;
  substitute(f, y, out.z, x);
  out.x.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    try {
      out.x.push_back(x[i].evaluate_at_zero());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPoleAtZero) throw;
      raise(ErrorCode::kSingularMatrix, "Singular Matrix (x_" + std::to_string(i + 1) + " diverges at λ = 0)");
    }
  }
  return out;
}

ExactSolveOutcome solve(const PeriodicBandMatrix<Rational>& m, std::span<const Rational> y) {
  if (y.size() != m.order()) {
    raise(ErrorCode::kDimensionMismatch, "right-hand side has " + std::to_string(y.size()) +
                                             " entries, matrix order is " + std::to_string(m.order()));
  }
  return solve(factorize(m), y);
}

FloatSolveOutcome solve(const LUFactors<double>& f, std::span<const double> y) {
  FloatSolveOutcome out;
  out.det = determinant(f);
  substitute(f, y, out.z, out.x);
  return out;
}

FloatSolveOutcome solve(const PeriodicBandMatrix<double>& m, std::span<const double> y,
                        double zero_tolerance) {
  if (y.size() != m.order()) {
    raise(ErrorCode::kDimensionMismatch, "right-hand side has " + std::to_string(y.size()) +
                                             " entries, matrix order is " + std::to_string(m.order()));
  }
  return solve(factorize(m, zero_tolerance), y);
}

}  // namespace perioband
