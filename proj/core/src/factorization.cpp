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

#include "perioband/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "perioband/error.hpp"

namespace perioband {

template <class T>
LUFactors<T>::LUFactors(PeriodicBandMatrix<T> working)
    : n_(working.order()),
      k_(working.bandwidth()),
      h_(working.half_bandwidth()),
      lower_(n_ * h_, T(0)),
      upper_(n_ * (h_ + 1), T(0)),
      last_row_(n_ - 1, T(0)),
      last_col_(n_ - 1, T(0)),
      unn_(T(0)),
      working_(std::move(working)) {}

template <class T>
T LUFactors<T>::lower(std::size_t i, std::size_t j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) raise(ErrorCode::kIndexOutOfRange, "L index out of range");
  if (i == j) return T(1);
  if (j > i) return T(0);
  if (i == n_) return l_last_row(j);
  if (i - j <= h_) return l_band(i, j);
  return T(0);
}

template <class T>
T LUFactors<T>::upper(std::size_t i, std::size_t j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) raise(ErrorCode::kIndexOutOfRange, "U index out of range");
  if (j < i) return T(0);
  if (j == n_) return i == n_ ? unn_ : u_last_col(i);
  if (j - i <= h_) return u_band(i, j);
  return T(0);
}

template <class T>
DenseMatrix<T> LUFactors<T>::lower_dense() const {
  DenseMatrix<T> out(n_, n_);
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = 1; j <= i; ++j) out(i, j) = lower(i, j);
  }
  return out;
}

template <class T>
DenseMatrix<T> LUFactors<T>::upper_dense() const {
  DenseMatrix<T> out(n_, n_);
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = i; j <= n_; ++j) out(i, j) = upper(i, j);
  }
  return out;
}

template class LUFactors<LambdaRational>;
template class LUFactors<Rational>;
template class LUFactors<double>;

namespace {

// Entries are produced row by row. Within row i < n: l(i, r) left to right,
// then the pivot u(i, i), then u(i, r) for r up to min(i+h, n-1), then the
// last-column entry u(i, n). Row n: l(n, r) for r = 1..n-1, then u(n, n).
// `on_pivot(i, value)` sees every pivot before it is stored and may replace
// it.
template <class T, class PivotHook>
void run_doolittle(LUFactors<T>& f, PivotHook&& on_pivot) {
  const std::size_t n = f.order();
  const std::size_t h = f.half_bandwidth();

  for (std::size_t i = 1; i < n; ++i) {
    const PeriodicBandMatrix<T>& a = f.working();
    const std::size_t lo = i > h ? i - h : 1;

    for (std::size_t r = lo; r < i; ++r) {
      T s = a.band(i, r);
      for (std::size_t j = lo; j < r; ++j) s -= f.l_band(i, j) * f.u_band(j, r);
      s /= f.pivot(r);
      f.l_band(i, r) = std::move(s);
    }

    {
      T s = a.band(i, i);
      for (std::size_t j = lo; j < i; ++j) s -= f.l_band(i, j) * f.u_band(j, i);
      f.pivot_ref(i) = on_pivot(i, std::move(s));
    }

    const std::size_t r_hi = std::min(i + h, n - 1);
    for (std::size_t r = i + 1; r <= r_hi; ++r) {
      T s = f.working().band(i, r);
      const std::size_t j_lo = std::max(lo, r > h ? r - h : 1);
      for (std::size_t j = j_lo; j < i; ++j) s -= f.l_band(i, j) * f.u_band(j, r);
      f.u_band(i, r) = std::move(s);
    }

    {
      T s = i == 1 ? f.working().corner_1n() : (i + h >= n ? f.working().band(i, n) : T(0));
      for (std::size_t j = lo; j < i; ++j) s -= f.l_band(i, j) * f.u_last_col(j);
      f.u_last_col(i) = std::move(s);
    }
  }

  const PeriodicBandMatrix<T>& a = f.working();
  for (std::size_t r = 1; r < n; ++r) {
    T s = r == 1 ? a.corner_n1() : (r + h >= n ? a.band(n, r) : T(0));
    const std::size_t j_lo = r > h ? r - h : 1;
    for (std::size_t j = j_lo; j < r; ++j) s -= f.l_last_row(j) * f.u_band(j, r);
    s /= f.pivot(r);
    f.l_last_row(r) = std::move(s);
  }
  T s = a.band(n, n);
  for (std::size_t j = 1; j < n; ++j) s -= f.l_last_row(j) * f.u_last_col(j);
  f.pivot_ref(n) = on_pivot(n, std::move(s));
}

std::vector<double> row_scales(const PeriodicBandMatrix<double>& m) {
  const std::size_t n = m.order();
  const std::size_t h = m.half_bandwidth();
  std::vector<double> scale(n + 1, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > h ? i - h : 1;
    const std::size_t hi = std::min(i + h, n);
    for (std::size_t j = lo; j <= hi; ++j) scale[i] = std::max(scale[i], std::fabs(m.band(i, j)));
  }
  scale[1] = std::max(scale[1], std::fabs(m.corner_1n()));
  scale[n] = std::max(scale[n], std::fabs(m.corner_n1()));
  return scale;
}

struct ZeroPivot {};

[[noreturn]] void refuse(const std::string& what) {
  raise(ErrorCode::kZeroPivotNeedsExact, what + "; exact mode is required for this matrix");
}

}  // namespace

LUFactors<LambdaRational> factorize(const PeriodicBandMatrix<Rational>& m) {
  PeriodicBandMatrix<LambdaRational> work =
      transform<LambdaRational>(m, [](const Rational& v) { return LambdaRational(v); });
  const std::size_t n = m.order();
  const std::size_t h = m.half_bandwidth();

  std::vector<Substitution> band_subs;
  for (std::size_t i = 1; i + h + 1 <= n; ++i) {
    if (work.band(i, i + h).is_zero()) {
      work.band(i, i + h) = LambdaRational::lambda();
      band_subs.push_back({SubstitutionKind::kBandSuper, i, i + h});
    }
  }
  for (std::size_t i = h + 2; i <= n; ++i) {
    if (work.band(i, i - h).is_zero()) {
      work.band(i, i - h) = LambdaRational::lambda();
      band_subs.push_back({SubstitutionKind::kBandSub, i, i - h});
    }
  }

  LUFactors<LambdaRational> f(std::move(work));
  for (const auto& s : band_subs) f.record(s);

  run_doolittle(f, [&f](std::size_t i, LambdaRational pivot) {
    if (!pivot.is_zero()) return pivot;
    // L U then carries λ at (i, i); keep the working matrix in step.
    f.mutable_working().band(i, i) += LambdaRational::lambda();
    f.record({SubstitutionKind::kPivot, i, i});
    return LambdaRational::lambda();
  });
  return f;
}

LUFactors<double> factorize(const PeriodicBandMatrix<double>& m, double zero_tolerance) {
  if (!(zero_tolerance >= 0.0)) raise(ErrorCode::kInvalidInput, "zero tolerance must be >= 0");
  const std::size_t n = m.order();
  const std::size_t h = m.half_bandwidth();
  const std::vector<double> scale = row_scales(m);

  for (std::size_t i = 1; i + h + 1 <= n; ++i) {
    if (std::fabs(m.band(i, i + h)) <= zero_tolerance * scale[i]) {
      refuse("a(" + std::to_string(i) + "," + std::to_string(i + h) + ") is zero");
    }
  }
  for (std::size_t i = h + 2; i <= n; ++i) {
    if (std::fabs(m.band(i, i - h)) <= zero_tolerance * scale[i]) {
      refuse("a(" + std::to_string(i) + "," + std::to_string(i - h) + ") is zero");
    }
  }

  LUFactors<double> f(m);
  run_doolittle(f, [&scale, zero_tolerance](std::size_t i, double pivot) {
    if (std::fabs(pivot) <= zero_tolerance * scale[i]) {
      refuse("pivot u(" + std::to_string(i) + "," + std::to_string(i) + ") is zero within tolerance");
    }
    return pivot;
  });
  return f;
}

std::optional<LUFactors<Rational>> factorize_plain(const PeriodicBandMatrix<Rational>& m) {
  LUFactors<Rational> f(m);
  try {
    run_doolittle(f, [](std::size_t, Rational pivot) {
      if (pivot.is_zero()) throw ZeroPivot{};
      return pivot;
    });
  } catch (const ZeroPivot&) {
    return std::nullopt;
  }
  return f;
}

LambdaRational pivot_product(const LUFactors<LambdaRational>& f) {
  LambdaRational product(1);
  for (std::size_t i = 1; i <= f.order(); ++i) product *= f.pivot(i);
  return product;
}

Rational determinant(const LUFactors<LambdaRational>& f) {
  try {
    return pivot_product(f).evaluate_at_zero();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kPoleAtZero) throw;
    raise(ErrorCode::kInternalInconsistency, std::string("pivot product has a pole at 0: ") + e.what());
  }
}

double determinant(const LUFactors<double>& f) {
  double product = 1.0;
  for (std::size_t i = 1; i <= f.order(); ++i) product *= f.pivot(i);
  return product;
}

}  // namespace perioband
