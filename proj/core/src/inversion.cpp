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

#include "perioband/inversion.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "perioband/error.hpp"

namespace perioband {

template <class T>
T LInverseColumns<T>::at(std::size_t i, std::size_t r) const {
  if (i == r) return T(1);
  if (i < r) return T(0);
  const auto it = cols.find(r);
  if (it == cols.end()) raise(ErrorCode::kInvalidInput, "column " + std::to_string(r) + " of L^-1 not computed");
  return it->second[i - r - 1];
}

template <class T>
DenseMatrix<T> InverseColumns<T>::assemble() const {
  if (!complete()) raise(ErrorCode::kInvalidInput, "inverse columns are incomplete");
  DenseMatrix<T> out(n, n);
  for (const auto& [r, col] : cols) {
    for (std::size_t i = 1; i <= n; ++i) out(i, r) = col[i - 1];
  }
  return out;
}

template <class T>
LInverseColumns<T> linverse_columns(const LUFactors<T>& f, const std::set<std::size_t>& wanted) {
  const std::size_t n = f.order();
  const std::size_t h = f.half_bandwidth();
  LInverseColumns<T> out;
  out.n = n;
  for (const std::size_t r : wanted) {
    if (r < 1 || r >= n) raise(ErrorCode::kInvalidInput, "L^-1 column " + std::to_string(r) + " outside [1, n-1]");
    // col[i - r - 1] = t(i, r); t(r, r) = 1 is implicit.
    std::vector<T> col(n - r, T(0));
    auto t_at = [&](std::size_t j) -> T { return j == r ? T(1) : col[j - r - 1]; };
    for (std::size_t i = r + 1; i < n; ++i) {
      // Row i < n of L is banded: l(i, j) = 0 for j < i - h.
      const std::size_t lo = std::max(r, i > h ? i - h : 1);
      T s(0);
      for (std::size_t j = lo; j < i; ++j) s -= f.l_band(i, j) * t_at(j);
      col[i - r - 1] = std::move(s);
    }
    T s(0);
    for (std::size_t j = r; j < n; ++j) s -= f.l_last_row(j) * t_at(j);
    col[n - r - 1] = std::move(s);
    out.cols.emplace(r, std::move(col));
  }
  return out;
}

template <class T>
InverseColumns<T> last_columns(const LUFactors<T>& f, const LInverseColumns<T>& t) {
  const std::size_t n = f.order();
  const std::size_t h = f.half_bandwidth();
  const std::size_t m = n - h;
  InverseColumns<T> out;
  out.n = n;
  for (std::size_t r = n; r >= m; --r) {
    if (r < n && !t.cols.contains(r)) {
      raise(ErrorCode::kInvalidInput, "last_columns needs L^-1 column " + std::to_string(r));
    }
    std::vector<T> col(n, T(0));
    for (std::size_t i = n; i >= 1; --i) {
      T s = i > r ? t.at(i, r) : T(i == r ? 1 : 0);
      if (i < n) {
        const std::size_t hi = std::min(i + h, n - 1);
        for (std::size_t j = i + 1; j <= hi; ++j) s -= f.u_band(i, j) * col[j - 1];
        s -= f.u_last_col(i) * col[n - 1];
      }
      s /= f.pivot(i);
      col[i - 1] = std::move(s);
    }
    out.cols.emplace(r, std::move(col));
  }
  return out;
}

template <class T>
InverseColumns<T> remaining_columns(const PeriodicBandMatrix<T>& work, InverseColumns<T> partial) {
  const std::size_t n = work.order();
  const std::size_t h = work.half_bandwidth();
  if (partial.n != n) raise(ErrorCode::kDimensionMismatch, "inverse columns do not match the matrix order");
  if (n < h + 2) return partial;
  for (std::size_t j = n - h - 1; j >= 1; --j) {
    const std::size_t c = j + h;
    const std::size_t r_hi = std::min(j + 2 * h, n);
    std::vector<T> col(n, T(0));
    col[c - 1] = T(1);
    for (std::size_t r = j + 1; r <= r_hi; ++r) {
      const T& coeff = work.band(r, c);
      if (coeff == T(0)) continue;
      const auto it = partial.cols.find(r);
      if (it == partial.cols.end()) {
        raise(ErrorCode::kInvalidInput, "remaining_columns needs column " + std::to_string(r));
      }
      const std::vector<T>& cr = it->second;
      for (std::size_t i = 0; i < n; ++i) {
        if (cr[i] == T(0)) continue;
        col[i] -= coeff * cr[i];
      }
    }
    const T& divisor = work.band(j, c);
    if (divisor == T(0)) {
      raise(ErrorCode::kInternalInconsistency, "a(" + std::to_string(j) + "," + std::to_string(c) +
                                                   ") is zero in the working matrix");
    }
    for (auto& v : col) {
      if (!(v == T(0))) v /= divisor;
    }
    partial.cols.insert_or_assign(j, std::move(col));
  }
  return partial;
}

namespace {

template <class T>
InverseColumns<T> inverse_columns(const LUFactors<T>& f) {
  const std::size_t n = f.order();
  std::set<std::size_t> wanted;
  for (std::size_t r = n - f.half_bandwidth(); r < n; ++r) wanted.insert(r);
  const LInverseColumns<T> t = linverse_columns(f, wanted);
  return remaining_columns(f.working(), last_columns(f, t));
}

}  // namespace

// det(M(x)) M(x)^{-1} is a polynomial in x of degree at most the number of
// λ entries in the working matrix, since every entry is affine in λ. Samples
// at that many plus one nonzero points fix it; its value at 0 over det(M(0))
// is M^{-1}.
DenseMatrix<Rational> invert(const LUFactors<LambdaRational>& f) {
  const Rational det = determinant(f);
  if (det.is_zero()) raise(ErrorCode::kSingularMatrix, "Singular Matrix");
  const std::size_t n = f.order();

  auto sample = [&f](const Rational& x) {
    return factorize_plain(
        transform<Rational>(f.working(), [&x](const LambdaRational& v) { return v.evaluate(x); }));
  };

  if (!f.used_lambda()) {
    const auto plain = sample(Rational(0));
    if (!plain) raise(ErrorCode::kInternalInconsistency, "zero pivot without substitution");
    return inverse_columns(*plain).assemble();
  }

  const std::size_t needed = f.substitutions().size() + 1;
  // Each pivot has at most `needed` roots, so this bound is never reached for
  // a consistent factorization.
  const long give_up = static_cast<long>(needed * (n + 1) + 1);
  std::vector<Rational> points;
  std::vector<DenseMatrix<Rational>> values;
  for (long x = 1; points.size() < needed; ++x) {
    if (x > give_up) raise(ErrorCode::kInternalInconsistency, "no regular sample points for the inverse");
    const auto g = sample(Rational(x));
    if (!g) continue;
    Rational scale(1);
    for (std::size_t i = 1; i <= n; ++i) scale *= g->pivot(i);
    DenseMatrix<Rational> v = inverse_columns(*g).assemble();
    for (auto& e : v.entries()) e *= scale;
    points.emplace_back(x);
    values.push_back(std::move(v));
  }

  DenseMatrix<Rational> out(n, n);
  for (std::size_t t = 0; t < points.size(); ++t) {
    Rational w(1);
    for (std::size_t u = 0; u < points.size(); ++u) {
      if (u != t) w *= points[u] / (points[u] - points[t]);
    }
    w /= det;
    const auto& src = values[t].entries();
    auto& dst = out.entries();
    for (std::size_t e = 0; e < dst.size(); ++e) dst[e] += w * src[e];
  }
  return out;
}

DenseMatrix<Rational> invert_symbolic(const LUFactors<LambdaRational>& f) {
  if (determinant(f).is_zero()) raise(ErrorCode::kSingularMatrix, "Singular Matrix");
  const InverseColumns<LambdaRational> cols = inverse_columns(f);
  const std::size_t n = f.order();
  DenseMatrix<Rational> out(n, n);
  for (const auto& [r, col] : cols.cols) {
    for (std::size_t i = 1; i <= n; ++i) {
      try {
        out(i, r) = col[i - 1].evaluate_at_zero();
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kPoleAtZero) throw;
        raise(ErrorCode::kSingularMatrix, "Singular Matrix (inverse entry (" + std::to_string(i) + "," +
                                              std::to_string(r) + ") diverges at λ = 0)");
      }
    }
  }
  return out;
}

DenseMatrix<Rational> invert(const PeriodicBandMatrix<Rational>& m) { return invert(factorize(m)); }

DenseMatrix<double> invert(const LUFactors<double>& f) { return inverse_columns(f).assemble(); }

DenseMatrix<double> invert(const PeriodicBandMatrix<double>& m, double zero_tolerance) {
  return invert(factorize(m, zero_tolerance));
}

DenseMatrix<Rational> invert_anti(const AntiPeriodicBandMatrix<Rational>& nmat) {
  return reverse_rows(invert(apbm_to_pbm(nmat)));
}

DenseMatrix<double> invert_anti(const AntiPeriodicBandMatrix<double>& nmat, double zero_tolerance) {
  return reverse_rows(invert(apbm_to_pbm(nmat), zero_tolerance));
}

#define PERIOBAND_INSTANTIATE_INVERSION(T)                                                          \
  template struct LInverseColumns<T>;                                                              \
  template struct InverseColumns<T>;                                                               \
  template LInverseColumns<T> linverse_columns<T>(const LUFactors<T>&, const std::set<std::size_t>&); \
  template InverseColumns<T> last_columns<T>(const LUFactors<T>&, const LInverseColumns<T>&);      \
  template InverseColumns<T> remaining_columns<T>(const PeriodicBandMatrix<T>&, InverseColumns<T>);

PERIOBAND_INSTANTIATE_INVERSION(LambdaRational)
PERIOBAND_INSTANTIATE_INVERSION(Rational)
PERIOBAND_INSTANTIATE_INVERSION(double)

#undef PERIOBAND_INSTANTIATE_INVERSION

}  // namespace perioband
