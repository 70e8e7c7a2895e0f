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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "perioband/dense_matrix.hpp"
#include "perioband/error.hpp"
#include "perioband/scalar.hpp"

namespace perioband {

/// Throws InvalidBandwidth unless k is odd, k >= 3 and n >= k + 1.
void validate_shape(std::size_t n, std::size_t k);

/// n x n matrix that is zero outside the band |i - j| <= h, h = (k - 1) / 2,
/// except for the two corner entries (1, n) and (n, 1). Stored as one
/// sequence per diagonal offset plus the two corners; indices are 1-based.
template <class T>
class PeriodicBandMatrix {
 public:
  using value_type = T;

  /// All-zero matrix of the given shape.
  PeriodicBandMatrix(std::size_t n, std::size_t k) : n_(n), k_(k), h_((k - 1) / 2) {
    validate_shape(n, k);
    diagonals_.resize(k_);
    for (std::size_t idx = 0; idx < k_; ++idx) diagonals_[idx].assign(n_ - distance(idx), T(0));
    corner_1n_ = T(0);
    corner_n1_ = T(0);
  }

  /// `diagonals[idx]` holds offset idx - h, i.e. entries a(i, i + d) in
  /// increasing row order.
  PeriodicBandMatrix(std::size_t n, std::size_t k, std::vector<std::vector<T>> diagonals,
                     T corner_1n, T corner_n1)
      : n_(n), k_(k), h_((k - 1) / 2), diagonals_(std::move(diagonals)),
        corner_1n_(std::move(corner_1n)), corner_n1_(std::move(corner_n1)) {
    validate_shape(n, k);
    validate_layout();
  }

  std::size_t order() const { return n_; }
  std::size_t bandwidth() const { return k_; }
  std::size_t half_bandwidth() const { return h_; }

  /// True when (i, j) lies in the band or on one of the two corners.
  bool in_pattern(std::size_t i, std::size_t j) const {
    return in_band(i, j) || (i == 1 && j == n_) || (i == n_ && j == 1);
  }
  bool in_band(std::size_t i, std::size_t j) const {
    return (i > j ? i - j : j - i) <= h_;
  }

  /// a(i, j), zero outside the pattern. Throws IndexOutOfRange.
  T get(std::size_t i, std::size_t j) const {
    check_index(i, j);
    if (in_band(i, j)) return band(i, j);
    if (i == 1 && j == n_) return corner_1n_;
    if (i == n_ && j == 1) return corner_n1_;
    return T(0);
  }

  /// Throws IndexOutOfRange, or PatternViolation for a position outside
  /// the band and corners.
  void set(std::size_t i, std::size_t j, T value) {
    check_index(i, j);
    if (in_band(i, j)) {
      band(i, j) = std::move(value);
    } else if (i == 1 && j == n_) {
      corner_1n_ = std::move(value);
    } else if (i == n_ && j == 1) {
      corner_n1_ = std::move(value);
    } else {
      raise(ErrorCode::kPatternViolation, "(" + std::to_string(i) + "," + std::to_string(j) +
                                              ") is outside the periodic band pattern");
    }
  }

  // Unchecked band access; requires |i - j| <= h.
  const T& band(std::size_t i, std::size_t j) const {
    return diagonals_[j + h_ - i][(i < j ? i : j) - 1];
  }
  T& band(std::size_t i, std::size_t j) { return diagonals_[j + h_ - i][(i < j ? i : j) - 1]; }

  /// Entries of offset d in [-h, h], increasing row order.
  const std::vector<T>& diagonal(long offset) const {
    return diagonals_.at(static_cast<std::size_t>(offset + static_cast<long>(h_)));
  }
  const std::vector<std::vector<T>>& diagonals() const { return diagonals_; }

  const T& corner_1n() const { return corner_1n_; }
  const T& corner_n1() const { return corner_n1_; }

  friend bool operator==(const PeriodicBandMatrix&, const PeriodicBandMatrix&) = default;

 private:
  std::size_t distance(std::size_t idx) const { return idx > h_ ? idx - h_ : h_ - idx; }

  void validate_layout() const {
    if (diagonals_.size() != k_) {
      raise(ErrorCode::kLengthMismatch, "expected " + std::to_string(k_) + " diagonals, got " +
                                            std::to_string(diagonals_.size()));
    }
    for (std::size_t idx = 0; idx < k_; ++idx) {
      if (diagonals_[idx].size() != n_ - distance(idx)) {
        raise(ErrorCode::kLengthMismatch,
              "diagonal " + std::to_string(static_cast<long>(idx) - static_cast<long>(h_)) +
                  " has " + std::to_string(diagonals_[idx].size()) + " entries, expected " +
                  std::to_string(n_ - distance(idx)));
      }
    }
  }

  void check_index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      raise(ErrorCode::kIndexOutOfRange, "(" + std::to_string(i) + "," + std::to_string(j) +
                                             ") outside order " + std::to_string(n_));
    }
  }

  std::size_t n_;
  std::size_t k_;
  std::size_t h_;
  std::vector<std::vector<T>> diagonals_;
  T corner_1n_;
  T corner_n1_;
};

/// Column-reversed image N = M R of a periodic band matrix: nonzero only for
/// |i + j - (n + 1)| <= h plus the corners (1, 1) and (n, n).
///
/// Storage is shared with the periodic image: anti-diagonal d lists
/// N(i, n + 1 - i - d) in increasing row order, `corner_1n` is N(1, 1) and
/// `corner_n1` is N(n, n). Column reversal in either direction is therefore
/// a relabelling, never a copy of the entries into a new layout.
template <class T>
class AntiPeriodicBandMatrix {
 public:
  using value_type = T;

  explicit AntiPeriodicBandMatrix(PeriodicBandMatrix<T> image) : image_(std::move(image)) {}
  AntiPeriodicBandMatrix(std::size_t n, std::size_t k, std::vector<std::vector<T>> anti_diagonals,
                         T corner_11, T corner_nn)
      : image_(n, k, std::move(anti_diagonals), std::move(corner_11), std::move(corner_nn)) {}

  std::size_t order() const { return image_.order(); }
  std::size_t bandwidth() const { return image_.bandwidth(); }
  std::size_t half_bandwidth() const { return image_.half_bandwidth(); }

  bool in_pattern(std::size_t i, std::size_t j) const {
    return image_.in_pattern(i, mirror(j));
  }
  T get(std::size_t i, std::size_t j) const { return image_.get(i, mirror(j)); }
  void set(std::size_t i, std::size_t j, T value) { image_.set(i, mirror(j), std::move(value)); }

  const PeriodicBandMatrix<T>& periodic_image() const { return image_; }

  friend bool operator==(const AntiPeriodicBandMatrix&, const AntiPeriodicBandMatrix&) = default;

 private:
  std::size_t mirror(std::size_t j) const {
    if (j < 1 || j > order()) {
      raise(ErrorCode::kIndexOutOfRange, "column " + std::to_string(j) + " outside order " +
                                             std::to_string(order()));
    }
    return order() + 1 - j;
  }

  PeriodicBandMatrix<T> image_;
};

/// N = M R.
template <class T>
AntiPeriodicBandMatrix<T> reverse_columns(const PeriodicBandMatrix<T>& m) {
  return AntiPeriodicBandMatrix<T>(m);
}

/// M = N R, the inverse of reverse_columns.
template <class T>
PeriodicBandMatrix<T> apbm_to_pbm(const AntiPeriodicBandMatrix<T>& nmat) {
  return nmat.periodic_image();
}

template <class T>
DenseMatrix<T> to_dense(const PeriodicBandMatrix<T>& m) {
  const std::size_t n = m.order();
  const std::size_t h = m.half_bandwidth();
  DenseMatrix<T> out(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > h ? i - h : 1;
    const std::size_t hi = i + h < n ? i + h : n;
    for (std::size_t j = lo; j <= hi; ++j) out(i, j) = m.band(i, j);
  }
  out(1, n) = m.corner_1n();
  out(n, 1) = m.corner_n1();
  return out;
}

template <class T>
DenseMatrix<T> to_dense(const AntiPeriodicBandMatrix<T>& nmat) {
  const std::size_t n = nmat.order();
  DenseMatrix<T> out(n, n);
  const DenseMatrix<T> image = to_dense(nmat.periodic_image());
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) out(i, j) = image(i, n + 1 - j);
  }
  return out;
}

/// Extracts the band and corners of a square dense matrix. Throws
/// PatternViolation naming the first (row-major) nonzero outside the
/// pattern.
template <class T>
PeriodicBandMatrix<T> dense_to_pbm(const DenseMatrix<T>& d, std::size_t k) {
  if (!d.is_square()) raise(ErrorCode::kDimensionMismatch, "dense_to_pbm needs a square matrix");
  PeriodicBandMatrix<T> out(d.rows(), k);
  for (std::size_t i = 1; i <= d.rows(); ++i) {
    for (std::size_t j = 1; j <= d.cols(); ++j) {
      const T& v = d(i, j);
      if (out.in_pattern(i, j)) {
        out.set(i, j, v);
      } else if (!(v == T(0))) {
        raise(ErrorCode::kPatternViolation, "nonzero entry at (" + std::to_string(i) + "," +
                                                std::to_string(j) + ") outside the band of width " +
                                                std::to_string(k));
      }
    }
  }
  return out;
}

template <class U, class T, class F>
PeriodicBandMatrix<U> transform(const PeriodicBandMatrix<T>& m, F&& f) {
  std::vector<std::vector<U>> diagonals;
  diagonals.reserve(m.diagonals().size());
  for (const auto& diag : m.diagonals()) {
    std::vector<U> out;
    out.reserve(diag.size());
    for (const auto& v : diag) out.push_back(f(v));
    diagonals.push_back(std::move(out));
  }
  return PeriodicBandMatrix<U>(m.order(), m.bandwidth(), std::move(diagonals), f(m.corner_1n()),
                               f(m.corner_n1()));
}

}  // namespace perioband
