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

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "perioband/error.hpp"

namespace perioband {

/// Row-major dense matrix with 1-based element access.
template <class T>
class DenseMatrix {
 public:
  using value_type = T;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      raise(ErrorCode::kLengthMismatch, "dense matrix expects " + std::to_string(rows_ * cols_) +
                                            " entries, got " + std::to_string(entries_.size()));
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix out(n, n);
    for (std::size_t i = 1; i <= n; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[(i - 1) * cols_ + (j - 1)]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[(i - 1) * cols_ + (j - 1)]; }

  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }
  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }

  std::span<const T> row(std::size_t i) const { return {entries_.data() + (i - 1) * cols_, cols_}; }
  std::span<T> row(std::size_t i) { return {entries_.data() + (i - 1) * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 1; i <= rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  const std::vector<T>& entries() const { return entries_; }
  std::vector<T>& entries() { return entries_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      raise(ErrorCode::kIndexOutOfRange, "(" + std::to_string(i) + "," + std::to_string(j) +
                                             ") outside " + std::to_string(rows_) + "x" +
                                             std::to_string(cols_));
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

template <class T>
DenseMatrix<T> operator*(const DenseMatrix<T>& lhs, const DenseMatrix<T>& rhs) {
  if (lhs.cols() != rhs.rows()) raise(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
  DenseMatrix<T> out(lhs.rows(), rhs.cols());
  for (std::size_t i = 1; i <= lhs.rows(); ++i) {
    for (std::size_t p = 1; p <= lhs.cols(); ++p) {
      const T& a = lhs(i, p);
      if (a == T(0)) continue;
      for (std::size_t j = 1; j <= rhs.cols(); ++j) {
        if (rhs(p, j) == T(0)) continue;
        out(i, j) += a * rhs(p, j);
      }
    }
  }
  return out;
}

template <class T>
std::vector<T> operator*(const DenseMatrix<T>& lhs, std::span<const T> x) {
  if (lhs.cols() != x.size()) raise(ErrorCode::kDimensionMismatch, "matrix-vector shape mismatch");
  std::vector<T> out(lhs.rows());
  for (std::size_t i = 1; i <= lhs.rows(); ++i) {
    for (std::size_t j = 1; j <= lhs.cols(); ++j) {
      if (lhs(i, j) == T(0) || x[j - 1] == T(0)) continue;
      out[i - 1] += lhs(i, j) * x[j - 1];
    }
  }
  return out;
}

/// Row i of the result is row rows+1-i of `d`: left multiplication by the
/// exchange matrix.
template <class T>
DenseMatrix<T> reverse_rows(const DenseMatrix<T>& d) {
  std::vector<T> out;
  out.reserve(d.rows() * d.cols());
  for (std::size_t i = d.rows(); i >= 1; --i) {
    const auto r = d.row(i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return DenseMatrix<T>(d.rows(), d.cols(), std::move(out));
}

template <class U, class T, class F>
DenseMatrix<U> transform(const DenseMatrix<T>& d, F&& f) {
  std::vector<U> out;
  out.reserve(d.entries().size());
  for (const auto& v : d.entries()) out.push_back(f(v));
  return DenseMatrix<U>(d.rows(), d.cols(), std::move(out));
}

}  // namespace perioband
