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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "perioband/band_matrix.hpp"
#include "perioband/dense_matrix.hpp"
#include "perioband/scalar.hpp"

namespace perioband {

// Line-oriented text formats. Lines starting with '#' and blank lines are
// ignored on input; writers never emit them.
//
//   PKB 1                        (APKB 1 for the anti-banded layout)
//   n <n> k <k> mode <exact|float>
//   corner_1n <value>
//   corner_n1 <value>
//   diag <offset> <v1> ... <v_{n-|offset|}>    (k lines, offsets ascending)
//
//   DENSE 1 / n <rows> <cols> / one line per row
//   VEC 1 / n <n> / n whitespace-separated values

enum class BandLayout { kPeriodic, kAntiPeriodic };

struct BandHeader {
  BandLayout layout = BandLayout::kPeriodic;
  std::size_t n = 0;
  std::size_t k = 0;
  ScalarKind mode = ScalarKind::kExactLambda;
};

/// A parsed PKB/APKB file whose values are kept as literals until the caller
/// picks a scalar type.
class BandDocument {
 public:
  BandDocument(BandHeader header, std::string corner_1n, std::string corner_n1,
               std::vector<std::vector<std::string>> diagonals);

  const BandHeader& header() const { return header_; }
  bool is_anti() const { return header_.layout == BandLayout::kAntiPeriodic; }

  /// The stored matrix read in the periodic layout; for an APKB file this is
  /// the column-reversed image.
  template <class T>
  PeriodicBandMatrix<T> periodic() const;

  template <class T>
  AntiPeriodicBandMatrix<T> anti() const {
    return AntiPeriodicBandMatrix<T>(periodic<T>());
  }

 private:
  BandHeader header_;
  std::string corner_1n_;
  std::string corner_n1_;
  std::vector<std::vector<std::string>> diagonals_;
};

/// Throws ParseError on malformed text, InvalidBandwidth on a bad shape.
BandDocument parse_band_document(std::string_view text);

template <class T>
std::string format_pkb(const PeriodicBandMatrix<T>& m);
template <class T>
std::string format_apkb(const AntiPeriodicBandMatrix<T>& nmat);

template <class T>
DenseMatrix<T> parse_dense(std::string_view text);
template <class T>
std::string format_dense(const DenseMatrix<T>& d);

template <class T>
std::vector<T> parse_vec(std::string_view text);
template <class T>
std::string format_vec(std::span<const T> values);

/// Whole-file read; throws ParseError when the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace perioband
