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

#include "perioband/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "perioband/error.hpp"

namespace perioband {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) out.push_back(line.substr(start, pos - start));
  }
  return out;
}

// Non-empty, non-comment lines.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    std::vector<std::string_view> tokens = split(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != '#') out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  raise(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    fail(line, "expected a count, got '" + std::string(token) + "'");
  }
  return value;
}

long parse_offset(std::string_view token, std::size_t line) {
  long value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    fail(line, "expected a diagonal offset, got '" + std::string(token) + "'");
  }
  return value;
}

void expect_magic(const std::vector<Line>& lines, std::string_view magic) {
  if (lines.empty()) raise(ErrorCode::kParseError, "empty input");
  const Line& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0] != magic || first.tokens[1] != "1") {
    fail(first.number, "expected '" + std::string(magic) + " 1'");
  }
}

template <class T>
T parse_value(std::string_view token, std::size_t line) {
  try {
    return ScalarTraits<T>::parse(token);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

template <class T>
void append_values(std::ostringstream& os, std::span<const T> values) {
  for (const auto& v : values) os << ' ' << ScalarTraits<T>::format(v);
}

template <class T>
std::string format_band(std::string_view magic, const PeriodicBandMatrix<T>& m) {
  std::ostringstream os;
  os << magic << " 1\n";
  os << "n " << m.order() << " k " << m.bandwidth() << " mode " << to_string(ScalarTraits<T>::kind)
     << '\n';
  os << "corner_1n " << ScalarTraits<T>::format(m.corner_1n()) << '\n';
  os << "corner_n1 " << ScalarTraits<T>::format(m.corner_n1()) << '\n';
  const long h = static_cast<long>(m.half_bandwidth());
  for (long d = -h; d <= h; ++d) {
    os << "diag " << d;
    append_values<T>(os, m.diagonal(d));
    os << '\n';
  }
  return os.str();
}

}  // namespace

BandDocument::BandDocument(BandHeader header, std::string corner_1n, std::string corner_n1,
                           std::vector<std::vector<std::string>> diagonals)
    : header_(header), corner_1n_(std::move(corner_1n)), corner_n1_(std::move(corner_n1)),
      diagonals_(std::move(diagonals)) {}

template <class T>
PeriodicBandMatrix<T> BandDocument::periodic() const {
  std::vector<std::vector<T>> diagonals;
  diagonals.reserve(diagonals_.size());
  for (const auto& diag : diagonals_) {
    std::vector<T> values;
    values.reserve(diag.size());
    for (const auto& literal : diag) values.push_back(ScalarTraits<T>::parse(literal));
    diagonals.push_back(std::move(values));
  }
  return PeriodicBandMatrix<T>(header_.n, header_.k, std::move(diagonals),
                               ScalarTraits<T>::parse(corner_1n_), ScalarTraits<T>::parse(corner_n1_));
}

template PeriodicBandMatrix<Rational> BandDocument::periodic<Rational>() const;
template PeriodicBandMatrix<double> BandDocument::periodic<double>() const;

BandDocument parse_band_document(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) raise(ErrorCode::kParseError, "empty input");

  BandHeader header;
  const Line& magic = lines[0];
  if (magic.tokens.size() == 2 && magic.tokens[0] == "PKB" && magic.tokens[1] == "1") {
    header.layout = BandLayout::kPeriodic;
  } else if (magic.tokens.size() == 2 && magic.tokens[0] == "APKB" && magic.tokens[1] == "1") {
    header.layout = BandLayout::kAntiPeriodic;
  } else {
    fail(magic.number, "expected 'PKB 1' or 'APKB 1'");
  }

  if (lines.size() < 4) raise(ErrorCode::kParseError, "truncated band file header");
  const Line& shape = lines[1];
  if (shape.tokens.size() != 6 || shape.tokens[0] != "n" || shape.tokens[2] != "k" ||
      shape.tokens[4] != "mode") {
    fail(shape.number, "expected 'n <n> k <k> mode <exact|float>'");
  }
  header.n = parse_count(shape.tokens[1], shape.number);
  header.k = parse_count(shape.tokens[3], shape.number);
  try {
    header.mode = parse_scalar_kind(shape.tokens[5]);
  } catch (const Error& e) {
    fail(shape.number, e.what());
  }
  validate_shape(header.n, header.k);

  auto corner = [&](const Line& line, std::string_view key) {
    if (line.tokens.size() != 2 || line.tokens[0] != key) {
      fail(line.number, "expected '" + std::string(key) + " <value>'");
    }
    return std::string(line.tokens[1]);
  };
  std::string corner_1n = corner(lines[2], "corner_1n");
  std::string corner_n1 = corner(lines[3], "corner_n1");

  const long h = static_cast<long>((header.k - 1) / 2);
  if (lines.size() != 4 + header.k) {
    raise(ErrorCode::kParseError, "expected exactly " + std::to_string(header.k) +
                                      " diag lines, found " + std::to_string(lines.size() - 4));
  }
  std::vector<std::vector<std::string>> diagonals;
  for (long d = -h; d <= h; ++d) {
    const Line& line = lines[static_cast<std::size_t>(4 + d + h)];
    if (line.tokens.size() < 2 || line.tokens[0] != "diag") fail(line.number, "expected 'diag <offset> ...'");
    if (parse_offset(line.tokens[1], line.number) != d) {
      fail(line.number, "expected diagonal offset " + std::to_string(d));
    }
    const std::size_t expected = header.n - static_cast<std::size_t>(d < 0 ? -d : d);
    if (line.tokens.size() - 2 != expected) {
      fail(line.number, "diagonal " + std::to_string(d) + " needs " + std::to_string(expected) +
                            " values, found " + std::to_string(line.tokens.size() - 2));
    }
    std::vector<std::string> values;
    values.reserve(expected);
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      const std::string_view tok = line.tokens[t];
      // Validate the literal against the declared mode now so format
      // errors surface at parse time with a line number.
      if (header.mode == ScalarKind::kExactLambda) {
        parse_value<Rational>(tok, line.number);
      } else {
        parse_value<double>(tok, line.number);
      }
      values.emplace_back(tok);
    }
    diagonals.push_back(std::move(values));
  }
  for (const auto* literal : {&corner_1n, &corner_n1}) {
    if (header.mode == ScalarKind::kExactLambda) {
      parse_value<Rational>(*literal, lines[2].number);
    } else {
      parse_value<double>(*literal, lines[2].number);
    }
  }
  return BandDocument(header, std::move(corner_1n), std::move(corner_n1), std::move(diagonals));
}

template <class T>
std::string format_pkb(const PeriodicBandMatrix<T>& m) {
  return format_band("PKB", m);
}

template <class T>
std::string format_apkb(const AntiPeriodicBandMatrix<T>& nmat) {
  return format_band("APKB", nmat.periodic_image());
}

template <class T>
DenseMatrix<T> parse_dense(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  expect_magic(lines, "DENSE");
  if (lines.size() < 2 || lines[1].tokens.size() != 3 || lines[1].tokens[0] != "n") {
    raise(ErrorCode::kParseError, "expected 'n <rows> <cols>'");
  }
  const std::size_t rows = parse_count(lines[1].tokens[1], lines[1].number);
  const std::size_t cols = parse_count(lines[1].tokens[2], lines[1].number);
  if (lines.size() != 2 + rows) {
    raise(ErrorCode::kParseError, "expected " + std::to_string(rows) + " rows, found " +
                                      std::to_string(lines.size() - 2));
  }
  std::vector<T> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = lines[2 + r];
    if (line.tokens.size() != cols) {
      fail(line.number, "expected " + std::to_string(cols) + " values");
    }
    for (const auto tok : line.tokens) entries.push_back(parse_value<T>(tok, line.number));
  }
  return DenseMatrix<T>(rows, cols, std::move(entries));
}

template <class T>
std::string format_dense(const DenseMatrix<T>& d) {
  std::ostringstream os;
  os << "DENSE 1\n";
  os << "n " << d.rows() << ' ' << d.cols() << '\n';
  for (std::size_t i = 1; i <= d.rows(); ++i) {
    const auto row = d.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << ScalarTraits<T>::format(row[j]);
    }
    os << '\n';
  }
  return os.str();
}

template <class T>
std::vector<T> parse_vec(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  expect_magic(lines, "VEC");
  if (lines.size() < 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "n") {
    raise(ErrorCode::kParseError, "expected 'n <n>'");
  }
  const std::size_t n = parse_count(lines[1].tokens[1], lines[1].number);
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t l = 2; l < lines.size(); ++l) {
    for (const auto tok : lines[l].tokens) {
      if (out.size() == n) fail(lines[l].number, "more than " + std::to_string(n) + " values");
      out.push_back(parse_value<T>(tok, lines[l].number));
    }
  }
  if (out.size() != n) {
    raise(ErrorCode::kParseError, "expected " + std::to_string(n) + " values, found " +
                                      std::to_string(out.size()));
  }
  return out;
}

template <class T>
std::string format_vec(std::span<const T> values) {
  std::ostringstream os;
  os << "VEC 1\n";
  os << "n " << values.size() << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ' ';
    os << ScalarTraits<T>::format(values[i]);
  }
  os << '\n';
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::kParseError, "cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::kParseError, "cannot write '" + path.string() + "'");
  out << text;
}

#define PERIOBAND_INSTANTIATE_FORMATS(T)                                   \
  template std::string format_pkb<T>(const PeriodicBandMatrix<T>&);        \
  template std::string format_apkb<T>(const AntiPeriodicBandMatrix<T>&);   \
  template DenseMatrix<T> parse_dense<T>(std::string_view);                \
  template std::string format_dense<T>(const DenseMatrix<T>&);             \
  template std::vector<T> parse_vec<T>(std::string_view);                  \
  template std::string format_vec<T>(std::span<const T>);

PERIOBAND_INSTANTIATE_FORMATS(Rational)
PERIOBAND_INSTANTIATE_FORMATS(double)

#undef PERIOBAND_INSTANTIATE_FORMATS

}  // namespace perioband
