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

#include "perioband/random_instance.hpp"

#include <cmath>
#include <random>

#include "perioband/error.hpp"

namespace perioband {

namespace {

// mt19937_64 output is fixed by the standard; the mappings below avoid the
// implementation-defined std distributions so files are reproducible.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  long nonzero_small() {
    const long magnitude = 1 + static_cast<long>(engine_() % 3);
    return (engine_() & 1u) ? -magnitude : magnitude;
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

PeriodicBandMatrix<Rational> generate_instance(const GenerateOptions& options) {
  if (!(options.zero_probability >= 0.0 && options.zero_probability <= 1.0)) {
    raise(ErrorCode::kInvalidInput, "zero probability must lie in [0, 1]");
  }
  PeriodicBandMatrix<Rational> m(options.n, options.k);
  Draw draw(options.seed);
  m.set(1, options.n, Rational(draw.nonzero_small()));
  m.set(options.n, 1, Rational(draw.nonzero_small()));

  const long h = static_cast<long>(m.half_bandwidth());
  const long n = static_cast<long>(options.n);
  for (long d = -h; d <= h; ++d) {
    for (long i = std::max(1L, 1 - d); i <= std::min(n, n - d); ++i) {
      const long value = draw.nonzero_small();
      const bool zeroed = draw.unit() < options.zero_probability;
      m.band(static_cast<std::size_t>(i), static_cast<std::size_t>(i + d)) = zeroed ? Rational(0) : Rational(value);
    }
  }
  return m;
}

PeriodicBandMatrix<double> diagonally_dominant_instance(std::size_t n, std::size_t k, std::uint64_t seed) {
  PeriodicBandMatrix<double> m(n, k);
  Draw draw(seed);
  auto off = [&draw] {
    const double magnitude = 0.1 + 0.9 * draw.unit();
    return draw.unit() < 0.5 ? -magnitude : magnitude;
  };
  m.set(1, n, off());
  m.set(n, 1, off());
  const std::size_t h = m.half_bandwidth();
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > h ? i - h : 1;
    const std::size_t hi = std::min(i + h, n);
    for (std::size_t j = lo; j <= hi; ++j) {
      if (j != i) m.band(i, j) = off();
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > h ? i - h : 1;
    const std::size_t hi = std::min(i + h, n);
    double row_sum = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) {
      if (j != i) row_sum += std::fabs(m.band(i, j));
    }
    if (i == 1) row_sum += std::fabs(m.corner_1n());
    if (i == n) row_sum += std::fabs(m.corner_n1());
    const double diagonal = row_sum + 1.0 + draw.unit();
    m.band(i, i) = draw.unit() < 0.5 ? -diagonal : diagonal;
  }
  return m;
}

}  // namespace perioband
