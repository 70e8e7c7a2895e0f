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

#include "test_support.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace perioband::testing {

std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(PERIOBAND_DATA_DIR) / name;
}

PeriodicBandMatrix<Rational> load_pkb(const std::string& name) {
  return parse_band_document(read_text_file(data_path(name))).periodic<Rational>();
}

std::vector<Rational> rationals(const std::vector<std::string>& literals) {
  std::vector<Rational> out;
  out.reserve(literals.size());
  for (const auto& s : literals) out.push_back(Rational::parse(s));
  return out;
}

namespace {

constexpr std::size_t kBandwidths[] = {3, 5, 7, 9};

PeriodicBandMatrix<Rational> draw(std::mt19937_64& rng, std::size_t n_lo, std::size_t n_hi,
                                  double zero_probability) {
  for (;;) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(n_lo, n_hi)(rng);
    const std::size_t k = kBandwidths[rng() % 4];
    if (k + 1 > n) continue;
    return generate_instance({n, k, rng(), zero_probability});
  }
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void zero_super(PeriodicBandMatrix<Rational>& m, std::mt19937_64& rng) {
  const std::size_t n = m.order(), h = m.half_bandwidth();
  const std::size_t i = pick(rng, 1, n - h - 1);
  m.set(i, i + h, Rational(0));
}

void zero_sub(PeriodicBandMatrix<Rational>& m, std::mt19937_64& rng) {
  const std::size_t n = m.order(), h = m.half_bandwidth();
  const std::size_t i = pick(rng, h + 2, n);
  m.set(i, i - h, Rational(0));
}

bool zero_some_pivot(PeriodicBandMatrix<Rational>& m, std::mt19937_64& rng) {
  std::vector<std::size_t> rows(m.order());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i + 1;
  std::shuffle(rows.begin(), rows.end(), rng);
  for (std::size_t i : rows) {
    if (force_zero_pivot(m, i)) return true;
  }
  return false;
}

}  // namespace

std::vector<Instance> property_instances(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  while (out.size() < count) {
    auto m = draw(rng, 5, 40, 0.1);
    Rational det = oracle::oracle_det(to_dense(m));
    if (det.is_zero()) continue;
    out.push_back({std::move(m), std::move(det), "property#" + std::to_string(out.size()), {}});
  }
  return out;
}

std::vector<Instance> adversarial_instances(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  while (out.size() < count) {
    const std::size_t variant = out.size() % 4;
    auto m = draw(rng, 5, 30, 0.0);
    std::set<SubstitutionKind> forced;
    if (variant == 0 || variant == 3) {
      zero_super(m, rng);
      forced.insert(SubstitutionKind::kBandSuper);
    }
    if (variant == 1 || variant == 3) {
      zero_sub(m, rng);
      forced.insert(SubstitutionKind::kBandSub);
    }
    if (variant == 2 || variant == 3) {
      if (!zero_some_pivot(m, rng)) continue;
      forced.insert(SubstitutionKind::kPivot);
    }
    const auto seen = substitution_kinds(factorize(m));
    if (!std::includes(seen.begin(), seen.end(), forced.begin(), forced.end())) continue;
    Rational det = oracle::oracle_det(to_dense(m));
    if (det.is_zero()) continue;
    static constexpr const char* kNames[] = {"super", "sub", "pivot", "joint"};
    out.push_back({std::move(m), std::move(det),
                   std::string("adversarial-") + kNames[variant] + "#" + std::to_string(out.size()),
                   std::move(forced)});
  }
  return out;
}

bool force_zero_pivot(PeriodicBandMatrix<Rational>& m, std::size_t i) {
  const Rational original = m.get(i, i);
  m.set(i, i, Rational(0));
  const auto f = factorize(m);
  const LambdaRational& p = f.pivot(i);
  if (!p.is_constant() || p.is_zero()) {
    m.set(i, i, original);
    return false;
  }
  // pivot(i) is affine in a(i,i) with unit slope.
  m.set(i, i, -p.evaluate_at_zero());
  return true;
}

std::set<SubstitutionKind> substitution_kinds(const LUFactors<LambdaRational>& f) {
  std::set<SubstitutionKind> out;
  for (const auto& s : f.substitutions()) out.insert(s.kind);
  return out;
}

DenseMatrix<Rational> band_times_dense(const PeriodicBandMatrix<Rational>& m,
                                       const DenseMatrix<Rational>& d) {
  const std::size_t n = m.order();
  DenseMatrix<Rational> out(n, d.cols());
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t p = 1; p <= n; ++p) {
      if (!m.in_pattern(i, p)) continue;
      const Rational a = m.get(i, p);
      if (a.is_zero()) continue;
      for (std::size_t j = 1; j <= d.cols(); ++j) out(i, j) += a * d(p, j);
    }
  }
  return out;
}

DenseMatrix<Rational> dense_times_band(const DenseMatrix<Rational>& d,
                                       const PeriodicBandMatrix<Rational>& m) {
  const std::size_t n = m.order();
  DenseMatrix<Rational> out(d.rows(), n);
  for (std::size_t p = 1; p <= n; ++p) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (!m.in_pattern(p, j)) continue;
      const Rational a = m.get(p, j);
      if (a.is_zero()) continue;
      for (std::size_t i = 1; i <= d.rows(); ++i) out(i, j) += d(i, p) * a;
    }
  }
  return out;
}

std::vector<Rational> band_times_vector(const PeriodicBandMatrix<Rational>& m,
                                        const std::vector<Rational>& x) {
  const std::size_t n = m.order();
  std::vector<Rational> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t p = 1; p <= n; ++p) {
      if (m.in_pattern(i, p)) out[i - 1] += m.get(i, p) * x[p - 1];
    }
  }
  return out;
}

bool is_identity(const DenseMatrix<Rational>& d) {
  if (!d.is_square()) return false;
  for (std::size_t i = 1; i <= d.rows(); ++i) {
    for (std::size_t j = 1; j <= d.cols(); ++j) {
      if (d(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

Rational cofactor_det(const DenseMatrix<Rational>& d) {
  const std::size_t n = d.rows();
  if (n > 6) throw std::invalid_argument("cofactor_det is limited to n <= 6");
  if (n == 1) return d(1, 1);
  Rational total;
  for (std::size_t c = 1; c <= n; ++c) {
    if (d(1, c).is_zero()) continue;
    DenseMatrix<Rational> minor(n - 1, n - 1);
    for (std::size_t i = 2; i <= n; ++i) {
      std::size_t jj = 1;
      for (std::size_t j = 1; j <= n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = d(i, j);
      }
    }
    const Rational term = d(1, c) * cofactor_det(minor);
    total += (c % 2 == 1) ? term : -term;
  }
  return total;
}

std::string describe(const PeriodicBandMatrix<Rational>& m) {
  return format_pkb(m);
}

}  // namespace perioband::testing
