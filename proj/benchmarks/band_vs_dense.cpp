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

#include <benchmark/benchmark.h>

#include <vector>

#include "dense_baseline.hpp"
#include "perioband/perioband.hpp"

namespace perioband {
namespace {

std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

void BM_BandFactorSolveFloat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const auto m = diagonally_dominant_instance(n, k, 1);
  const auto y = ones(n);
  for (auto _ : state) benchmark::DoNotOptimize(solve(m, y).x.data());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BandFactorSolveFloat)
    ->ArgsProduct({{1000, 10000, 50000, 100000}, {5}})
    ->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

void BM_DenseFactorSolveFloat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = to_dense(diagonally_dominant_instance(n, 5, 1));
  const auto y = ones(n);
  for (auto _ : state) benchmark::DoNotOptimize(cli::dense_float_solve(d, y).data());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseFactorSolveFloat)->Arg(100)->Arg(300)->Arg(1000)->Complexity(benchmark::oNCubed)->Unit(
    benchmark::kMillisecond);

PeriodicBandMatrix<Rational> small_entry_tridiagonal(std::size_t n) {
  PeriodicBandMatrix<Rational> m(n, 3);
  for (std::size_t i = 1; i <= n; ++i) m.set(i, i, Rational(i == 1 ? 1 : 2));
  for (std::size_t i = 1; i < n; ++i) {
    m.set(i, i + 1, Rational(1));
    m.set(i + 1, i, Rational(1));
  }
  m.set(1, n, Rational(1));
  m.set(n, 1, Rational(2));
  return m;
}

void BM_BandInvertExact(benchmark::State& state) {
  const auto m = small_entry_tridiagonal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert(m).entries().data());
}
BENCHMARK(BM_BandInvertExact)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_OracleInvertExact(benchmark::State& state) {
  const auto d = to_dense(small_entry_tridiagonal(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_invert(d).entries().data());
}
BENCHMARK(BM_OracleInvertExact)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ExactSolveWithSubstitutions(benchmark::State& state) {
  auto m = generate_instance({static_cast<std::size_t>(state.range(0)), 5, 3, 0.15});
  const std::vector<Rational> y(m.order(), Rational(1));
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(solve(m, y).x.data());
    } catch (const Error&) {
      state.SkipWithError("singular instance");
      break;
    }
  }
}
BENCHMARK(BM_BandFactorSolveFloat)->Name("BM_BandFactorSolveFloatWideBand")->Args({100000, 9})->Unit(
    benchmark::kMillisecond);

BENCHMARK(BM_ExactSolveWithSubstitutions)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace perioband

BENCHMARK_MAIN();
