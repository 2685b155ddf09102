// Copyright 2026 The bosim Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "bosim/distribution.hpp"
#include "bosim/interferometer.hpp"
#include "bosim/permanent.hpp"

namespace {

bosim::ComplexMatrix random_matrix(int k) {
  std::mt19937_64 gen(static_cast<std::uint64_t>(k));
  std::normal_distribution<double> normal;
  bosim::ComplexMatrix a(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) a(r, c) = {normal(gen), normal(gen)};
  return a;
}

void BM_PermanentNaive(benchmark::State& state) {
  const auto a = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bosim::permanent_naive(a));
}
BENCHMARK(BM_PermanentNaive)->DenseRange(2, 9);

void BM_PermanentRyser(benchmark::State& state) {
  const auto a = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bosim::permanent_ryser(a));
}
BENCHMARK(BM_PermanentRyser)->DenseRange(2, 20, 2);

void BM_PermanentRyserPartitioned(benchmark::State& state) {
  const auto a = random_matrix(20);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bosim::permanent_ryser(a, threads));
}
BENCHMARK(BM_PermanentRyserPartitioned)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

// Full output distribution for n photons in m = n^2 modes.
void BM_OutputDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = n * n;
  const auto u = bosim::haar_random(m, {7, 0});
  const auto input = bosim::ModeOccupation::single_photons(n, m);
  for (auto _ : state) {
    auto dist = bosim::output_distribution(u, input);
    benchmark::DoNotOptimize(dist.total_probability());
  }
}
BENCHMARK(BM_OutputDistribution)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
