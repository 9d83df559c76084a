// Copyright 2026 The pcsqueeze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>

#include "pcsqueeze/reservoir.hpp"
#include "pcsqueeze/squeezing.hpp"
#include "pcsqueeze/volterra.hpp"

using namespace pcsq;

static ReservoirParams params_for(int64_t which) {
  return which == 0 ? ReservoirParams::isotropic(-5.0) : ReservoirParams::anisotropic(-0.2, 100.0);
}

static void BM_FindRoots(benchmark::State& state) {
  const auto p = params_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reservoir::find_roots(p));
}
BENCHMARK(BM_FindRoots)->Arg(0)->Arg(1);

static void BM_DiffusionIntegral(benchmark::State& state) {
  const auto p = params_for(state.range(0));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reservoir::diffusion_integral(p, t));
    t = t > 10.0 ? 0.0 : t + 0.37;
  }
}
BENCHMARK(BM_DiffusionIntegral)->Arg(0)->Arg(1);

static void BM_Amplitude(benchmark::State& state) {
  const auto p = params_for(state.range(0));
  const auto grid = TimeGrid::uniform(10.0, 200);
  for (auto _ : state) benchmark::DoNotOptimize(reservoir::amplitude(p, grid));
}
BENCHMARK(BM_Amplitude)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_VolterraSolve(benchmark::State& state) {
  const auto p = params_for(state.range(0));
  const auto grid = TimeGrid::uniform(10.0, 200);
  for (auto _ : state) benchmark::DoNotOptimize(volterra::solve(p, grid));
}
BENCHMARK(BM_VolterraSolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_BruteForceXi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(squeezing::brute_force_xi(n, 0.15 * std::numbers::pi, 0.5));
  }
}
BENCHMARK(BM_BruteForceXi)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
