// Copyright 2026 The arakelov-torus Authors
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

#include "arakelov/arakelov.hpp"

namespace {

using arakelov::Complex;
using arakelov::TauPoint;
using arakelov::TorusPoint;

void BM_Theta(benchmark::State& state) {
  const TauPoint tau(0.2, 1.3);
  const Complex z(0.31, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(arakelov::theta(z, tau));
}
BENCHMARK(BM_Theta);

void BM_Eta(benchmark::State& state) {
  const TauPoint tau(0.2, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(arakelov::eta(tau));
}
BENCHMARK(BM_Eta);

void BM_Green(benchmark::State& state) {
  const TauPoint tau(3.7, 0.21);  // unreduced on purpose
  const TorusPoint z(0.3, 0.65);
  for (auto _ : state) benchmark::DoNotOptimize(arakelov::green(tau, z));
}
BENCHMARK(BM_Green);

void BM_MeanIntegral(benchmark::State& state) {
  const TauPoint tau(0.0, 1.0);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arakelov::green_mean_integral(tau, grid));
  state.SetItemsProcessed(state.iterations() * grid * grid);
}
BENCHMARK(BM_MeanIntegral)->Arg(64)->Arg(256)->Arg(512)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_AverageOverCyclic(benchmark::State& state) {
  const TauPoint tau(0.2, 1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(arakelov::average_green_over_cyclic(tau, state.range(0)));
  }
}
BENCHMARK(BM_AverageOverCyclic)->Arg(6)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_PeriodsFromCurve(benchmark::State& state) {
  const auto curve = arakelov::eisenstein(TauPoint(0.1, 1.7));
  for (auto _ : state) benchmark::DoNotOptimize(arakelov::periods_from_curve(curve));
}
BENCHMARK(BM_PeriodsFromCurve);

}  // namespace

BENCHMARK_MAIN();
