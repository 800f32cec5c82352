// Copyright 2026 The RelayLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "relaylab/channel.h"
#include "relaylab/experiments.h"
#include "relaylab/gap.h"
#include "relaylab/rate.h"

namespace {

using relaylab::SnrTriple;

const SnrTriple kChannel = SnrTriple::make(62000.0, 230.0, 1e5);

void BM_SolveCdf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(relaylab::solve_cdf(kChannel));
}
BENCHMARK(BM_SolveCdf);

void BM_SolvePdf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(relaylab::solve_pdf(kChannel));
}
BENCHMARK(BM_SolvePdf);

void BM_GapReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(relaylab::gap_report(kChannel));
}
BENCHMARK(BM_GapReport);

void BM_CoarseSweep(benchmark::State& state) {
  relaylab::SweepSpec spec;
  spec.step = 0.05;
  spec.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(relaylab::position_sweep(spec).max_g_bar);
  }
}
BENCHMARK(BM_CoarseSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
