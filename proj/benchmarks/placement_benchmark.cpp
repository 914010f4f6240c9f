// Copyright 2026 The sortbench Authors
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

#include <cstdint>
#include <vector>

#include "sortbench/metrics.hpp"
#include "sortbench/omega_params.hpp"
#include "sortbench/run.hpp"
#include "sortbench/strategy.hpp"
#include "sortbench/workloads.hpp"

namespace {

using sortbench::StrategyKind;
using sortbench::WorkloadKind;

std::vector<double> stream(WorkloadKind kind, std::size_t n) {
  return sortbench::generate_stream({kind, n, 42});
}

void place_all(benchmark::State& state, StrategyKind kind,
               WorkloadKind workload, double epsilon) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto values = stream(workload, n);
  const auto top = sortbench::derive_top(n, epsilon);
  double last_cost = 0.0;
  for (auto _ : state) {
    auto strategy = sortbench::new_strategy({kind, 42, false}, top.k,
                                            top.delta, n, top.N,
                                            {0.0, sortbench::kUnitSpan});
    for (double x : values) benchmark::DoNotOptimize(strategy->place(x));
    state.PauseTiming();
    last_cost = sortbench::cost(strategy->array());
    state.ResumeTiming();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
  state.counters["cost"] = last_cost;
  state.SetComplexityN(state.range(0));
}

void BM_SorterUniform(benchmark::State& state) {
  place_all(state, StrategyKind::kSorter, WorkloadKind::kUniform, 1.0);
}
BENCHMARK(BM_SorterUniform)->RangeMultiplier(10)->Range(1000, 1000000)
    ->Unit(benchmark::kMillisecond)->Complexity();

void BM_SorterTightSlack(benchmark::State& state) {
  place_all(state, StrategyKind::kSorter, WorkloadKind::kUniform, 0.25);
}
BENCHMARK(BM_SorterTightSlack)->RangeMultiplier(10)->Range(1000, 100000)
    ->Unit(benchmark::kMillisecond);

void BM_SorterIntervalFlood(benchmark::State& state) {
  place_all(state, StrategyKind::kSorter, WorkloadKind::kIntervalFlood, 1.0);
}
BENCHMARK(BM_SorterIntervalFlood)->RangeMultiplier(10)->Range(1000, 100000)
    ->Unit(benchmark::kMillisecond);

void BM_BaselineUniform(benchmark::State& state) {
  place_all(state, StrategyKind::kBaseline, WorkloadKind::kUniform, 1.0);
}
BENCHMARK(BM_BaselineUniform)->RangeMultiplier(10)->Range(1000, 1000000)
    ->Unit(benchmark::kMillisecond)->Complexity();

void BM_RandomCellUniform(benchmark::State& state) {
  place_all(state, StrategyKind::kRandomCell, WorkloadKind::kUniform, 1.0);
}
BENCHMARK(BM_RandomCellUniform)->RangeMultiplier(10)->Range(1000, 100000)
    ->Unit(benchmark::kMillisecond);

void BM_Cost(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  sortbench::ArrayState array(2 * n);
  const auto values = stream(WorkloadKind::kUniform, n);
  for (std::size_t i = 0; i < n; ++i) array.put(2 * i, values[i]);
  for (auto _ : state) benchmark::DoNotOptimize(sortbench::cost(array));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Cost)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_MidpointAdversaryVsSorter(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto top = sortbench::derive_top(n, 1.0);
  for (auto _ : state) {
    auto strategy = sortbench::new_strategy({StrategyKind::kSorter, 0, false},
                                            top.k, top.delta, n, top.N,
                                            {0.0, sortbench::kUnitSpan});
    sortbench::MidpointAdversary adversary;
    benchmark::DoNotOptimize(sortbench::run(*strategy, adversary, n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MidpointAdversaryVsSorter)->RangeMultiplier(4)->Range(256, 16384)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
