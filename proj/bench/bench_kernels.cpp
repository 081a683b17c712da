// Copyright 2026 The planetrees Authors
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

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "planetrees/enumerate.hpp"
#include "planetrees/identities.hpp"

namespace {

using planetrees::Strategy;

void BM_EnumerateTheoremFamily(benchmark::State& state, Strategy strategy) {
  const auto passport = planetrees::theorem_passport(static_cast<std::size_t>(state.range(0)));
  std::size_t trees = 0;
  for (auto _ : state) {
    const auto codes = planetrees::enumerate_codes(passport, strategy);
    trees = codes.size();
    benchmark::DoNotOptimize(codes.data());
  }
  state.counters["trees"] = static_cast<double>(trees);
}

void BM_DivisibilityTable(benchmark::State& state, Strategy strategy) {
  const auto n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto rows = planetrees::divisibility_table(n_max, strategy);
    benchmark::DoNotOptimize(rows.data());
  }
}

BENCHMARK_CAPTURE(BM_EnumerateTheoremFamily, serial, Strategy::kSerial)
    ->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumerateTheoremFamily, parallel, Strategy::kParallel)
    ->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DivisibilityTable, serial, Strategy::kSerial)
    ->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DivisibilityTable, parallel, Strategy::kParallel)
    ->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
