// Copyright 2026 The circdd Authors.
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

#include "circdd/builtin_records.hpp"
#include "circdd/prune_config.hpp"
#include "circdd/search.hpp"

namespace {

using namespace circdd;

void BM_SearchUnpruned(benchmark::State& state) {
  const auto n = state.range(0);
  const PruneConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(Search(n, 8, 3, cfg, SearchMode::kFirstOnly));
}
BENCHMARK(BM_SearchUnpruned)->Arg(96)->Arg(104)->Unit(benchmark::kMillisecond);

void BM_SearchProfiled(benchmark::State& state) {
  const auto n = state.range(0);
  const PruneConfig cfg = ProfileCeilings(BuiltinCatalog().Sets(8, 3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Search(n, 8, 3, cfg, SearchMode::kFirstOnly));
}
BENCHMARK(BM_SearchProfiled)->Arg(96)->Arg(104)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveAll(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Search(n, 5, 3, PruneConfig::Exhaustive(), SearchMode::kAll));
  }
}
BENCHMARK(BM_ExhaustiveAll)->Arg(36)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
