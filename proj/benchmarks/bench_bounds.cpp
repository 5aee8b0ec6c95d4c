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

#include "circdd/analysis.hpp"
#include "circdd/bounds.hpp"

namespace {

using namespace circdd;

void BM_DelannoyF(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(DelannoyF(t, t));
}
BENCHMARK(BM_DelannoyF)->Arg(8)->Arg(64)->Arg(256);

void BM_DelannoyRecurrence(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(forms::DelannoyRecurrence(t, t));
}
BENCHMARK(BM_DelannoyRecurrence)->Arg(8)->Arg(64);

void BM_LogCubicFit(benchmark::State& state) {
  const Grid grid = BoundGrid(BoundKind::kCirculantEven, 3, 15, 2, 10);
  for (auto _ : state) benchmark::DoNotOptimize(FitPoly(grid, 3, FitTransform::kLog));
}
BENCHMARK(BM_LogCubicFit);

}  // namespace

BENCHMARK_MAIN();
