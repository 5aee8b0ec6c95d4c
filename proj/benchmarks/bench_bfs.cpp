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

#include "circdd/circulant_graph.hpp"
#include "circdd/constructions.hpp"

namespace {

using namespace circdd;

void BM_DistancesFromZero(benchmark::State& state) {
  const auto order = state.range(0);
  // Largest published sets of roughly the requested size.
  const ConnectionSet set = order < 10000    ? ConnectionSet::Parse("5941;13,260,914,1371,1690,1911,2483")
                            : order < 100000 ? ConnectionSet::Parse("63700;25,175,7644,10192,13025,14275,31850")
                                             : ConnectionSet::Parse("154720;160,967,1120,4835,21120,29120,29977,77360");
  const CirculantGraph g(set);
  for (auto _ : state) benchmark::DoNotOptimize(DistancesFromZero(g));
  state.SetItemsProcessed(state.iterations() * g.order());
}
BENCHMARK(BM_DistancesFromZero)->Arg(5000)->Arg(60000)->Arg(150000);

void BM_HasDiameterRejects(benchmark::State& state) {
  // Typical search candidate: mostly rejected early.
  BoundedBfs bfs;
  const CirculantGraph g(ConnectionSet::Parse("248;1,60,72,76"));
  for (auto _ : state) benchmark::DoNotOptimize(HasDiameter(bfs, g.order(), g.steps(), 4));
}
BENCHMARK(BM_HasDiameterRejects);

void BM_Product(benchmark::State& state) {
  const CirculantGraph a(ConnectionSet::Parse("511;1,5,70,96"));
  const CirculantGraph b(ConnectionSet::Parse("528;1,89,156,162"));
  for (auto _ : state) benchmark::DoNotOptimize(CartesianProduct(a, b));
}
BENCHMARK(BM_Product)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
