// Copyright 2026 The Sperner Authors
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

#include "sperner/decomposition.h"
#include "sperner/gen.h"
#include "sperner/weights.h"

namespace sperner {
namespace {

void BM_DecomposeExtremal(benchmark::State& state) {
  const Hypergraph h = extremal_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_fully(h));
  }
  state.counters["vertices"] = static_cast<double>(h.num_vertices());
}
BENCHMARK(BM_DecomposeExtremal)->DenseRange(3, 8);

void BM_RebuildRandom(benchmark::State& state) {
  const DecompositionTree t = random_one_sperner_tree(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rebuild(t));
  }
}
BENCHMARK(BM_RebuildRandom)->RangeMultiplier(4)->Range(16, 1024);

void BM_WeightSynthesis(benchmark::State& state) {
  const Hypergraph h = extremal_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(threshold_separator(h));
  }
}
BENCHMARK(BM_WeightSynthesis)->DenseRange(3, 8);

void BM_ExhaustiveVerify(benchmark::State& state) {
  const Hypergraph h = random_one_sperner(static_cast<std::size_t>(state.range(0)), 3);
  const WeightAssignment wa = threshold_separator(h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_threshold_separator(h, wa));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_ExhaustiveVerify)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_CharRank(benchmark::State& state) {
  const Hypergraph h = extremal_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(char_rank(h));
  }
}
BENCHMARK(BM_CharRank)->DenseRange(3, 6);

}  // namespace
}  // namespace sperner
