// Copyright 2026 The fflab Authors
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

// Micro benchmarks for the engine, solver and bound routines.

#include <benchmark/benchmark.h>

#include "fflab/bounds.hpp"
#include "fflab/engine.hpp"
#include "fflab/gadgets.hpp"
#include "fflab/solver.hpp"
#include "fflab/strategies.hpp"

namespace fflab {
namespace {

void BM_StepFirefighter(benchmark::State& state) {
  const Graph g = Cycle(static_cast<int>(state.range(0)));
  NodeSet burning = g.all();
  NodeSet f(g.n());
  f.insert(0);
  f.insert(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Step(g, burning, f, Variant::kFirefighter));
  }
}
BENCHMARK(BM_StepFirefighter)->Arg(16)->Arg(64);

void BM_VerifyTimeGadget(benchmark::State& state) {
  const LabeledGadget gadget = TimeGadget(Edgeless(2), 2, 1);
  const Strategy s = StrategyTimeGadget(gadget, StrategyEdgeless(Edgeless(2)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsWinning(gadget.graph, s, Variant::kFirefighter));
  }
}
BENCHMARK(BM_VerifyTimeGadget);

void BM_FfnCycle(benchmark::State& state) {
  const Graph g = Cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Ffn(g, Variant::kFirefighter));
  }
}
BENCHMARK(BM_FfnCycle)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

void BM_FfnBinaryTree3(benchmark::State& state) {
  const Graph g = BinaryTree(3);
  SolverOptions options;
  options.dominance = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Ffn(g, Variant::kFirefighter, options));
  }
  state.SetLabel(options.dominance ? "dominance" : "no dominance");
}
BENCHMARK(BM_FfnBinaryTree3)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_FfnG2(benchmark::State& state) {
  const LabeledGadget g2 = GFamily(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Ffn(g2.graph, Variant::kFirefighter));
  }
}
BENCHMARK(BM_FfnG2)->Unit(benchmark::kMillisecond);

void BM_LimitedNeighbours(benchmark::State& state) {
  const Graph g = BinaryTree(3);
  const int k = static_cast<int>(state.range(1));
  const bool bounded = state.range(0) != 0;
  for (auto _ : state) {
    if (bounded) {
      benchmark::DoNotOptimize(LimitedNeighboursBoundedM(g, 3, k));
    } else {
      benchmark::DoNotOptimize(LimitedNeighboursBruteforce(g, 3, k));
    }
  }
  state.SetLabel(bounded ? "bounded-m" : "brute force");
}
BENCHMARK(BM_LimitedNeighbours)->ArgsProduct({{0, 1}, {4, 7}});

void BM_SubgraphExpansion(benchmark::State& state) {
  const Graph g = Cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(LbSubgraphExpansion(g));
}
BENCHMARK(BM_SubgraphExpansion)->Arg(7)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_UbCandidatesBinaryTree(benchmark::State& state) {
  const Graph g = BinaryTree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(UbCandidates(g));
}
BENCHMARK(BM_UbCandidatesBinaryTree)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fflab

BENCHMARK_MAIN();
