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

#ifndef FFLAB_STRATEGIES_HPP_
#define FFLAB_STRATEGIES_HPP_

#include <utility>
#include <vector>

#include "fflab/engine.hpp"
#include "fflab/gadgets.hpp"
#include "fflab/graph.hpp"

namespace fflab {

// Every constructor below verifies its output with the engine and throws
// VerificationFailure rather than return a losing strategy.

// One node per step; g must be edgeless.
Strategy StrategyEdgeless(const Graph& g);
// F_1 = V.
Strategy StrategyClique(int n);

// F_t = bag_t. If that ever fails, each bag is held for two steps; the
// provenance names the variant that verified.
Strategy StrategyPathDecomposition(const Graph& g,
                                   const std::vector<NodeSet>& bags);

// Recursive centre-holding sweep. g must be a forest whose components have
// diameter at most 2m - 2; components are cleared one after another.
Strategy StrategyTreeDiameter(const Graph& g, int m);

// Budget ceil(d/2) + 1 on BinaryTree(d).
Strategy StrategyBinaryTree(int depth);

// Adds `hold` to every step of `inner` (lifted to g's node range) and
// raises the budget by |hold|. Used for vertex-removal bounds.
Strategy StrategyWithHeldSet(const Graph& g, const Strategy& inner,
                             const std::vector<Node>& inner_to_g,
                             const NodeSet& hold);

// Seven-phase 4m-strategy on TimeGadget(G, T, m) from a T-winning
// m-strategy of G.
Strategy StrategyTimeGadget(const LabeledGadget& gadget, const Strategy& inner);
// Step indices after which the extinguished set is all paths, and after
// which it is 𝔾 ∪ X ∪ Y ∪ Z.
std::pair<int, int> TimeGadgetCheckpoints(int t);

// m-strategy on GOf(m, X) from a winning (m-1)-strategy of X.
Strategy StrategyGOf(const LabeledGadget& gadget, const Strategy& inner);
// Recursive strategies for GFamily(m).
Strategy StrategyGFamily(const LabeledGadget& gadget);

// k steps, step j clearing the trees of the j-th triple and c.
Strategy StrategyThreePartition(const LabeledGadget& gadget);

enum class StartParity { kEither, kOriginal, kIntermediate };

// Lifts a winning firefighter strategy of g to the hunter game on
// HunterTransform(g): (F1, F1, F2, F2, ...) for kEither,
// (F1, ∅, F2, ..., Fn) for a rabbit starting on the original nodes and
// (∅, F1, ∅, ..., Fn) for one starting on the intermediates.
Strategy HunterStrategyFromFf(const Graph& g, const Strategy& s,
                              StartParity parity = StartParity::kEither);
// Node set the rabbit may start from for the given parity.
NodeSet HunterStartSet(const Graph& g, StartParity parity);

// Intersects every step with the original nodes; must stay winning.
Strategy HunterStrategyPrune(const Graph& g, const Strategy& hunter);
// Odd steps (F''_1, F''_3, ...) and even steps (F''_2, F''_4, ...) as
// firefighter strategies on g.
std::pair<Strategy, Strategy> SplitHunterStrategy(const Graph& g,
                                                  const Strategy& pruned);

}  // namespace fflab

#endif  // FFLAB_STRATEGIES_HPP_
