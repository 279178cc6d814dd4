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

#include <gtest/gtest.h>

#include <random>

#include "fflab/bounds.hpp"
#include "fflab/error.hpp"
#include "fflab/gadgets.hpp"
#include "fflab/solver.hpp"
#include "support.hpp"

namespace fflab {
namespace {

constexpr Variant kFf = Variant::kFirefighter;
constexpr Variant kHn = Variant::kHunter;

bool Wins(const Graph& g, int m, Variant v = kFf) {
  const Decision d = IsMWinning(g, m, v);
  EXPECT_NE(d.outcome, Outcome::kResourceLimit);
  if (d.outcome == Outcome::kYes) {
    EXPECT_TRUE(d.witness.has_value());
    EXPECT_TRUE(IsWinning(g, *d.witness, v));
    EXPECT_LE(d.witness->m, m);
    EXPECT_EQ(d.witness->length(), *d.t);
  }
  return d.outcome == Outcome::kYes;
}

TEST(IsMWinning, Examples) {
  EXPECT_FALSE(Wins(Complete(4), 3));
  EXPECT_TRUE(Wins(Complete(4), 4));
  EXPECT_TRUE(Wins(Edgeless(5), 1));
  EXPECT_FALSE(Wins(Cycle(6), 2));
  EXPECT_TRUE(Wins(Cycle(6), 3));
  EXPECT_FALSE(Wins(Complete(2), 0));
  EXPECT_TRUE(Wins(Edgeless(0), 0));
}

TEST(Ffn, Examples) {
  EXPECT_EQ(Ffn(CompleteBipartite(2, 3), kFf).value, 3);
  EXPECT_EQ(Ffn(BinaryTree(3), kFf).value, 3);
  EXPECT_EQ(Ffn(GFamily(2).graph, kFf).value, 2);
  EXPECT_EQ(Ffn(Edgeless(0), kFf).value, 0);
  const FfnResult r = Ffn(Cycle(7), kFf);
  EXPECT_EQ(r.probe_start, 3);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(IsWinning(Cycle(7), *r.witness, kFf));
}

TEST(ShortestT, Examples) {
  EXPECT_EQ(ShortestT(Edgeless(3), 1, kFf).t, 3);
  EXPECT_EQ(ShortestT(Complete(3), 3, kFf).t, 1);
  EXPECT_EQ(ShortestT(PathGraph(3), 2, kFf).t,
            oracle::ShortestTime(3, testing::OracleEdges(PathGraph(3)), 2,
                                 oracle::Rule::kFirefighter,
                                 oracle::Moves::kAll));
  EXPECT_FALSE(ShortestT(Complete(3), 2, kFf).t.has_value());
}

TEST(IsWinningInTime, Examples) {
  const Graph two_k2 = BinPackingGraph({2, 2});
  EXPECT_EQ(IsWinningInTime(two_k2, 2, 2, kFf).outcome, Outcome::kYes);
  EXPECT_EQ(IsWinningInTime(two_k2, 2, 1, kFf).outcome, Outcome::kNo);
  EXPECT_EQ(IsWinningInTime(Complete(3), 3, 1, kFf).outcome, Outcome::kYes);
  const LabeledGadget tree = ThreePartitionTree({1, 1, 2}, TreeShape::kStar);
  EXPECT_EQ(tree.params.at("budget"), 17);
  EXPECT_EQ(IsWinningInTime(tree.graph, 17, 1, kFf).outcome, Outcome::kYes);
}

// Production search (pruned, module moves) against the naive oracle over
// every F ⊆ V.
TEST(Solver, AgreesWithNaiveOracleOnSmallGraphs) {
  for (const Graph& g : testing::ConnectedGraphsUpTo(6)) {
    const auto edges = testing::OracleEdges(g);
    for (Variant v : {kFf, kHn}) {
      const auto rule =
          v == kFf ? oracle::Rule::kFirefighter : oracle::Rule::kHunter;
      for (int m = 1; m <= g.n(); ++m) {
        const auto expected =
            oracle::ShortestTime(g.n(), edges, m, rule, oracle::Moves::kAll);
        const Decision d = ShortestT(g, m, v);
        ASSERT_NE(d.outcome, Outcome::kResourceLimit);
        EXPECT_EQ(d.t, expected) << SerializeGraph6(g) << " m=" << m << " "
                                 << ToString(v);
        if (d.witness) {
          EXPECT_TRUE(IsWinning(g, *d.witness, v));
        }
      }
    }
  }
}

TEST(Solver, PruningOptionsDoNotChangeAnswers) {
  SolverOptions plain;
  plain.dominance = false;
  plain.module_moves = false;
  SolverOptions no_modules;
  no_modules.module_moves = false;
  for (const Graph& g : testing::ConnectedGraphsUpTo(5)) {
    for (Variant v : {kFf, kHn}) {
      for (int m = 1; m <= g.n(); ++m) {
        const auto a = ShortestT(g, m, v).t;
        EXPECT_EQ(a, ShortestT(g, m, v, plain).t) << SerializeGraph6(g);
        EXPECT_EQ(a, ShortestT(g, m, v, no_modules).t) << SerializeGraph6(g);
      }
    }
  }
}

TEST(Solver, FfnDominatesInducedSubgraphs) {
  std::mt19937_64 rng(3);
  for (const Graph& g : testing::ConnectedGraphs(6)) {
    const int whole = Ffn(g, kFf).value;
    for (int trial = 0; trial < 3; ++trial) {
      const NodeSet keep = NodeSet::FromMask(6, rng() & 63);
      EXPECT_LE(Ffn(InducedSubgraph(g, keep), kFf).value, whole);
    }
  }
}

TEST(Solver, ResourceLimitIsDistinct) {
  SolverOptions tight;
  tight.limits.max_states = 5;
  const Decision d = IsMWinning(BinaryTree(3), 3, kFf, tight);
  EXPECT_EQ(d.outcome, Outcome::kResourceLimit);
  const FfnResult r = Ffn(BinaryTree(3), kFf, tight);
  EXPECT_EQ(r.outcome, Outcome::kResourceLimit);
}

TEST(Solver, WitnessIsDeterministic) {
  const Decision a = IsMWinning(BinaryTree(3), 3, kFf);
  const Decision b = IsMWinning(BinaryTree(3), 3, kFf);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(*a.witness, *b.witness);
}

TEST(Solver, HunterOnTransformOfP3) {
  const Graph t = HunterTransform(PathGraph(3));
  EXPECT_EQ(t.n(), 11);
  EXPECT_EQ(Ffn(t, kHn).value, 2);
}

TEST(Solver, RejectsLargeGraphs) {
  EXPECT_THROW(IsMWinning(PathGraph(65), 2, kFf), InvalidArgument);
}

TEST(TwinClasses, Examples) {
  EXPECT_EQ(CliqueModuleReduce(Complete(5)).classes.size(), 1u);
  EXPECT_EQ(CliqueModuleReduce(Cycle(5)).classes.size(), 5u);
  const TwinClasses k4 = CliqueModuleReduce(Blowup2(PathGraph(2)));
  ASSERT_EQ(k4.classes.size(), 1u);
  EXPECT_EQ(k4.classes[0].size(), 4);
  // Leaves of a star are false twins, not true twins.
  EXPECT_EQ(CliqueModuleReduce(Star(4)).classes.size(), 5u);
  EXPECT_EQ(FalseTwinClasses(Star(4)).classes.size(), 2u);
}

TEST(Fuzz, Examples) {
  const FuzzReport ok = RandomStrategyFuzz(Edgeless(3), 1, 3, 200, 1);
  EXPECT_GT(ok.successes, 0u);
  ASSERT_TRUE(ok.first_win.has_value());
  EXPECT_TRUE(IsWinning(Edgeless(3), *ok.first_win, kFf));
  EXPECT_EQ(RandomStrategyFuzz(Complete(3), 2, 20, 2000, 1).successes, 0u);
  const FuzzReport again = RandomStrategyFuzz(Edgeless(3), 1, 3, 200, 1);
  EXPECT_EQ(again.successes, ok.successes);
}

}  // namespace
}  // namespace fflab
