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

#include "fflab/engine.hpp"
#include "fflab/error.hpp"
#include "fflab/gadgets.hpp"
#include "support.hpp"

namespace fflab {
namespace {

constexpr Variant kFf = Variant::kFirefighter;
constexpr Variant kHn = Variant::kHunter;

TEST(Step, FigureOneTree) {
  // Root 0, children 1 and 2, right-left grandchild 5.
  const Graph g = BinaryTree(2);
  EXPECT_EQ(Step(g, NodeSet(7, {0, 2, 5}), NodeSet(7, {2, 5}), kFf),
            NodeSet(7, {0, 1, 2}));
}

TEST(Step, Trivial) {
  const Graph g = Cycle(5);
  EXPECT_TRUE(Step(g, g.none(), g.none(), kFf).empty());
}

TEST(Step, HunterUsesNeighbourhoodsOfRemainingNodes) {
  const Graph g = Complete(3);
  EXPECT_EQ(Step(g, g.all(), NodeSet(3, {0}), kHn), g.all());
  // A lone burning node with no burning neighbour moves away.
  const Graph p = PathGraph(3);
  EXPECT_EQ(Step(p, NodeSet(3, {1}), p.none(), kHn), NodeSet(3, {0, 2}));
}

TEST(Run, Examples) {
  const Graph e = Edgeless(2);
  const Strategy sweep{1, {NodeSet(2, {0}), NodeSet(2, {1})}, ""};
  auto trace = fflab::Run(e, sweep, kFf);
  ASSERT_EQ(trace.size(), 3u);
  EXPECT_EQ(trace[0], e.all());
  EXPECT_TRUE(trace.back().empty());

  const Graph k2 = Complete(2);
  EXPECT_EQ(fflab::Run(k2, sweep, kFf).back(), k2.all());
  EXPECT_TRUE(fflab::Run(k2, Strategy{2, {k2.all()}, ""}, kFf).back().empty());
}

TEST(Verify, ReportsFailingIndex) {
  const Graph k2 = Complete(2);
  const Strategy s{1, {NodeSet(2, {0}), NodeSet(2, {1})}, ""};
  const Verdict v = Verify(k2, s, kFf);
  EXPECT_FALSE(v.winning);
  EXPECT_EQ(v.index, 2);
  EXPECT_EQ(v.burning, k2.all());
  const Verdict w = Verify(Complete(4), Strategy{4, {Complete(4).all()}, ""},
                           kFf);
  EXPECT_TRUE(w.winning);
  EXPECT_EQ(w.index, 1);
}

TEST(Verify, NoOneStrategyWinsWithAnEdge) {
  const Graph k2 = Complete(2);
  for (int len = 1; len <= 4; ++len) {
    for (int pick = 0; pick < (1 << len); ++pick) {
      Strategy s{1, {}, ""};
      for (int t = 0; t < len; ++t) s.steps.push_back(NodeSet(2, {pick >> t & 1}));
      EXPECT_FALSE(IsWinning(k2, s, kFf));
    }
  }
}

TEST(Verify, EmptyStrategyOnlyWinsOnEmptyGraph) {
  EXPECT_TRUE(IsWinning(Edgeless(0), Strategy{}, kFf));
  EXPECT_FALSE(IsWinning(Edgeless(1), Strategy{}, kFf));
}

TEST(Verify, DoubledStrategyOnHunterTransform) {
  const Graph p2 = PathGraph(2);
  const Graph t = HunterTransform(p2);
  ASSERT_EQ(t.n(), 5);
  const NodeSet both(5, {0, 1});
  EXPECT_TRUE(IsWinning(t, Strategy{2, {both, both}, ""}, kHn));
}

TEST(ValidateStrategy, RejectsBudgetAndRange) {
  const Graph g = Complete(3);
  EXPECT_THROW(ValidateStrategy(g, Strategy{1, {g.all()}, ""}),
               InvalidArgument);
  EXPECT_THROW(ValidateStrategy(g, Strategy{3, {NodeSet(4, {0})}, ""}),
               InvalidArgument);
  EXPECT_THROW(ValidateStrategy(g, Strategy{-1, {}, ""}), InvalidArgument);
  EXPECT_NO_THROW(ValidateStrategy(g, Strategy{3, {g.none(), g.all()}, ""}));
}

class StepProperties : public ::testing::TestWithParam<Variant> {};

TEST_P(StepProperties, MonotoneInBurningSet) {
  std::mt19937_64 rng(7);
  const Variant variant = GetParam();
  for (const Graph& g : testing::ConnectedGraphs(6)) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto b = NodeSet::FromMask(6, rng() & 63);
      const auto extra = NodeSet::FromMask(6, rng() & 63);
      const auto f = NodeSet::FromMask(6, rng() & 63);
      EXPECT_TRUE(Step(g, b, f, variant).is_subset_of(
          Step(g, b | extra, f, variant)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothVariants, StepProperties,
                         ::testing::Values(kFf, kHn));

TEST(StepProperties, IdleGrowsAndOutsideFirefightersIdle) {
  std::mt19937_64 rng(11);
  for (const Graph& g : testing::ConnectedGraphs(6)) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto b = NodeSet::FromMask(6, rng() & 63);
      const auto f = NodeSet::FromMask(6, rng() & 63);
      EXPECT_TRUE(b.is_subset_of(Step(g, b, g.none(), kFf)));
      EXPECT_EQ(Step(g, b, f, kFf), Step(g, b, f & b, kFf));
    }
  }
}

TEST(StepProperties, BipartiteHunterAlternates) {
  for (const Graph& g : {CompleteBipartite(2, 3), Cycle(6), BinaryTree(3),
                         HunterTransform(Complete(3))}) {
    const auto parts = Bipartition(g);
    ASSERT_TRUE(parts.has_value());
    const auto& [left, right] = *parts;
    EXPECT_TRUE(Step(g, left, g.none(), kHn).is_subset_of(right));
    EXPECT_TRUE(Step(g, right, g.none(), kHn).is_subset_of(left));
  }
}

TEST(Variant, Parse) {
  EXPECT_EQ(ParseVariant("ff"), kFf);
  EXPECT_EQ(ParseVariant("hunter"), kHn);
  EXPECT_THROW(ParseVariant("rabbit"), InvalidArgument);
}

}  // namespace
}  // namespace fflab
