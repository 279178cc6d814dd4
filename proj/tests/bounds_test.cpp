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

#include <cmath>

#include "fflab/bounds.hpp"
#include "fflab/error.hpp"
#include "fflab/solver.hpp"
#include "support.hpp"

namespace fflab {
namespace {

TEST(LbMinDegree, Examples) {
  EXPECT_EQ(LbMinDegree(Complete(5)), 5);
  EXPECT_EQ(LbMinDegree(Cycle(7)), 3);
  EXPECT_EQ(LbMinDegree(PathGraph(4)), 2);
}

TEST(LbEdgeCount, Examples) {
  EXPECT_EQ(LbEdgeCount(Complete(4)), 4);
  EXPECT_EQ(LbEdgeCount(Edgeless(5)), 1);
  EXPECT_EQ(LbEdgeCount(Cycle(5)), 1);
}

TEST(ExpansionHolds, Examples) {
  EXPECT_TRUE(ExpansionHolds(Spider(3, 2), 3, 3));
  EXPECT_TRUE(ExpansionHolds(Complete(6), 1, 6));
  const Graph bad = BadExpansionGraph(3);
  for (int i = 1; i <= bad.n() - 2; ++i) {
    EXPECT_FALSE(ExpansionHolds(bad, i, 3)) << "i=" << i;
  }
  EXPECT_THROW(ExpansionHolds(Complete(3), 3, 3), InvalidArgument);
}

TEST(LbSubgraphExpansion, Examples) {
  const LowerBound b4 = LbSubgraphExpansion(BinaryTree(4));
  EXPECT_GE(b4.value, 3);
  EXPECT_TRUE(CheckCertificate(BinaryTree(4), b4.certificate));

  const Graph mixed = DisjointUnion(Complete(4), Edgeless(3));
  const LowerBound k4 = LbSubgraphExpansion(mixed);
  EXPECT_EQ(k4.value, 4);
  EXPECT_TRUE(CheckCertificate(mixed, k4.certificate));

  const LowerBound c5 = LbSubgraphExpansion(Cycle(5));
  EXPECT_EQ(c5.value, 3);
  EXPECT_EQ(c5.certificate.kind, CertificateKind::kExpansion);
  EXPECT_EQ(c5.certificate.i, 1);
  EXPECT_EQ(c5.certificate.v_prime.size(), 5u);
}

TEST(CheckCertificate, RejectsOverclaims) {
  const Graph c5 = Cycle(5);
  Certificate cert{CertificateKind::kExpansion, {0, 1, 2, 3, 4}, 1, 4};
  EXPECT_FALSE(CheckCertificate(c5, cert));
  cert.m = 3;
  EXPECT_TRUE(CheckCertificate(c5, cert));
  cert.v_prime = {0, 1, 2};
  EXPECT_FALSE(CheckCertificate(c5, cert));
  EXPECT_TRUE(CheckCertificate(
      BinaryTree(4), {CertificateKind::kCharacterization, {}, 0, 3}));
  EXPECT_FALSE(CheckCertificate(
      BinaryTree(2), {CertificateKind::kCharacterization, {}, 0, 3}));
}

TEST(UbConstructive, Examples) {
  const UpperBound p5 = UbConstructive(PathGraph(5));
  EXPECT_EQ(p5.value, 2);
  EXPECT_TRUE(IsWinning(PathGraph(5), p5.strategy, Variant::kFirefighter));

  const UpperBound star = UbConstructive(Star(6));
  EXPECT_EQ(star.value, 2);

  const UpperBound k23 = UbConstructive(CompleteBipartite(2, 3));
  EXPECT_EQ(k23.value, 3);
  EXPECT_TRUE(IsWinning(CompleteBipartite(2, 3), k23.strategy,
                        Variant::kFirefighter));
}

TEST(UbConstructive, TreeDiameterAndHints) {
  const Graph s8 = Star(8);
  bool saw_tree = false;
  for (const UpperBound& ub : UbCandidates(s8)) {
    EXPECT_TRUE(IsWinning(s8, ub.strategy, Variant::kFirefighter));
    if (ub.strategy.provenance == "tree-diameter") {
      saw_tree = true;
      EXPECT_EQ(ub.value, 2);
    }
  }
  EXPECT_TRUE(saw_tree);

  UpperBoundHints hints;
  const Graph c4 = Cycle(4);
  hints.path_decomposition = std::vector<NodeSet>{NodeSet(4, {0, 1, 3}),
                                                  NodeSet(4, {1, 2, 3})};
  EXPECT_EQ(UbConstructive(c4, hints).value, 3);
  hints.path_decomposition = std::vector<NodeSet>{NodeSet(4, {0, 1})};
  EXPECT_THROW(UbConstructive(c4, hints), InvalidArgument);
}

TEST(PathDecomposition, Validation) {
  const Graph p4 = PathGraph(4);
  EXPECT_NO_THROW(ValidatePathDecomposition(
      p4, {NodeSet(4, {0, 1}), NodeSet(4, {1, 2}), NodeSet(4, {2, 3})}));
  // Node 1 appears in bags 0 and 2 but not 1.
  EXPECT_THROW(ValidatePathDecomposition(
                   p4, {NodeSet(4, {0, 1}), NodeSet(4, {2, 3}),
                        NodeSet(4, {1, 2})}),
               InvalidArgument);
  EXPECT_THROW(ValidatePathDecomposition(p4, {NodeSet(4, {0, 1, 2})}),
               InvalidArgument);
}

TEST(ForestBound, Examples) {
  EXPECT_NEAR(ForestBound(Edgeless(13)), 5.0, 1e-9);
  EXPECT_NEAR(ForestBound(Edgeless(1)), 3.0, 1e-9);
  EXPECT_NEAR(ForestBound(PathGraph(40)), 6.0, 1e-9);
  EXPECT_THROW(ForestBound(Cycle(3)), InvalidArgument);
}

TEST(BinaryTreeFfnBounds, Examples) {
  const auto d3 = BinaryTreeFfnBounds(3);
  EXPECT_EQ(d3.lower_int, 3);
  EXPECT_EQ(d3.upper, 3);
  const auto d5 = BinaryTreeFfnBounds(5);
  EXPECT_EQ(d5.lower_int, 3);
  EXPECT_EQ(d5.upper, 4);
  const auto d11 = BinaryTreeFfnBounds(11);
  EXPECT_NEAR(d11.lower, 3.0 - 0.5 * std::log2(3.0), 1e-12);
  EXPECT_NEAR(d11.lower, 2.2075, 1e-4);
  EXPECT_TRUE(d11.lower_exclusive);
  EXPECT_EQ(d11.lower_int, 3);
  EXPECT_EQ(d11.upper, 7);
}

TEST(Flips, Examples) {
  EXPECT_EQ(Flips(0b101010), 5);
  EXPECT_EQ(Flips(0), 0);
  EXPECT_EQ(Flips(1), 0);
  EXPECT_EQ(HammingWeight(0b1011), 3);
  EXPECT_EQ(AlternatingPattern(7), 0b10101010u);
  EXPECT_EQ(Flips(AlternatingPattern(7)), 7);
  EXPECT_TRUE(CheckAlternatingFlips(7, 0));
  EXPECT_TRUE(CheckAlternatingFlips(21, -1024));
  EXPECT_THROW(CheckAlternatingFlips(4, 1), InvalidArgument);
}

TEST(LimitedNeighbours, Examples) {
  EXPECT_FALSE(LimitedNeighboursBruteforce(Cycle(4), 2, 2).has_value());
  const auto leaf = LimitedNeighboursBruteforce(PathGraph(4), 2, 1);
  ASSERT_TRUE(leaf.has_value());
  EXPECT_LE(Neighborhood(PathGraph(4), *leaf).size(), 1);
  EXPECT_FALSE(LimitedNeighboursBruteforce(Complete(5), 3, 2).has_value());

  EXPECT_FALSE(LimitedNeighboursBoundedM(Cycle(4), 2, 2).has_value());
  EXPECT_TRUE(LimitedNeighboursBoundedM(PathGraph(4), 2, 1).has_value());
  EXPECT_FALSE(LimitedNeighboursBoundedM(Complete(5), 3, 2).has_value());

  const Graph triangles = DisjointUnion(Complete(3), Complete(3));
  const auto tri = LimitedNeighboursBoundedM(triangles, 1, 3);
  ASSERT_TRUE(tri.has_value());
  EXPECT_TRUE(Neighborhood(triangles, *tri).empty());

  const auto leaves = LimitedNeighboursBoundedM(PathGraph(3), 2, 2);
  ASSERT_TRUE(leaves.has_value());
  EXPECT_EQ(leaves->size(), 2);
  EXPECT_LE(Neighborhood(PathGraph(3), *leaves).size(), 1);
}

TEST(LimitedNeighbours, BoundedMMatchesBruteForce) {
  for (const Graph& g : testing::ConnectedGraphsUpTo(6)) {
    for (int m = 1; m <= 3; ++m) {
      for (int k = 0; k <= g.n(); ++k) {
        const auto a = LimitedNeighboursBruteforce(g, m, k);
        const auto b = LimitedNeighboursBoundedM(g, m, k);
        ASSERT_EQ(a.has_value(), b.has_value()) << SerializeGraph6(g);
        if (b) {
          EXPECT_EQ(b->size(), k);
          EXPECT_LE(Neighborhood(g, *b).size(), m - 1);
        }
      }
    }
  }
}

TEST(CharSmallFfn, Examples) {
  EXPECT_EQ(CharSmallFfn(Edgeless(5)), 1);
  EXPECT_EQ(CharSmallFfn(PathGraph(6)), 2);
  EXPECT_EQ(CharSmallFfn(Cycle(4)), std::nullopt);
  EXPECT_EQ(CharSmallFfn(Edgeless(0)), std::nullopt);
}

TEST(CheckConjecture, Examples) {
  const ConjectureReport k4 = CheckConjecture(Complete(4), 4);
  EXPECT_TRUE(k4.sound);
  EXPECT_TRUE(k4.tight);
  EXPECT_EQ(k4.max_certified, 4);
  const ConjectureReport cat = CheckConjecture(PathGraph(5), 2);
  EXPECT_TRUE(cat.sound);
  EXPECT_EQ(cat.max_certified, 2);
  EXPECT_EQ(cat.subgraph_notion, "induced");
}

TEST(BadExpansion, Shapes) {
  const Graph g = BadExpansionGraph(4);
  EXPECT_EQ(g.n(), 7);
  EXPECT_EQ(Ffn(g, Variant::kFirefighter).value, 4);
  EXPECT_EQ(Ffn(BadExpansionGraphLiteral(3), Variant::kFirefighter).value, 4);
}

TEST(CaterpillarDecomposition, WidthOne) {
  const Graph g = DisjointUnion(Star(4), PathGraph(2));
  const auto bags = CaterpillarDecomposition(g);
  EXPECT_NO_THROW(ValidatePathDecomposition(g, bags));
  for (const auto& b : bags) EXPECT_LE(b.size(), 2);
  EXPECT_THROW(CaterpillarDecomposition(Spider(3, 2)), InvalidArgument);
}

}  // namespace
}  // namespace fflab
