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

#ifndef FFLAB_BOUNDS_HPP_
#define FFLAB_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fflab/engine.hpp"
#include "fflab/graph.hpp"

namespace fflab {

// ---- lower bounds ----------------------------------------------------------

enum class CertificateKind {
  kMinDegree,
  kEdgeCount,
  kExpansion,           // V' = V
  kSubgraphExpansion,   // V' a proper induced subgraph
  kCharacterization,
};
std::string_view ToString(CertificateKind kind);
CertificateKind ParseCertificateKind(std::string_view name);

// Claims ffn(G) >= m. For the expansion kinds: every W ⊆ V' with |W| = i
// has at least m - 1 neighbours inside G[V'].
struct Certificate {
  CertificateKind kind = CertificateKind::kExpansion;
  std::vector<Node> v_prime;
  int i = 0;
  int m = 0;
};

// Re-derives the claim from scratch.
bool CheckCertificate(const Graph& g, const Certificate& cert);

struct LowerBound {
  int value = 0;
  Certificate certificate;
};

// δ_min + 1; 0 for the empty graph.
int LbMinDegree(const Graph& g);
// Largest m in [1, n] with |E| >= m (n - (m + 1) / 2); 0 for the empty
// graph.
int LbEdgeCount(const Graph& g);

// Every W with |W| = i has |N(W)| >= m - 1. Requires 1 <= i <= n - m + 1.
bool ExpansionHolds(const Graph& g, int i, int m);

// Best expansion bound over the sizes i of W for the induced subgraph on
// `v_prime`: max_i min(minimum |N(W)| + 1, |V'| - i + 1). Needs
// |V'| <= 24.
LowerBound BestExpansionOn(const Graph& g, const NodeSet& v_prime);

struct SubgraphSearch {
  // Every induced subgraph is tried when n is at most this.
  int exhaustive_max_n = 7;
  // Above it: connected subsets up to this size, then random connected
  // subsets.
  int max_subset_size = 8;
  std::uint64_t max_subsets = 300'000;
  std::uint64_t random_samples = 2'000;
  int random_max_size = 14;
  std::uint64_t seed = 1;
};

LowerBound LbSubgraphExpansion(const Graph& g,
                               const SubgraphSearch& search = {});

// 1 for a non-empty edgeless graph, 2 for a caterpillar forest with an
// edge, nullopt otherwise.
std::optional<int> CharSmallFfn(const Graph& g);

// ---- LimitedNeighbours -----------------------------------------------------

// Some W with |W| = k and |N(W)| <= m - 1, by enumeration of all k-subsets.
std::optional<NodeSet> LimitedNeighboursBruteforce(const Graph& g, int m,
                                                   int k);
// Same question: every S with |S| <= m - 1, then a subset sum over the
// components of G - S.
std::optional<NodeSet> LimitedNeighboursBoundedM(const Graph& g, int m,
                                                 int k);

// ---- upper bounds ----------------------------------------------------------

struct UpperBound {
  int value = 0;
  Strategy strategy;
};

struct UpperBoundHints {
  std::optional<std::vector<NodeSet>> path_decomposition;
};

// Tries every applicable construction and returns the smallest budget.
// Every candidate is engine-verified; a failing one raises
// VerificationFailure.
UpperBound UbConstructive(const Graph& g, const UpperBoundHints& hints = {});
// All verified candidates, one per applicable rule.
std::vector<UpperBound> UbCandidates(const Graph& g,
                                     const UpperBoundHints& hints = {});

// log_3(2|V| + 1) + 2 for a forest.
double ForestBound(const Graph& g);

struct BinaryTreeBounds {
  double lower = 0.0;
  // True when ffn is strictly greater than `lower`.
  bool lower_exclusive = false;
  // Smallest integer the bound allows.
  int lower_int = 0;
  int upper = 0;
};
BinaryTreeBounds BinaryTreeFfnBounds(int depth);

// ---- bit-pattern check -------------------------------------------------------

int Flips(std::uint64_t x);
int HammingWeight(std::uint64_t x);
// Σ_{i=0}^{(d-1)/2} 2^(2i+1), the alternating pattern 1010...10.
std::uint64_t AlternatingPattern(int d);
// x = 0: flips(pattern) == d. Otherwise flips(pattern + x) >=
// d - floor(log2 |x|) - 4. d must be odd.
bool CheckAlternatingFlips(int d, std::int64_t x);

// ---- conjecture harness -----------------------------------------------------

struct ConjectureReport {
  int ffn = 0;
  // Best expansion bound over all induced subgraphs.
  int max_certified = 0;
  Certificate best;
  // max_certified <= ffn. Always holds; false means a bug.
  bool sound = true;
  // max_certified >= ffn. The conjectured direction.
  bool tight = true;
  std::string subgraph_notion = "induced";
};

// Exhaustive over induced subgraphs; needs n <= 16.
ConjectureReport CheckConjecture(const Graph& g, int ffn);

// ---- structure helpers -------------------------------------------------------

// Bags are valid iff every node and every edge lies in some bag and the bags
// holding any node are contiguous. Throws InvalidArgument otherwise.
void ValidatePathDecomposition(const Graph& g,
                               const std::vector<NodeSet>& bags);
// Width-1 decomposition of a caterpillar forest.
std::vector<NodeSet> CaterpillarDecomposition(const Graph& g);

// Path v_1..v_m (nodes 0..m-1) whose end v_m is joined to every node of a
// clique of size m - 1, so that v_m closes an m-clique. Every size i of W
// up to |V| - 1 has some W with one neighbour, yet ffn is m.
Graph BadExpansionGraph(int clique_number);
// Clique of size m plus a path v_1..v_m whose end is joined to the whole
// clique; v_m and the clique form K_{m+1}.
Graph BadExpansionGraphLiteral(int clique_size);

}  // namespace fflab

#endif  // FFLAB_BOUNDS_HPP_
