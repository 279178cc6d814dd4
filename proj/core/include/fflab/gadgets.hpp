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

#ifndef FFLAB_GADGETS_HPP_
#define FFLAB_GADGETS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fflab/graph.hpp"

namespace fflab {

// α and β of the auxiliary graphs; valid iff 2β + 2 >= α >= β + 3.
struct GadgetParams {
  int alpha = 4;
  int beta = 1;
};
void ValidateParams(const GadgetParams& p);

enum class BlockKind { kClique, kIndependent, kGiven };

struct Block {
  std::string name;
  BlockKind kind = BlockKind::kGiven;
};

enum class JoinKind {
  kFull,    // every pair adjacent
  kSingle,  // exactly one edge
};

struct BlockJoin {
  std::string a;
  std::string b;
  JoinKind kind = JoinKind::kFull;
};

// A graph plus named node sets. `blocks` partition V (empty blocks allowed)
// and `joins` is the defining list of adjacent block pairs; `labels` holds
// every block plus extra role sets such as "H^1" or "P".
struct LabeledGadget {
  std::string kind;
  Graph graph;
  std::map<std::string, NodeSet> labels;
  std::vector<Block> blocks;
  std::vector<BlockJoin> joins;
  std::map<std::string, std::int64_t> params;

  const NodeSet& label(const std::string& name) const;
};

// Realized structure against the declared one: partition, block interiors,
// and block adjacency (no extra, no missing joins). Empty means clean.
std::vector<std::string> AuditBlocks(const LabeledGadget& gadget);

// (m-1)-clique "K" plus α independent nodes "W" joined to all of it.
LabeledGadget AuxH(int m, const GadgetParams& params = {});

// X on nodes 0..|X|-1, then c, then for i = 1..m the path v^i_1..v^i_β and
// H^i = u_i, the rest of its clique, and its α outer nodes. Inner labels of
// a labelled X are kept with an "X." prefix.
LabeledGadget GOf(int m, const LabeledGadget& x,
                  const GadgetParams& params = {});
LabeledGadget GOf(int m, const Graph& x, const GadgetParams& params = {});
// G_2 = G(2, K_1), G_m = G(m, G_{m-1}).
LabeledGadget GFamily(int m, const GadgetParams& params = {});
std::int64_t GOfNodeCount(int m, std::int64_t x_nodes,
                          const GadgetParams& params = {});

// H(G, T): 𝔾 = blowup2(G) on nodes 0..2|V|-1, then A, B (m-cliques),
// X, Y, Z (2m-cliques), then the m-cliques P_i^j, i in [2T+2], j in [T+1].
LabeledGadget TimeGadget(const Graph& g, int t, int m);
std::int64_t TimeGadgetNodeCount(int base_nodes, int t, int m);
// Label of path block P_i^j.
std::string PathBlockName(int i, int j);

// Disjoint union of cliques K_{s_1}, ..., K_{s_n}.
Graph BinPackingGraph(const std::vector<int>& sizes);

enum class TreeShape { kStar, kPath, kArbitrary };
TreeShape ParseTreeShape(const std::string& name);

// Centre c = node 0 joined to the lowest-index node of every tree T_i;
// T_i has a_i + Σa nodes. kArbitrary draws a random tree from `seed`.
LabeledGadget ThreePartitionTree(const std::vector<int>& a, TreeShape shape,
                                 std::uint64_t seed = 1);

// Every edge {u, v} becomes |V| + 1 paths u - x - v. Original nodes keep
// their ids; the intermediates of the sorted edges follow in order.
Graph HunterTransform(const Graph& g);

}  // namespace fflab

#endif  // FFLAB_GADGETS_HPP_
