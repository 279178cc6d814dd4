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

#ifndef FFLAB_GRAPH_HPP_
#define FFLAB_GRAPH_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "fflab/node_set.hpp"

namespace fflab {

using Edge = std::pair<Node, Node>;

// Simple undirected graph on nodes 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int edge_count() const { return edge_count_; }

  // Throws InvalidArgument on self-loops or out-of-range endpoints.
  // Adding an existing edge is a no-op.
  void add_edge(Node u, Node v);
  bool has_edge(Node u, Node v) const;

  const NodeSet& neighbors(Node v) const;
  int degree(Node v) const { return neighbors(v).size(); }
  int min_degree() const;
  int max_degree() const;

  NodeSet all() const { return NodeSet::Full(n_); }
  NodeSet none() const { return NodeSet(n_); }

  // Sorted, u < v.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_node(Node v) const;

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<NodeSet> adj_;
};

// Nodes outside `w` adjacent to some node of `w`.
NodeSet Neighborhood(const Graph& g, const NodeSet& w);
// w together with Neighborhood(g, w).
NodeSet ClosedNeighborhood(const Graph& g, const NodeSet& w);
// Union of the adjacency rows of `w`; may intersect `w`.
NodeSet AdjacencyUnion(const Graph& g, const NodeSet& w);

// Standard families. Node 0 is the root / hub / first node.
Graph Complete(int n);
Graph Cycle(int n);  // n >= 3
Graph CompleteBipartite(int a, int b);  // sides {0..a-1}, {a..a+b-1}
Graph PathGraph(int n);
Graph Star(int leaves);  // K_{1,leaves}, hub 0
Graph Edgeless(int n);
// Complete binary tree of depth d in heap order: children of v are 2v+1,
// 2v+2.
Graph BinaryTree(int depth);
// Hub 0 with `legs` paths of `leg_length` nodes each.
Graph Spider(int legs, int leg_length);

// Every node v becomes the 2-clique {2v, 2v+1}.
Graph Blowup2(const Graph& g);
// Nodes of `b` are shifted by a.n().
Graph DisjointUnion(const Graph& a, const Graph& b);
// Induced subgraph on `keep`, relabelled in increasing order. If `mapping`
// is non-null it receives the original id of every new node.
Graph InducedSubgraph(const Graph& g, const NodeSet& keep,
                      std::vector<Node>* mapping = nullptr);

std::vector<NodeSet> Components(const Graph& g);
// Components of the subgraph induced on `within`.
std::vector<NodeSet> Components(const Graph& g, const NodeSet& within);
bool IsConnected(const Graph& g);
bool IsForest(const Graph& g);
bool IsTree(const Graph& g);
bool IsCaterpillarForest(const Graph& g);
// Two-colouring (side 0, side 1) or nullopt if an odd cycle exists.
std::optional<std::pair<NodeSet, NodeSet>> Bipartition(const Graph& g);

// BFS distances from `source` restricted to `within`; -1 when unreachable.
std::vector<int> Distances(const Graph& g, Node source,
                           const NodeSet& within);
// Longest shortest path in a connected graph; -1 if disconnected, 0 for
// n <= 1.
int Diameter(const Graph& g);
// A longest path in a tree (or a component of a forest given by `within`),
// as a node sequence.
std::vector<Node> TreeLongestPath(const Graph& g, const NodeSet& within);

}  // namespace fflab

#endif  // FFLAB_GRAPH_HPP_
