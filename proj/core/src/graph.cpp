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

#include "fflab/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "fflab/error.hpp"

namespace fflab {
namespace {

void RequireNonNegative(int value, const char* what) {
  if (value < 0) {
    throw InvalidArgument(std::string(what) + " must be non-negative, got " +
                          std::to_string(value));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  RequireNonNegative(n, "node count");
  adj_.assign(static_cast<std::size_t>(n), NodeSet(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_node(Node v) const {
  if (v < 0 || v >= n_) {
    throw InvalidArgument("node " + std::to_string(v) + " outside range [0," +
                          std::to_string(n_) + ")");
  }
}

void Graph::add_edge(Node u, Node v) {
  check_node(u);
  check_node(v);
  if (u == v) {
    throw InvalidArgument("self-loop at node " + std::to_string(u));
  }
  if (adj_[static_cast<std::size_t>(u)].contains(v)) return;
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
  ++edge_count_;
}

bool Graph::has_edge(Node u, Node v) const {
  check_node(u);
  check_node(v);
  return adj_[static_cast<std::size_t>(u)].contains(v);
}

const NodeSet& Graph::neighbors(Node v) const {
  check_node(v);
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (const auto& row : adj_) best = std::min(best, row.size());
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : adj_) best = std::max(best, row.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Node u = 0; u < n_; ++u) {
    adj_[static_cast<std::size_t>(u)].for_each([&](Node v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

NodeSet AdjacencyUnion(const Graph& g, const NodeSet& w) {
  if (w.universe() != g.n()) {
    throw InvalidArgument("node set universe does not match graph");
  }
  NodeSet out(g.n());
  w.for_each([&](Node u) { out |= g.neighbors(u); });
  return out;
}

NodeSet Neighborhood(const Graph& g, const NodeSet& w) {
  return AdjacencyUnion(g, w) - w;
}

NodeSet ClosedNeighborhood(const Graph& g, const NodeSet& w) {
  return AdjacencyUnion(g, w) | w;
}

Graph Complete(int n) {
  RequireNonNegative(n, "clique size");
  Graph g(n);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Cycle(int n) {
  if (n < 3) {
    throw InvalidArgument("cycle needs at least 3 nodes, got " +
                          std::to_string(n));
  }
  Graph g(n);
  for (Node v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph CompleteBipartite(int a, int b) {
  RequireNonNegative(a, "bipartite side");
  RequireNonNegative(b, "bipartite side");
  Graph g(a + b);
  for (Node u = 0; u < a; ++u) {
    for (Node v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph PathGraph(int n) {
  RequireNonNegative(n, "path length");
  Graph g(n);
  for (Node v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Star(int leaves) {
  RequireNonNegative(leaves, "star leaf count");
  Graph g(leaves + 1);
  for (Node v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph Edgeless(int n) {
  RequireNonNegative(n, "node count");
  return Graph(n);
}

Graph BinaryTree(int depth) {
  RequireNonNegative(depth, "tree depth");
  if (depth > 24) throw InvalidArgument("binary tree depth too large");
  const int n = (1 << (depth + 1)) - 1;
  Graph g(n);
  for (Node v = 1; v < n; ++v) g.add_edge((v - 1) / 2, v);
  return g;
}

Graph Spider(int legs, int leg_length) {
  RequireNonNegative(legs, "spider leg count");
  RequireNonNegative(leg_length, "spider leg length");
  Graph g(1 + legs * leg_length);
  Node next = 1;
  for (int l = 0; l < legs; ++l) {
    Node prev = 0;
    for (int j = 0; j < leg_length; ++j) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

Graph Blowup2(const Graph& g) {
  Graph out(2 * g.n());
  for (Node v = 0; v < g.n(); ++v) out.add_edge(2 * v, 2 * v + 1);
  for (const auto& [u, v] : g.edges()) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) out.add_edge(2 * u + a, 2 * v + b);
    }
  }
  return out;
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  Graph out(a.n() + b.n());
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) out.add_edge(a.n() + u, a.n() + v);
  return out;
}

Graph InducedSubgraph(const Graph& g, const NodeSet& keep,
                      std::vector<Node>* mapping) {
  if (keep.universe() != g.n()) {
    throw InvalidArgument("node set universe does not match graph");
  }
  const std::vector<Node> members = keep.members();
  std::vector<Node> index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    index[static_cast<std::size_t>(members[i])] = static_cast<Node>(i);
  }
  Graph out(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    (g.neighbors(members[i]) & keep).for_each([&](Node v) {
      const Node j = index[static_cast<std::size_t>(v)];
      if (static_cast<Node>(i) < j) out.add_edge(static_cast<Node>(i), j);
    });
  }
  if (mapping != nullptr) *mapping = members;
  return out;
}

std::vector<NodeSet> Components(const Graph& g, const NodeSet& within) {
  std::vector<NodeSet> out;
  NodeSet unseen = within;
  while (auto start = unseen.first()) {
    NodeSet comp(g.n());
    NodeSet frontier(g.n(), {*start});
    while (!frontier.empty()) {
      comp |= frontier;
      frontier = (AdjacencyUnion(g, frontier) & within) - comp;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<NodeSet> Components(const Graph& g) {
  return Components(g, g.all());
}

bool IsConnected(const Graph& g) { return Components(g).size() <= 1; }

bool IsForest(const Graph& g) {
  return g.edge_count() ==
         g.n() - static_cast<int>(Components(g).size());
}

bool IsTree(const Graph& g) {
  return g.n() >= 1 && IsConnected(g) && g.edge_count() == g.n() - 1;
}

bool IsCaterpillarForest(const Graph& g) {
  if (!IsForest(g)) return false;
  for (const NodeSet& comp : Components(g)) {
    if (comp.size() <= 2) continue;
    NodeSet spine(g.n());
    comp.for_each([&](Node v) {
      if (g.degree(v) > 1) spine.insert(v);
    });
    // The spine of a tree is connected; it is a path iff no spine node has
    // more than two spine neighbours.
    bool is_path = true;
    spine.for_each([&](Node v) {
      if ((g.neighbors(v) & spine).size() > 2) is_path = false;
    });
    if (!is_path) return false;
  }
  return true;
}

std::optional<std::pair<NodeSet, NodeSet>> Bipartition(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.n()), -1);
  for (Node s = 0; s < g.n(); ++s) {
    if (colour[static_cast<std::size_t>(s)] != -1) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::deque<Node> queue{s};
    while (!queue.empty()) {
      const Node u = queue.front();
      queue.pop_front();
      bool ok = true;
      g.neighbors(u).for_each([&](Node v) {
        auto& cv = colour[static_cast<std::size_t>(v)];
        const int cu = colour[static_cast<std::size_t>(u)];
        if (cv == -1) {
          cv = 1 - cu;
          queue.push_back(v);
        } else if (cv == cu) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  std::pair<NodeSet, NodeSet> sides{NodeSet(g.n()), NodeSet(g.n())};
  for (Node v = 0; v < g.n(); ++v) {
    (colour[static_cast<std::size_t>(v)] == 0 ? sides.first : sides.second)
        .insert(v);
  }
  return sides;
}

std::vector<int> Distances(const Graph& g, Node source,
                           const NodeSet& within) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  if (!within.contains(source)) return dist;
  dist[static_cast<std::size_t>(source)] = 0;
  std::deque<Node> queue{source};
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop_front();
    (g.neighbors(u) & within).for_each([&](Node v) {
      if (dist[static_cast<std::size_t>(v)] == -1) {
        dist[static_cast<std::size_t>(v)] =
            dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

int Diameter(const Graph& g) {
  int best = 0;
  const NodeSet all = g.all();
  for (Node s = 0; s < g.n(); ++s) {
    for (int d : Distances(g, s, all)) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<Node> TreeLongestPath(const Graph& g, const NodeSet& within) {
  const auto start = within.first();
  if (!start) return {};
  auto farthest = [&](Node s) {
    const auto dist = Distances(g, s, within);
    Node best = s;
    for (Node v = 0; v < g.n(); ++v) {
      if (dist[static_cast<std::size_t>(v)] >
          dist[static_cast<std::size_t>(best)]) {
        best = v;
      }
    }
    return std::make_pair(best, dist);
  };
  const Node a = farthest(*start).first;
  const auto [b, dist] = farthest(a);
  // Walk back from b to a along decreasing distance.
  std::vector<Node> path{b};
  Node cur = b;
  while (cur != a) {
    Node step = -1;
    (g.neighbors(cur) & within).for_each([&](Node v) {
      if (step == -1 && dist[static_cast<std::size_t>(v)] ==
                            dist[static_cast<std::size_t>(cur)] - 1) {
        step = v;
      }
    });
    cur = step;
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace fflab
