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

#include "fflab/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "fflab/error.hpp"

namespace fflab {
namespace {

// Accumulates nodes and named blocks before the graph is finalised.
class Builder {
 public:
  Node Reserve(int count) {
    const Node first = next_;
    next_ += count;
    return first;
  }

  std::vector<Node> AddBlock(const std::string& name, int size,
                             BlockKind kind) {
    std::vector<Node> nodes(static_cast<std::size_t>(size));
    std::iota(nodes.begin(), nodes.end(), Reserve(size));
    blocks_.push_back({name, kind});
    members_[name] = nodes;
    return nodes;
  }

  void Join(const std::string& a, const std::string& b,
            JoinKind kind = JoinKind::kFull) {
    joins_.push_back({a, b, kind});
    if (kind == JoinKind::kFull) {
      for (Node u : members_.at(a)) {
        for (Node v : members_.at(b)) edges_.emplace_back(u, v);
      }
    }
  }

  void Edge(Node u, Node v) { edges_.emplace_back(u, v); }

  void Role(const std::string& name, const std::vector<Node>& nodes) {
    roles_[name].insert(roles_[name].end(), nodes.begin(), nodes.end());
  }

  const std::vector<Node>& Members(const std::string& name) const {
    return members_.at(name);
  }

  LabeledGadget Finish(std::string kind) {
    LabeledGadget out;
    out.kind = std::move(kind);
    out.graph = Graph(next_);
    for (const auto& b : blocks_) {
      const auto& nodes = members_.at(b.name);
      if (b.kind == BlockKind::kClique) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
          for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            out.graph.add_edge(nodes[i], nodes[j]);
          }
        }
      }
    }
    for (const auto& [u, v] : edges_) out.graph.add_edge(u, v);
    for (const auto& [name, nodes] : members_) {
      out.labels.emplace(name, NodeSet(next_, nodes));
    }
    for (const auto& [name, nodes] : roles_) {
      out.labels.insert_or_assign(name, NodeSet(next_, nodes));
    }
    out.blocks = blocks_;
    out.joins = joins_;
    return out;
  }

 private:
  int next_ = 0;
  std::vector<Block> blocks_;
  std::vector<BlockJoin> joins_;
  std::map<std::string, std::vector<Node>> members_;
  std::map<std::string, std::vector<Node>> roles_;
  std::vector<std::pair<Node, Node>> edges_;
};

std::string Indexed(const std::string& base, int i) {
  return base + std::to_string(i);
}

}  // namespace

void ValidateParams(const GadgetParams& p) {
  if (p.beta < 1 || p.alpha < p.beta + 3 || p.alpha > 2 * p.beta + 2) {
    throw InvalidArgument("gadget parameters need 2*beta + 2 >= alpha >= "
                          "beta + 3 and beta >= 1; got alpha=" +
                          std::to_string(p.alpha) +
                          " beta=" + std::to_string(p.beta));
  }
}

const NodeSet& LabeledGadget::label(const std::string& name) const {
  const auto it = labels.find(name);
  if (it == labels.end()) {
    throw InvalidArgument("gadget has no label '" + name + "'");
  }
  return it->second;
}

std::vector<std::string> AuditBlocks(const LabeledGadget& gadget) {
  std::vector<std::string> issues;
  const Graph& g = gadget.graph;
  NodeSet covered(g.n());
  for (const auto& b : gadget.blocks) {
    const NodeSet& nodes = gadget.label(b.name);
    if (covered.intersects(nodes)) {
      issues.push_back("block " + b.name + " overlaps another block");
    }
    covered |= nodes;
    if (b.kind == BlockKind::kGiven) continue;
    const int inside = [&] {
      int count = 0;
      nodes.for_each([&](Node v) { count += (g.neighbors(v) & nodes).size(); });
      return count / 2;
    }();
    const int s = nodes.size();
    if (b.kind == BlockKind::kClique && inside != s * (s - 1) / 2) {
      issues.push_back("block " + b.name + " is not a clique");
    }
    if (b.kind == BlockKind::kIndependent && inside != 0) {
      issues.push_back("block " + b.name + " is not independent");
    }
  }
  if (covered != g.all()) issues.push_back("blocks do not cover every node");

  std::map<std::pair<std::string, std::string>, JoinKind> declared;
  for (const auto& j : gadget.joins) {
    declared[std::minmax(j.a, j.b)] = j.kind;
  }
  for (std::size_t x = 0; x < gadget.blocks.size(); ++x) {
    for (std::size_t y = x + 1; y < gadget.blocks.size(); ++y) {
      const auto& a = gadget.blocks[x].name;
      const auto& b = gadget.blocks[y].name;
      const NodeSet& na = gadget.label(a);
      const NodeSet& nb = gadget.label(b);
      long long edges = 0;
      na.for_each([&](Node u) { edges += (g.neighbors(u) & nb).size(); });
      const auto it = declared.find(std::minmax(a, b));
      if (it == declared.end()) {
        if (edges != 0) {
          issues.push_back("undeclared edges between " + a + " and " + b);
        }
      } else if (it->second == JoinKind::kFull) {
        if (edges != static_cast<long long>(na.size()) * nb.size()) {
          issues.push_back("join " + a + "-" + b + " is not complete");
        }
      } else if (edges != 1) {
        issues.push_back("join " + a + "-" + b + " is not a single edge");
      }
    }
  }
  return issues;
}

LabeledGadget AuxH(int m, const GadgetParams& params) {
  if (m < 2) throw InvalidArgument("aux graph needs m >= 2");
  ValidateParams(params);
  Builder b;
  b.AddBlock("K", m - 1, BlockKind::kClique);
  b.AddBlock("W", params.alpha, BlockKind::kIndependent);
  b.Join("K", "W");
  LabeledGadget out = b.Finish("aux-H");
  out.params = {{"m", m}, {"alpha", params.alpha}, {"beta", params.beta}};
  return out;
}

std::int64_t GOfNodeCount(int m, std::int64_t x_nodes,
                          const GadgetParams& params) {
  return x_nodes + 1 +
         static_cast<std::int64_t>(m) * (m - 1 + params.alpha + params.beta);
}

LabeledGadget GOf(int m, const LabeledGadget& x, const GadgetParams& params) {
  if (m < 2) throw InvalidArgument("G(m, X) needs m >= 2");
  ValidateParams(params);
  Builder b;
  b.AddBlock("X", x.graph.n(), BlockKind::kGiven);
  for (const auto& [u, v] : x.graph.edges()) b.Edge(u, v);
  b.AddBlock("c", 1, BlockKind::kClique);
  b.Join("X", "c");
  for (int i = 1; i <= m; ++i) {
    const std::string si = std::to_string(i);
    std::vector<Node> path;
    std::string prev = "c";
    for (int j = 1; j <= params.beta; ++j) {
      const std::string name = "v^" + si + "_" + std::to_string(j);
      path.push_back(b.AddBlock(name, 1, BlockKind::kClique)[0]);
      b.Join(prev, name);
      prev = name;
    }
    const auto u = b.AddBlock("u_" + si, 1, BlockKind::kClique);
    const auto k = b.AddBlock("K^" + si, m - 2, BlockKind::kClique);
    const auto w = b.AddBlock("W^" + si, params.alpha, BlockKind::kIndependent);
    b.Join(prev, "u_" + si);
    b.Join("u_" + si, "K^" + si);
    b.Join("u_" + si, "W^" + si);
    b.Join("K^" + si, "W^" + si);
    b.Role("path^" + si, path);
    std::vector<Node> clique = u;
    clique.insert(clique.end(), k.begin(), k.end());
    b.Role("clique^" + si, clique);
    std::vector<Node> h = clique;
    h.insert(h.end(), w.begin(), w.end());
    b.Role("H^" + si, h);
  }
  LabeledGadget out = b.Finish("g-of");
  for (const auto& [name, set] : x.labels) {
    out.labels.emplace("X." + name,
                       NodeSet(out.graph.n(), set.members()));
  }
  out.params = {{"m", m},
                {"alpha", params.alpha},
                {"beta", params.beta},
                {"x_nodes", x.graph.n()}};
  return out;
}

LabeledGadget GOf(int m, const Graph& x, const GadgetParams& params) {
  LabeledGadget wrapped;
  wrapped.graph = x;
  return GOf(m, wrapped, params);
}

LabeledGadget GFamily(int m, const GadgetParams& params) {
  if (m < 2) throw InvalidArgument("G_m needs m >= 2");
  LabeledGadget cur = GOf(2, Graph(1), params);
  for (int k = 3; k <= m; ++k) cur = GOf(k, cur, params);
  cur.kind = "g-family";
  cur.params["family_m"] = m;
  return cur;
}

std::string PathBlockName(int i, int j) {
  return "P_" + std::to_string(i) + "^" + std::to_string(j);
}

std::int64_t TimeGadgetNodeCount(int base_nodes, int t, int m) {
  return 2LL * base_nodes + 8LL * m +
         static_cast<std::int64_t>(2 * t + 2) * (t + 1) * m;
}

LabeledGadget TimeGadget(const Graph& g, int t, int m) {
  if (t < 2) throw InvalidArgument("time gadget needs T >= 2");
  if (m < 1) throw InvalidArgument("time gadget needs m >= 1");
  Builder b;
  const Graph blown = Blowup2(g);
  b.AddBlock("G_blowup", blown.n(), BlockKind::kGiven);
  for (const auto& [u, v] : blown.edges()) b.Edge(u, v);
  b.AddBlock("A", m, BlockKind::kClique);
  b.AddBlock("B", m, BlockKind::kClique);
  b.AddBlock("X", 2 * m, BlockKind::kClique);
  b.AddBlock("Y", 2 * m, BlockKind::kClique);
  b.AddBlock("Z", 2 * m, BlockKind::kClique);
  std::vector<Node> all_paths;
  for (int i = 1; i <= 2 * t + 2; ++i) {
    for (int j = 1; j <= t + 1; ++j) {
      const auto nodes = b.AddBlock(PathBlockName(i, j), m, BlockKind::kClique);
      all_paths.insert(all_paths.end(), nodes.begin(), nodes.end());
    }
  }
  b.Join("G_blowup", "Y");
  b.Join("A", "X");
  b.Join("X", "Y");
  b.Join("Y", "Z");
  b.Join("Z", "B");
  for (int i = 1; i <= 2 * t + 2; ++i) {
    b.Join("A", PathBlockName(i, 1));
    b.Join("B", PathBlockName(i, t + 1));
    for (int j = 1; j <= t; ++j) {
      b.Join(PathBlockName(i, j), PathBlockName(i, j + 1));
    }
  }
  b.Role("P", all_paths);
  LabeledGadget out = b.Finish("time-gadget");
  out.params = {{"T", t}, {"m", m}, {"base_nodes", g.n()}};
  return out;
}

Graph BinPackingGraph(const std::vector<int>& sizes) {
  Graph out;
  for (int s : sizes) {
    if (s <= 0) throw InvalidArgument("item sizes must be positive");
    out = DisjointUnion(out, Complete(s));
  }
  return out;
}

TreeShape ParseTreeShape(const std::string& name) {
  if (name == "star") return TreeShape::kStar;
  if (name == "path" || name == "spider") return TreeShape::kPath;
  if (name == "arbitrary") return TreeShape::kArbitrary;
  throw InvalidArgument("unknown tree shape '" + name + "'");
}

LabeledGadget ThreePartitionTree(const std::vector<int>& a, TreeShape shape,
                                 std::uint64_t seed) {
  if (a.empty() || a.size() % 3 != 0) {
    throw InvalidArgument("3-partition needs 3k numbers");
  }
  for (int x : a) {
    if (x <= 0) throw InvalidArgument("3-partition numbers must be positive");
  }
  const int k = static_cast<int>(a.size() / 3);
  const int m = std::accumulate(a.begin(), a.end(), 0);
  if (m % k != 0) {
    throw InvalidArgument("sum " + std::to_string(m) +
                          " is not divisible by k=" + std::to_string(k));
  }
  std::mt19937_64 rng(seed);
  Builder b;
  b.AddBlock("c", 1, BlockKind::kClique);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int size = a[i] + m;
    const std::string name = Indexed("T_", static_cast<int>(i) + 1);
    const auto nodes = b.AddBlock(name, size, BlockKind::kGiven);
    for (int v = 1; v < size; ++v) {
      Node parent = nodes[0];
      if (shape == TreeShape::kPath) {
        parent = nodes[static_cast<std::size_t>(v - 1)];
      } else if (shape == TreeShape::kArbitrary) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        parent = nodes[static_cast<std::size_t>(pick(rng))];
      }
      b.Edge(parent, nodes[static_cast<std::size_t>(v)]);
    }
    b.Edge(0, nodes[0]);
    b.Role(Indexed("attach_", static_cast<int>(i) + 1), {nodes[0]});
  }
  LabeledGadget out = b.Finish("three-partition");
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.joins.push_back({"c", Indexed("T_", static_cast<int>(i) + 1),
                         JoinKind::kSingle});
  }
  out.params = {{"k", k}, {"m", m}, {"budget", m / k + 3 * m + 1}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.params[Indexed("a_", static_cast<int>(i) + 1)] = a[i];
  }
  return out;
}

Graph HunterTransform(const Graph& g) {
  const auto edges = g.edges();
  const int n = g.n();
  Graph out(n + static_cast<int>(edges.size()) * (n + 1));
  Node next = n;
  for (const auto& [u, v] : edges) {
    for (int copy = 0; copy <= n; ++copy) {
      out.add_edge(u, next);
      out.add_edge(next, v);
      ++next;
    }
  }
  return out;
}

}  // namespace fflab
