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

#include "fflab/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <unordered_set>

#include "fflab/error.hpp"
#include "fflab/strategies.hpp"

namespace fflab {
namespace {

constexpr int kMaxEnumerationNodes = 24;

// Adjacency of g[v_prime] as masks over the positions 0..|V'|-1.
std::vector<std::uint32_t> LocalAdjacency(const Graph& g,
                                          const std::vector<Node>& nodes) {
  std::vector<std::uint32_t> adj(nodes.size(), 0);
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if (a != b && g.has_edge(nodes[a], nodes[b])) adj[a] |= 1u << b;
    }
  }
  return adj;
}

// min_nb[i] = smallest |N(W)| over W of size i inside the local graph.
std::vector<int> MinNeighbourhoodBySize(const std::vector<std::uint32_t>& adj) {
  const int k = static_cast<int>(adj.size());
  std::vector<int> min_nb(static_cast<std::size_t>(k) + 1, k);
  const std::uint32_t all = k == 32 ? ~0u : ((1u << k) - 1u);
  min_nb[0] = 0;
  std::function<void(int, std::uint32_t, std::uint32_t)> rec =
      [&](int pos, std::uint32_t w, std::uint32_t nb) {
        if (pos == k) {
          const int size = std::popcount(w);
          const int out = std::popcount(nb & ~w & all);
          auto& slot = min_nb[static_cast<std::size_t>(size)];
          slot = std::min(slot, out);
          return;
        }
        rec(pos + 1, w | (1u << pos), nb | adj[static_cast<std::size_t>(pos)]);
        rec(pos + 1, w, nb);
      };
  rec(0, 0, 0);
  return min_nb;
}

NodeSet SetOf(int n, const std::vector<Node>& nodes) {
  NodeSet out(n);
  for (Node v : nodes) out.insert(v);
  return out;
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order until fn
// returns true.
bool ForEachCombination(int n, int k,
                        const std::function<bool(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

// Strategy on g that holds `removed` throughout and sweeps g - removed with
// the best simple rule; nullopt when neither applies.
std::optional<UpperBound> RemovalCandidate(const Graph& g,
                                           const NodeSet& removed) {
  const NodeSet keep = g.all() - removed;
  std::vector<Node> mapping;
  const Graph rest = InducedSubgraph(g, keep, &mapping);
  Strategy inner;
  if (rest.edge_count() == 0) {
    inner = StrategyEdgeless(rest);
  } else if (IsCaterpillarForest(rest)) {
    inner = StrategyPathDecomposition(rest, CaterpillarDecomposition(rest));
  } else {
    return std::nullopt;
  }
  Strategy s = StrategyWithHeldSet(g, inner, mapping, removed);
  return UpperBound{s.m, std::move(s)};
}

// Smallest R (by size, then lexicographic) with g - R satisfying `ok`,
// looking at no more than `budget` candidate sets.
std::optional<NodeSet> SmallestRemoval(
    const Graph& g, int max_size, std::uint64_t budget,
    const std::function<bool(const Graph&)>& ok) {
  const int n = g.n();
  std::uint64_t tried = 0;
  for (int r = 0; r <= std::min(max_size, n); ++r) {
    std::optional<NodeSet> found;
    bool exhausted = false;
    ForEachCombination(n, r, [&](const std::vector<int>& idx) {
      if (++tried > budget) {
        exhausted = true;
        return true;
      }
      NodeSet removed(n);
      for (int v : idx) removed.insert(v);
      if (ok(InducedSubgraph(g, g.all() - removed))) {
        found = removed;
        return true;
      }
      return false;
    });
    if (found) return found;
    if (exhausted) return std::nullopt;
  }
  return std::nullopt;
}

// Removes a highest-degree node of the remainder until `ok` holds.
NodeSet GreedyRemoval(const Graph& g,
                      const std::function<bool(const Graph&)>& ok) {
  NodeSet removed(g.n());
  while (true) {
    const NodeSet keep = g.all() - removed;
    if (ok(InducedSubgraph(g, keep))) return removed;
    Node best = -1;
    int best_deg = -1;
    keep.for_each([&](Node v) {
      const int d = (g.neighbors(v) & keep).size();
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    });
    removed.insert(best);
  }
}

bool IsEdgeless(const Graph& g) { return g.edge_count() == 0; }

}  // namespace

std::string_view ToString(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kMinDegree:
      return "min_degree";
    case CertificateKind::kEdgeCount:
      return "edge_count";
    case CertificateKind::kExpansion:
      return "expansion";
    case CertificateKind::kSubgraphExpansion:
      return "subgraph_expansion";
    case CertificateKind::kCharacterization:
      return "characterization";
  }
  return "?";
}

CertificateKind ParseCertificateKind(std::string_view name) {
  for (auto k : {CertificateKind::kMinDegree, CertificateKind::kEdgeCount,
                 CertificateKind::kExpansion,
                 CertificateKind::kSubgraphExpansion,
                 CertificateKind::kCharacterization}) {
    if (ToString(k) == name) return k;
  }
  throw InvalidArgument("unknown certificate kind '" + std::string(name) +
                        "'");
}

bool CheckCertificate(const Graph& g, const Certificate& cert) {
  NodeSet vp(g.n());
  for (Node v : cert.v_prime) {
    if (v < 0 || v >= g.n() || vp.contains(v)) return false;
    vp.insert(v);
  }
  if (cert.v_prime.empty()) vp = g.all();
  const Graph sub = InducedSubgraph(g, vp);
  if (cert.m <= 0) return true;
  switch (cert.kind) {
    case CertificateKind::kMinDegree:
      return cert.m <= LbMinDegree(sub);
    case CertificateKind::kEdgeCount:
      return cert.m <= LbEdgeCount(sub);
    case CertificateKind::kExpansion:
    case CertificateKind::kSubgraphExpansion: {
      if (cert.kind == CertificateKind::kExpansion && vp != g.all()) {
        return false;
      }
      if (cert.i < 1 || cert.i > sub.n() - cert.m + 1) return false;
      return ExpansionHolds(sub, cert.i, cert.m);
    }
    case CertificateKind::kCharacterization:
      if (sub.n() == 0) return false;
      if (cert.m == 1) return true;
      if (cert.m == 2) return sub.edge_count() > 0;
      if (cert.m == 3) return !IsCaterpillarForest(sub);
      return false;
  }
  return false;
}

int LbMinDegree(const Graph& g) {
  return g.n() == 0 ? 0 : g.min_degree() + 1;
}

int LbEdgeCount(const Graph& g) {
  const std::int64_t n = g.n();
  if (n == 0) return 0;
  const std::int64_t twice_e = 2 * static_cast<std::int64_t>(g.edge_count());
  int best = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    if (twice_e >= m * (2 * n - m - 1)) best = static_cast<int>(m);
  }
  return best;
}

bool ExpansionHolds(const Graph& g, int i, int m) {
  if (m < 1 || i < 1 || i > g.n() - m + 1) {
    throw InvalidArgument("expansion needs 1 <= i <= n - m + 1, got i = " +
                          std::to_string(i) + ", m = " + std::to_string(m));
  }
  if (m == 1) return true;
  // A W with |N(W)| <= m - 2 refutes the claim.
  if (g.n() <= kMaxEnumerationNodes) {
    return !LimitedNeighboursBruteforce(g, m - 1, i).has_value();
  }
  return !LimitedNeighboursBoundedM(g, m - 1, i).has_value();
}

LowerBound BestExpansionOn(const Graph& g, const NodeSet& v_prime) {
  const std::vector<Node> nodes = v_prime.members();
  const int k = static_cast<int>(nodes.size());
  if (k > kMaxEnumerationNodes) {
    throw InvalidArgument("expansion search limited to " +
                          std::to_string(kMaxEnumerationNodes) + " nodes");
  }
  LowerBound best;
  best.certificate.v_prime = nodes;
  best.certificate.kind = v_prime == g.all()
                              ? CertificateKind::kExpansion
                              : CertificateKind::kSubgraphExpansion;
  if (k == 0) return best;
  const auto min_nb = MinNeighbourhoodBySize(LocalAdjacency(g, nodes));
  for (int i = 1; i <= k; ++i) {
    const int value =
        std::min(min_nb[static_cast<std::size_t>(i)] + 1, k - i + 1);
    if (value > best.value) {
      best.value = value;
      best.certificate.i = i;
      best.certificate.m = value;
    }
  }
  return best;
}

LowerBound LbSubgraphExpansion(const Graph& g, const SubgraphSearch& search) {
  const int n = g.n();
  LowerBound best;
  best.certificate.kind = CertificateKind::kExpansion;
  auto consider = [&](const NodeSet& vp) {
    LowerBound lb = BestExpansionOn(g, vp);
    if (lb.value > best.value) best = std::move(lb);
  };
  if (n == 0) return best;
  if (n <= search.exhaustive_max_n) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      consider(NodeSet::FromMask(n, mask));
    }
    return best;
  }
  if (n <= kMaxEnumerationNodes) consider(g.all());

  // Connected subsets grown by extension, smallest first.
  std::unordered_set<NodeSet, NodeSetHash> seen;
  std::vector<NodeSet> layer;
  for (Node v = 0; v < n; ++v) layer.push_back(NodeSet(n, {v}));
  std::uint64_t visited = 0;
  for (int size = 1; size <= search.max_subset_size && !layer.empty();
       ++size) {
    std::vector<NodeSet> next;
    for (const NodeSet& s : layer) {
      if (++visited > search.max_subsets) break;
      consider(s);
      if (size == search.max_subset_size) continue;
      NodeSet frontier(n);
      s.for_each([&](Node v) { frontier |= g.neighbors(v); });
      frontier -= s;
      frontier.for_each([&](Node v) {
        NodeSet grown = s;
        grown.insert(v);
        if (seen.insert(grown).second) next.push_back(std::move(grown));
      });
    }
    if (visited > search.max_subsets) break;
    layer = std::move(next);
  }

  // Random connected subsets grown from a random seed node.
  std::mt19937_64 rng(search.seed);
  const int cap = std::min({search.random_max_size, n, kMaxEnumerationNodes});
  for (std::uint64_t t = 0; t < search.random_samples; ++t) {
    const int target = std::uniform_int_distribution<int>(1, cap)(rng);
    NodeSet s(n, {std::uniform_int_distribution<Node>(0, n - 1)(rng)});
    while (s.size() < target) {
      NodeSet frontier(n);
      s.for_each([&](Node v) { frontier |= g.neighbors(v); });
      frontier -= s;
      if (frontier.empty()) break;
      const auto options = frontier.members();
      s.insert(options[std::uniform_int_distribution<std::size_t>(
          0, options.size() - 1)(rng)]);
    }
    consider(s);
  }
  return best;
}

std::optional<int> CharSmallFfn(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  if (g.edge_count() == 0) return 1;
  if (IsCaterpillarForest(g)) return 2;
  return std::nullopt;
}

std::optional<NodeSet> LimitedNeighboursBruteforce(const Graph& g, int m,
                                                   int k) {
  const int n = g.n();
  if (n > kMaxEnumerationNodes) {
    throw InvalidArgument("brute force limited to " +
                          std::to_string(kMaxEnumerationNodes) + " nodes");
  }
  if (m < 1 || k < 0 || k > n) return std::nullopt;
  std::optional<NodeSet> found;
  ForEachCombination(n, k, [&](const std::vector<int>& idx) {
    NodeSet w(n);
    for (int v : idx) w.insert(v);
    if (Neighborhood(g, w).size() <= m - 1) {
      found = w;
      return true;
    }
    return false;
  });
  return found;
}

std::optional<NodeSet> LimitedNeighboursBoundedM(const Graph& g, int m,
                                                 int k) {
  const int n = g.n();
  if (m < 1 || k < 0 || k > n) return std::nullopt;
  std::optional<NodeSet> found;
  for (int r = 0; r <= std::min(m - 1, n) && !found; ++r) {
    ForEachCombination(n, r, [&](const std::vector<int>& idx) {
      NodeSet s(n);
      for (int v : idx) s.insert(v);
      const auto comps = Components(g, g.all() - s);
      // reach[c][j]: some subset of the first c components has size j.
      const std::size_t c_count = comps.size();
      std::vector<std::vector<char>> reach(
          c_count + 1, std::vector<char>(static_cast<std::size_t>(k) + 1, 0));
      reach[0][0] = 1;
      for (std::size_t c = 0; c < c_count; ++c) {
        const int sz = comps[c].size();
        for (int j = 0; j <= k; ++j) {
          if (!reach[c][static_cast<std::size_t>(j)]) continue;
          reach[c + 1][static_cast<std::size_t>(j)] = 1;
          if (j + sz <= k) reach[c + 1][static_cast<std::size_t>(j + sz)] = 1;
        }
      }
      if (!reach[c_count][static_cast<std::size_t>(k)]) return false;
      NodeSet w(n);
      int j = k;
      for (std::size_t c = c_count; c > 0; --c) {
        if (reach[c - 1][static_cast<std::size_t>(j)]) continue;
        w |= comps[c - 1];
        j -= comps[c - 1].size();
      }
      found = w;
      return true;
    });
  }
  return found;
}

std::vector<UpperBound> UbCandidates(const Graph& g,
                                     const UpperBoundHints& hints) {
  std::vector<UpperBound> out;
  const int n = g.n();
  if (n == 0) {
    out.push_back({0, Strategy{0, {}, "empty"}});
    return out;
  }
  auto add = [&](Strategy s) {
    const int value = s.m;
    out.push_back({value, std::move(s)});
  };
  add(Strategy{n, {g.all()}, "order"});
  if (g.edge_count() == 0) add(StrategyEdgeless(g));
  if (IsCaterpillarForest(g)) {
    add(StrategyPathDecomposition(g, CaterpillarDecomposition(g)));
  }
  if (hints.path_decomposition) {
    add(StrategyPathDecomposition(g, *hints.path_decomposition));
  }
  if (IsForest(g)) {
    int m = 1;
    for (const NodeSet& comp : Components(g)) {
      const int diam = static_cast<int>(TreeLongestPath(g, comp).size()) - 1;
      m = std::max(m, (diam + 3) / 2);
    }
    add(StrategyTreeDiameter(g, m));
  }
  // Vertex removal: exact smallest R for small graphs, greedy otherwise.
  constexpr std::uint64_t kRemovalBudget = 20'000;
  for (const auto& ok : {std::function<bool(const Graph&)>(IsEdgeless),
                         std::function<bool(const Graph&)>(
                             [](const Graph& h) {
                               return IsCaterpillarForest(h);
                             })}) {
    auto removed = SmallestRemoval(g, n, kRemovalBudget, ok);
    if (!removed) removed = GreedyRemoval(g, ok);
    if (removed->empty()) continue;
    if (auto c = RemovalCandidate(g, *removed)) out.push_back(std::move(*c));
  }
  return out;
}

UpperBound UbConstructive(const Graph& g, const UpperBoundHints& hints) {
  auto all = UbCandidates(g, hints);
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].value < all[best].value) best = i;
  }
  return std::move(all[best]);
}

double ForestBound(const Graph& g) {
  if (!IsForest(g)) throw InvalidArgument("forest bound needs a forest");
  return std::log(2.0 * g.n() + 1.0) / std::log(3.0) + 2.0;
}

BinaryTreeBounds BinaryTreeFfnBounds(int depth) {
  if (depth < 0) throw InvalidArgument("negative tree depth");
  static constexpr int kTable[7][2] = {{1, 1}, {2, 2}, {2, 2}, {3, 3},
                                       {3, 3}, {3, 4}, {3, 4}};
  BinaryTreeBounds b;
  if (depth <= 6) {
    b.lower = kTable[depth][0];
    b.lower_int = kTable[depth][0];
    b.upper = kTable[depth][1];
    return b;
  }
  b.lower = std::floor((depth - 1) / 2.0) -
            0.5 * std::log2(std::floor((depth - 5) / 2.0)) - 2.0;
  b.lower_exclusive = true;
  b.lower_int = static_cast<int>(std::floor(b.lower)) + 1;
  b.upper = (depth + 1) / 2 + 1;
  return b;
}

int Flips(std::uint64_t x) {
  if (x == 0) return 0;
  // The top set bit always differs from the zero above it.
  return std::popcount(x ^ (x >> 1)) - 1;
}

int HammingWeight(std::uint64_t x) { return std::popcount(x); }

std::uint64_t AlternatingPattern(int d) {
  if (d < 0 || d > 61) throw InvalidArgument("pattern length out of range");
  std::uint64_t out = 0;
  for (int i = 0; i <= (d - 1) / 2; ++i) out |= std::uint64_t{1} << (2 * i + 1);
  return out;
}

bool CheckAlternatingFlips(int d, std::int64_t x) {
  if (d < 0 || d % 2 == 0) throw InvalidArgument("d must be odd");
  const auto pattern = static_cast<std::int64_t>(AlternatingPattern(d));
  const std::int64_t sum = pattern + x;
  const int flips = Flips(static_cast<std::uint64_t>(sum < 0 ? -sum : sum));
  if (x == 0) return flips == d;
  const std::uint64_t ax = static_cast<std::uint64_t>(x < 0 ? -x : x);
  const int floor_log = 63 - std::countl_zero(ax);
  return flips >= d - floor_log - 4;
}

ConjectureReport CheckConjecture(const Graph& g, int ffn) {
  const int n = g.n();
  if (n > 16) throw InvalidArgument("conjecture check limited to 16 nodes");
  ConjectureReport report;
  report.ffn = ffn;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    LowerBound lb = BestExpansionOn(g, NodeSet::FromMask(n, mask));
    if (lb.value > report.max_certified) {
      report.max_certified = lb.value;
      report.best = std::move(lb.certificate);
    }
  }
  report.sound = report.max_certified <= ffn;
  report.tight = report.max_certified >= ffn;
  return report;
}

void ValidatePathDecomposition(const Graph& g,
                               const std::vector<NodeSet>& bags) {
  const int n = g.n();
  std::vector<int> first(static_cast<std::size_t>(n), -1);
  std::vector<int> last(static_cast<std::size_t>(n), -1);
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (std::size_t t = 0; t < bags.size(); ++t) {
    if (bags[t].universe() != n) {
      throw InvalidArgument("bag " + std::to_string(t) +
                            " is over the wrong node range");
    }
    bags[t].for_each([&](Node v) {
      const auto i = static_cast<std::size_t>(v);
      if (first[i] < 0) first[i] = static_cast<int>(t);
      last[i] = static_cast<int>(t);
      ++count[i];
    });
  }
  for (Node v = 0; v < n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (first[i] < 0) {
      throw InvalidArgument("node " + std::to_string(v) + " is in no bag");
    }
    if (count[i] != last[i] - first[i] + 1) {
      throw InvalidArgument("bags holding node " + std::to_string(v) +
                            " are not contiguous");
    }
  }
  for (const auto& [u, v] : g.edges()) {
    const bool covered = std::any_of(bags.begin(), bags.end(), [&](auto& b) {
      return b.contains(u) && b.contains(v);
    });
    if (!covered) {
      throw InvalidArgument("edge " + std::to_string(u) + "-" +
                            std::to_string(v) + " is in no bag");
    }
  }
}

std::vector<NodeSet> CaterpillarDecomposition(const Graph& g) {
  if (!IsCaterpillarForest(g)) {
    throw InvalidArgument("graph is not a caterpillar forest");
  }
  const int n = g.n();
  std::vector<NodeSet> bags;
  for (const NodeSet& comp : Components(g)) {
    if (comp.size() <= 2) {
      bags.push_back(comp);
      continue;
    }
    const auto path = TreeLongestPath(g, comp);
    const std::vector<Node> spine(path.begin() + 1, path.end() - 1);
    const NodeSet on_spine = SetOf(n, spine);
    for (std::size_t i = 0; i < spine.size(); ++i) {
      (g.neighbors(spine[i]) - on_spine).for_each([&](Node leaf) {
        bags.push_back(NodeSet(n, {spine[i], leaf}));
      });
      if (i + 1 < spine.size()) {
        bags.push_back(NodeSet(n, {spine[i], spine[i + 1]}));
      }
    }
  }
  return bags;
}

Graph BadExpansionGraph(int clique_number) {
  const int q = clique_number;
  if (q < 2) throw InvalidArgument("clique number must be at least 2");
  Graph g(2 * q - 1);
  for (Node v = 0; v + 1 < q; ++v) g.add_edge(v, v + 1);
  for (Node a = q; a < 2 * q - 1; ++a) {
    g.add_edge(q - 1, a);
    for (Node b = a + 1; b < 2 * q - 1; ++b) g.add_edge(a, b);
  }
  return g;
}

Graph BadExpansionGraphLiteral(int clique_size) {
  const int q = clique_size;
  if (q < 1) throw InvalidArgument("clique size must be positive");
  Graph g(2 * q);
  for (Node v = 0; v + 1 < q; ++v) g.add_edge(v, v + 1);
  for (Node a = q; a < 2 * q; ++a) {
    g.add_edge(q - 1, a);
    for (Node b = a + 1; b < 2 * q; ++b) g.add_edge(a, b);
  }
  return g;
}

}  // namespace fflab
