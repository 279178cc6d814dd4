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

#include "fflab/strategies.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "fflab/bounds.hpp"
#include "fflab/error.hpp"

namespace fflab {
namespace {

Strategy Verified(const Graph& g, Strategy s, const char* rule,
                  Variant variant = Variant::kFirefighter) {
  s.provenance = rule;
  const Verdict v = Verify(g, s, variant);
  if (!v.winning) {
    throw VerificationFailure(std::string(rule) +
                              " strategy loses: burning set " +
                              v.burning.to_string() + " after step " +
                              std::to_string(v.index));
  }
  return s;
}

int MaxStep(const std::vector<NodeSet>& steps) {
  int best = 0;
  for (const auto& f : steps) best = std::max(best, f.size());
  return best;
}

// Re-expresses a set of `inner` nodes in g's node range.
NodeSet Lift(int n, const NodeSet& inner, const std::vector<Node>& inner_to_g) {
  NodeSet out(n);
  inner.for_each(
      [&](Node v) { out.insert(inner_to_g[static_cast<std::size_t>(v)]); });
  return out;
}

// Centre-holding recursion on one tree component `comp`.
void TreeSweep(const Graph& g, const NodeSet& comp, int m,
               std::vector<NodeSet>& out) {
  if (comp.size() == 1) {
    out.push_back(comp);
    return;
  }
  if (m <= 1) {
    throw InvalidArgument("tree diameter exceeds 2m - 2");
  }
  const auto path = TreeLongestPath(g, comp);
  const Node r = path[path.size() / 2];
  NodeSet rest = comp;
  rest.erase(r);
  for (const NodeSet& sub : Components(g, rest)) {
    const std::size_t before = out.size();
    TreeSweep(g, sub, m - 1, out);
    for (std::size_t t = before; t < out.size(); ++t) out[t].insert(r);
  }
}

NodeSet Blocks(const LabeledGadget& gadget,
               std::initializer_list<std::string> names) {
  NodeSet out(gadget.graph.n());
  for (const auto& name : names) out |= gadget.label(name);
  return out;
}

}  // namespace

Strategy StrategyEdgeless(const Graph& g) {
  if (g.edge_count() != 0) {
    throw InvalidArgument("edgeless strategy needs a graph without edges");
  }
  Strategy s{g.n() == 0 ? 0 : 1, {}, ""};
  for (Node v = 0; v < g.n(); ++v) s.steps.push_back(NodeSet(g.n(), {v}));
  return Verified(g, std::move(s), "edgeless");
}

Strategy StrategyClique(int n) {
  if (n < 1) throw InvalidArgument("clique strategy needs n >= 1");
  const Graph g = Complete(n);
  return Verified(g, Strategy{n, {g.all()}, ""}, "clique");
}

Strategy StrategyPathDecomposition(const Graph& g,
                                   const std::vector<NodeSet>& bags) {
  ValidatePathDecomposition(g, bags);
  Strategy s{MaxStep(bags), bags, "path-decomposition"};
  if (IsWinning(g, s, Variant::kFirefighter)) return s;
  Strategy doubled{s.m, {}, ""};
  for (const auto& bag : bags) {
    doubled.steps.push_back(bag);
    doubled.steps.push_back(bag);
  }
  return Verified(g, std::move(doubled), "path-decomposition-doubled");
}

Strategy StrategyTreeDiameter(const Graph& g, int m) {
  if (!IsForest(g)) throw InvalidArgument("tree strategy needs a forest");
  Strategy s{m, {}, ""};
  for (const NodeSet& comp : Components(g)) {
    const auto path = TreeLongestPath(g, comp);
    const int diam = static_cast<int>(path.size()) - 1;
    if (diam > 2 * m - 2) {
      throw InvalidArgument("component diameter " + std::to_string(diam) +
                            " exceeds 2m - 2 = " + std::to_string(2 * m - 2));
    }
    TreeSweep(g, comp, m, s.steps);
  }
  return Verified(g, std::move(s), "tree-diameter");
}

Strategy StrategyBinaryTree(int depth) {
  if (depth < 0) throw InvalidArgument("negative tree depth");
  const Graph g = BinaryTree(depth);
  const int n = g.n();
  // Steps clearing the subtree of `root` with depth d. Odd depths keep
  // `root` in every step, which shields the subtree from its parent.
  std::function<std::vector<NodeSet>(Node, int)> build =
      [&](Node root, int d) -> std::vector<NodeSet> {
    if (d == 0) return {NodeSet(n, {root})};
    const Node left = 2 * root + 1;
    const Node right = 2 * root + 2;
    std::vector<NodeSet> out;
    if (d % 2 == 1) {
      for (Node child : {left, right}) {
        for (NodeSet f : build(child, d - 1)) {
          f.insert(root);
          out.push_back(std::move(f));
        }
      }
      return out;
    }
    out = build(left, d - 1);
    out.push_back(NodeSet(n, {left, root}));
    out.push_back(NodeSet(n, {root, right}));
    for (NodeSet& f : build(right, d - 1)) out.push_back(std::move(f));
    return out;
  };
  Strategy s{(depth + 1) / 2 + 1, build(0, depth), ""};
  return Verified(g, std::move(s), "binary-tree");
}

Strategy StrategyWithHeldSet(const Graph& g, const Strategy& inner,
                             const std::vector<Node>& inner_to_g,
                             const NodeSet& hold) {
  Strategy s{inner.m + hold.size(), {}, ""};
  for (const auto& f : inner.steps) {
    s.steps.push_back(Lift(g.n(), f, inner_to_g) | hold);
  }
  if (s.steps.empty()) s.steps.push_back(hold);
  return Verified(g, std::move(s), "vertex-removal");
}

std::pair<int, int> TimeGadgetCheckpoints(int t) {
  return {2 * t * t + 2 * t + 1, 2 * t * t + 3 * t + 5};
}

Strategy StrategyTimeGadget(const LabeledGadget& gadget,
                            const Strategy& inner) {
  if (gadget.kind != "time-gadget") {
    throw InvalidArgument("expected a time gadget");
  }
  const int t = static_cast<int>(gadget.params.at("T"));
  const int m = static_cast<int>(gadget.params.at("m"));
  const int base = static_cast<int>(gadget.params.at("base_nodes"));
  if (inner.length() > t) {
    throw InvalidArgument("inner strategy longer than T");
  }
  if (inner.m > m) throw InvalidArgument("inner strategy exceeds budget m");
  const NodeSet ab = Blocks(gadget, {"A", "B"});
  auto path = [&](int i, int j) { return gadget.label(PathBlockName(i, j)); };
  Strategy s{4 * m, {}, ""};
  auto sweep_paths = [&](bool lead_in) {
    if (lead_in) s.steps.push_back(ab | path(1, 1));
    for (int i = 1; i <= 2 * t + 2; ++i) {
      for (int j = 1; j <= t; ++j) {
        s.steps.push_back(ab | path(i, j) | path(i, j + 1));
      }
    }
  };
  sweep_paths(true);
  s.steps.push_back(ab | gadget.label("X"));
  s.steps.push_back(Blocks(gadget, {"X", "Y"}));
  for (int i = 0; i < t; ++i) {
    NodeSet f = gadget.label("Y");
    if (i < inner.length()) {
      const NodeSet& step = inner.steps[static_cast<std::size_t>(i)];
      if (step.universe() != base) {
        throw InvalidArgument("inner strategy is over a different graph");
      }
      step.for_each([&](Node v) {
        f.insert(2 * v);
        f.insert(2 * v + 1);
      });
    }
    s.steps.push_back(std::move(f));
  }
  s.steps.push_back(Blocks(gadget, {"Y", "Z"}));
  s.steps.push_back(ab | gadget.label("Z"));
  sweep_paths(false);
  return Verified(gadget.graph, std::move(s), "time-gadget");
}

Strategy StrategyGOf(const LabeledGadget& gadget, const Strategy& inner) {
  if (gadget.kind != "g-of" && gadget.kind != "g-family") {
    throw InvalidArgument("expected a G(m, X) gadget");
  }
  const int m = static_cast<int>(gadget.params.at("m"));
  const int beta = static_cast<int>(gadget.params.at("beta"));
  const int x_nodes = static_cast<int>(gadget.params.at("x_nodes"));
  if (inner.m > m - 1) {
    throw InvalidArgument("inner strategy must use at most m - 1");
  }
  const int n = gadget.graph.n();
  const Node c = gadget.label("c").first().value();
  auto u = [&](int i) {
    return gadget.label("u_" + std::to_string(i)).first().value();
  };
  // v(i, 0) is c and v(i, β + 1) is u_i.
  auto v = [&](int i, int j) -> Node {
    if (j == 0) return c;
    if (j == beta + 1) return u(i);
    return gadget.label("v^" + std::to_string(i) + "_" + std::to_string(j))
        .first()
        .value();
  };
  auto w = [&](int i) {
    return gadget.label("W^" + std::to_string(i)).members();
  };
  Strategy s{m, {}, ""};
  auto clear_h = [&](int i) {
    const NodeSet clique = gadget.label("clique^" + std::to_string(i));
    for (Node wj : w(i)) {
      NodeSet f = clique;
      f.insert(wj);
      s.steps.push_back(std::move(f));
    }
  };
  auto with = [&](NodeSet f, std::initializer_list<Node> extra) {
    for (Node x : extra) f.insert(x);
    return f;
  };
  for (int r = 1; r < m; ++r) {
    clear_h(r);
    // Sweep path 1 from u_1 to c, guarding u_2..u_r.
    NodeSet guard(n);
    for (int i = 2; i <= r; ++i) guard.insert(u(i));
    for (int j = beta + 1; j >= 1; --j) {
      s.steps.push_back(with(guard, {v(1, j), v(1, j - 1)}));
    }
    // The other cleared paths, from u_i down to v^i_1, with c held.
    for (int i = 2; i <= r; ++i) {
      guard.erase(u(i));
      NodeSet held = with(guard, {c});
      for (int j = beta + 1; j >= 2; --j) {
        s.steps.push_back(with(held, {v(i, j), v(i, j - 1)}));
      }
    }
    // X behind c.
    for (const NodeSet& f : inner.steps) {
      NodeSet lifted(n);
      f.for_each([&](Node x) {
        if (x >= x_nodes) {
          throw InvalidArgument("inner strategy node outside X");
        }
        lifted.insert(x);
      });
      lifted.insert(c);
      s.steps.push_back(std::move(lifted));
    }
    // Paths toward the still burning H^i, guarding every finished u_i.
    NodeSet finished(n);
    for (int i = r + 1; i <= m; ++i) {
      const bool last = i == m;
      for (int j = 0; j <= beta; ++j) {
        NodeSet f = with(finished, {v(i, j), v(i, j + 1)});
        if (!last || j == 0) f.insert(c);
        s.steps.push_back(std::move(f));
      }
      finished.insert(u(i));
    }
  }
  clear_h(m);
  return Verified(gadget.graph, std::move(s), "g-of");
}

Strategy StrategyGFamily(const LabeledGadget& gadget) {
  const int top = static_cast<int>(gadget.params.at("m"));
  const GadgetParams params{static_cast<int>(gadget.params.at("alpha")),
                            static_cast<int>(gadget.params.at("beta"))};
  LabeledGadget level = GOf(2, Graph(1), params);
  Strategy s = StrategyGOf(level, Strategy{1, {NodeSet(1, {0})}, ""});
  for (int k = 3; k <= top; ++k) {
    level = GOf(k, level, params);
    s = StrategyGOf(level, s);
  }
  if (!(level.graph == gadget.graph)) {
    throw InvalidArgument("gadget is not a member of the G_m family");
  }
  return s;
}

Strategy StrategyThreePartition(const LabeledGadget& gadget) {
  if (gadget.kind != "three-partition") {
    throw InvalidArgument("expected a 3-partition tree");
  }
  const int k = static_cast<int>(gadget.params.at("k"));
  const int m = static_cast<int>(gadget.params.at("m"));
  const int target = m / k;
  std::vector<int> a;
  for (int i = 1; i <= 3 * k; ++i) {
    a.push_back(static_cast<int>(gadget.params.at("a_" + std::to_string(i))));
  }
  std::vector<int> group(a.size(), -1);
  std::vector<int> sums(static_cast<std::size_t>(k), 0);
  std::vector<int> counts(static_cast<std::size_t>(k), 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t idx) {
    if (idx == a.size()) return true;
    for (int gi = 0; gi < k; ++gi) {
      auto& sum = sums[static_cast<std::size_t>(gi)];
      auto& cnt = counts[static_cast<std::size_t>(gi)];
      if (cnt == 3 || sum + a[idx] > target) continue;
      sum += a[idx];
      ++cnt;
      group[idx] = gi;
      const bool done = (cnt < 3 || sum == target) && assign(idx + 1);
      if (done) return true;
      sum -= a[idx];
      --cnt;
      // Empty groups are interchangeable.
      if (cnt == 0) break;
    }
    return false;
  };
  if (!assign(0)) {
    throw InvalidArgument("no 3-partition exists for this instance");
  }
  const NodeSet c = gadget.label("c");
  Strategy s{target + 3 * m + 1, {}, ""};
  for (int gi = 0; gi < k; ++gi) {
    NodeSet f = c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (group[i] == gi) f |= gadget.label("T_" + std::to_string(i + 1));
    }
    s.steps.push_back(std::move(f));
  }
  return Verified(gadget.graph, std::move(s), "three-partition");
}

NodeSet HunterStartSet(const Graph& g, StartParity parity) {
  const Graph h = HunterTransform(g);
  NodeSet original(h.n());
  for (Node v = 0; v < g.n(); ++v) original.insert(v);
  switch (parity) {
    case StartParity::kOriginal:
      return original;
    case StartParity::kIntermediate:
      return h.all() - original;
    case StartParity::kEither:
      break;
  }
  return h.all();
}

Strategy HunterStrategyFromFf(const Graph& g, const Strategy& s,
                              StartParity parity) {
  if (!IsWinning(g, s, Variant::kFirefighter)) {
    throw InvalidArgument("firefighter strategy does not win on g");
  }
  const Graph h = HunterTransform(g);
  std::vector<Node> identity(static_cast<std::size_t>(g.n()));
  std::iota(identity.begin(), identity.end(), 0);
  Strategy out{s.m, {}, ""};
  const NodeSet empty(h.n());
  for (std::size_t t = 0; t < s.steps.size(); ++t) {
    const NodeSet f = Lift(h.n(), s.steps[t], identity);
    const bool last = t + 1 == s.steps.size();
    switch (parity) {
      case StartParity::kEither:
        out.steps.push_back(f);
        out.steps.push_back(f);
        break;
      case StartParity::kOriginal:
        out.steps.push_back(f);
        if (!last) out.steps.push_back(empty);
        break;
      case StartParity::kIntermediate:
        out.steps.push_back(empty);
        out.steps.push_back(f);
        break;
    }
  }
  out.provenance = parity == StartParity::kEither ? "hunter-doubled"
                   : parity == StartParity::kOriginal
                       ? "hunter-original-start"
                       : "hunter-intermediate-start";
  const Verdict v =
      VerifyFrom(h, out, HunterStartSet(g, parity), Variant::kHunter);
  if (!v.winning) {
    throw VerificationFailure(out.provenance + " strategy loses after step " +
                              std::to_string(v.index));
  }
  return out;
}

Strategy HunterStrategyPrune(const Graph& g, const Strategy& hunter) {
  const Graph h = HunterTransform(g);
  NodeSet original(h.n());
  for (Node v = 0; v < g.n(); ++v) original.insert(v);
  Strategy out{hunter.m, {}, ""};
  for (const auto& f : hunter.steps) out.steps.push_back(f & original);
  return Verified(h, std::move(out), "hunter-pruned", Variant::kHunter);
}

std::pair<Strategy, Strategy> SplitHunterStrategy(const Graph& g,
                                                  const Strategy& pruned) {
  Strategy odd{pruned.m, {}, "hunter-odd-steps"};
  Strategy even{pruned.m, {}, "hunter-even-steps"};
  for (std::size_t t = 0; t < pruned.steps.size(); ++t) {
    NodeSet f(g.n());
    pruned.steps[t].for_each([&](Node v) {
      if (v < g.n()) f.insert(v);
    });
    (t % 2 == 0 ? odd : even).steps.push_back(std::move(f));
  }
  return {odd, even};
}

}  // namespace fflab
