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

#include "fflab/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "fflab/bounds.hpp"
#include "fflab/error.hpp"

namespace fflab {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kDefaultMaxStates = 20'000'000;

Mask FullMask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Graph view with adjacency rows as raw masks.
struct MaskGraph {
  int n = 0;
  std::vector<Mask> adj;

  explicit MaskGraph(const Graph& g) : n(g.n()) {
    if (g.n() > kSolverMaxNodes) {
      throw InvalidArgument("exact solver supports at most 64 nodes, got " +
                            std::to_string(g.n()));
    }
    adj.resize(static_cast<std::size_t>(n));
    for (Node v = 0; v < n; ++v) {
      adj[static_cast<std::size_t>(v)] = g.neighbors(v).mask();
    }
  }

  Mask Step(Mask burning, Mask f, Variant variant) const {
    const Mask left = burning & ~f;
    Mask out = variant == Variant::kFirefighter ? left : 0;
    for (Mask bits = left; bits != 0; bits &= bits - 1) {
      out |= adj[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    return out;
  }
};

TwinClasses GroupBy(const Graph& g, bool closed) {
  TwinClasses out;
  out.class_of.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<NodeSet> keys;
  for (Node v = 0; v < g.n(); ++v) {
    NodeSet key = g.neighbors(v);
    if (closed) key.insert(v);
    int found = -1;
    for (std::size_t c = 0; c < keys.size(); ++c) {
      if (keys[c] == key) {
        found = static_cast<int>(c);
        break;
      }
    }
    if (found == -1) {
      found = static_cast<int>(keys.size());
      keys.push_back(key);
      out.classes.emplace_back(g.n());
    }
    out.classes[static_cast<std::size_t>(found)].insert(v);
    out.class_of[static_cast<std::size_t>(v)] = found;
  }
  return out;
}

// Minimal burning sets reached so far, bucketed by size.
class Antichain {
 public:
  explicit Antichain(int n) : buckets_(static_cast<std::size_t>(n) + 1) {}

  bool Dominated(Mask x) const {
    const int k = std::popcount(x);
    for (int p = 0; p <= k; ++p) {
      for (Mask s : buckets_[static_cast<std::size_t>(p)]) {
        if ((s & ~x) == 0) return true;
      }
    }
    return false;
  }

  void Insert(Mask x) {
    buckets_[static_cast<std::size_t>(std::popcount(x))].push_back(x);
  }

 private:
  std::vector<std::vector<Mask>> buckets_;
};

class Search {
 public:
  Search(const Graph& g, int m, Variant variant, const SolverOptions& options)
      : graph_(g), mg_(g), m_(m), variant_(variant), options_(options) {
    if (m < 0) throw InvalidArgument("budget must be non-negative");
    if (options.module_moves) {
      const TwinClasses twins = variant == Variant::kFirefighter
                                    ? CliqueModuleReduce(g)
                                    : FalseTwinClasses(g);
      for (const auto& c : twins.classes) class_masks_.push_back(c.mask());
    } else {
      for (Node v = 0; v < g.n(); ++v) class_masks_.push_back(Mask{1} << v);
    }
  }

  Decision Run(std::optional<int> horizon) {
    const auto start = Clock::now();
    Decision d = RunInner(horizon, start);
    d.stats.seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return d;
  }

 private:
  struct Entry {
    Mask state;
    std::int64_t parent;
    Mask move;
  };

  // Maximal unions of whole classes inside `burning` within the budget,
  // in lexicographic order of their member lists.
  void Moves(Mask burning, std::vector<Mask>& out) const {
    out.clear();
    if (std::popcount(burning) <= m_) {
      out.push_back(burning);
      return;
    }
    std::vector<Mask> inside;
    for (Mask c : class_masks_) {
      if ((c & burning) == c) inside.push_back(c);
    }
    Collect(inside, 0, 0, m_, kNoExcluded, out);
  }

  static constexpr int kNoExcluded = 1 << 30;

  void Collect(const std::vector<Mask>& inside, std::size_t idx, Mask chosen,
               int remaining, int min_excluded,
               std::vector<Mask>& out) const {
    if (idx == inside.size()) {
      if (min_excluded > remaining) out.push_back(chosen);
      return;
    }
    const int size = std::popcount(inside[idx]);
    if (size <= remaining) {
      Collect(inside, idx + 1, chosen | inside[idx], remaining - size,
              min_excluded, out);
    }
    Collect(inside, idx + 1, chosen, remaining,
            std::min(min_excluded, size), out);
  }

  bool OverLimits(const Clock::time_point& start, std::size_t pending) const {
    const auto& lim = options_.limits;
    if (lim.max_states != 0 && entries_.size() + pending > lim.max_states) {
      return true;
    }
    if (lim.max_seconds > 0.0 &&
        std::chrono::duration<double>(Clock::now() - start).count() >
            lim.max_seconds) {
      return true;
    }
    return false;
  }

  Strategy Witness(std::int64_t last, Mask final_move) const {
    std::vector<Mask> moves{final_move};
    for (std::int64_t e = last; entries_[static_cast<std::size_t>(e)].parent >= 0;
         e = entries_[static_cast<std::size_t>(e)].parent) {
      moves.push_back(entries_[static_cast<std::size_t>(e)].move);
    }
    std::reverse(moves.begin(), moves.end());
    Strategy s;
    s.m = m_;
    s.provenance = "solver";
    for (Mask mv : moves) s.steps.push_back(NodeSet::FromMask(mg_.n, mv));
    return s;
  }

  Decision RunInner(std::optional<int> horizon, const Clock::time_point& start) {
    Decision d;
    const int n = mg_.n;
    if (n == 0) {
      d.outcome = Outcome::kYes;
      d.t = 0;
      d.witness = Strategy{m_, {}, "solver"};
      return d;
    }
    Antichain antichain(n);
    std::unordered_set<Mask> seen;
    const Mask full = FullMask(n);
    entries_.push_back({full, -1, 0});
    if (options_.dominance) {
      antichain.Insert(full);
    } else {
      seen.insert(full);
    }
    std::vector<std::int64_t> frontier{0};
    std::vector<Mask> moves;
    std::unordered_map<Mask, std::size_t> child_index;
    std::vector<Entry> children;
    int depth = 0;
    while (!frontier.empty()) {
      if (horizon && depth >= *horizon) break;
      child_index.clear();
      children.clear();
      for (std::int64_t e : frontier) {
        const Mask state = entries_[static_cast<std::size_t>(e)].state;
        ++d.stats.states_expanded;
        if ((d.stats.states_expanded & 255) == 0 &&
            OverLimits(start, children.size())) {
          d.outcome = Outcome::kResourceLimit;
          d.stats.depth = depth;
          d.stats.states_stored = entries_.size();
          return d;
        }
        Moves(state, moves);
        d.stats.moves_generated += moves.size();
        for (Mask mv : moves) {
          const Mask next = mg_.Step(state, mv, variant_);
          if (next == 0) {
            d.outcome = Outcome::kYes;
            d.t = depth + 1;
            d.stats.depth = depth + 1;
            d.stats.states_stored = entries_.size();
            Strategy w = Witness(e, mv);
            if (!IsWinning(graph_, w, variant_)) {
              throw VerificationFailure("solver witness failed verification");
            }
            d.witness = std::move(w);
            return d;
          }
          if (child_index.count(next) != 0) continue;
          if (options_.dominance ? antichain.Dominated(next)
                                 : seen.count(next) != 0) {
            ++d.stats.states_dominated;
            continue;
          }
          child_index.emplace(next, children.size());
          children.push_back({next, e, mv});
        }
      }
      // Ascending size: a later child is never a strict subset of an
      // earlier one, so one pass keeps the level an antichain.
      std::stable_sort(children.begin(), children.end(),
                       [](const Entry& a, const Entry& b) {
                         return std::popcount(a.state) <
                                std::popcount(b.state);
                       });
      frontier.clear();
      for (const Entry& c : children) {
        if (options_.dominance) {
          if (antichain.Dominated(c.state)) {
            ++d.stats.states_dominated;
            continue;
          }
          antichain.Insert(c.state);
        } else {
          seen.insert(c.state);
        }
        frontier.push_back(static_cast<std::int64_t>(entries_.size()));
        entries_.push_back(c);
      }
      ++depth;
      if (OverLimits(start, 0)) {
        d.outcome = Outcome::kResourceLimit;
        d.stats.depth = depth;
        d.stats.states_stored = entries_.size();
        return d;
      }
    }
    d.outcome = Outcome::kNo;
    d.stats.depth = depth;
    d.stats.states_stored = entries_.size();
    return d;
  }

  const Graph& graph_;
  MaskGraph mg_;
  int m_;
  Variant variant_;
  SolverOptions options_;
  std::vector<Mask> class_masks_;
  std::vector<Entry> entries_;
};

void Accumulate(SolveStats& total, const SolveStats& s) {
  total.states_expanded += s.states_expanded;
  total.states_stored += s.states_stored;
  total.states_dominated += s.states_dominated;
  total.moves_generated += s.moves_generated;
  total.depth = std::max(total.depth, s.depth);
  total.seconds += s.seconds;
}

}  // namespace

std::string_view ToString(Outcome o) {
  switch (o) {
    case Outcome::kYes:
      return "yes";
    case Outcome::kNo:
      return "no";
    case Outcome::kResourceLimit:
      return "resource-limit";
  }
  return "?";
}

Limits Limits::FromEnvironment() {
  Limits lim;
  lim.max_states = kDefaultMaxStates;
  if (const char* env = std::getenv("FFLAB_LIMIT_STATES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') lim.max_states = v;
  }
  return lim;
}

TwinClasses CliqueModuleReduce(const Graph& g) { return GroupBy(g, true); }
TwinClasses FalseTwinClasses(const Graph& g) { return GroupBy(g, false); }

Decision IsMWinning(const Graph& g, int m, Variant variant,
                    const SolverOptions& options, std::optional<int> horizon) {
  if (horizon && *horizon < 0) throw InvalidArgument("negative horizon");
  Search search(g, m, variant, options);
  return search.Run(horizon);
}

Decision ShortestT(const Graph& g, int m, Variant variant,
                   const SolverOptions& options) {
  return IsMWinning(g, m, variant, options);
}

Decision IsWinningInTime(const Graph& g, int m, int t, Variant variant,
                         const SolverOptions& options) {
  return IsMWinning(g, m, variant, options, t);
}

FfnResult Ffn(const Graph& g, Variant variant, const SolverOptions& options) {
  FfnResult r;
  if (g.n() == 0) {
    r.value = 0;
    r.t = 0;
    r.witness = Strategy{0, {}, "solver"};
    return r;
  }
  const int lb = variant == Variant::kFirefighter
                     ? std::max(LbMinDegree(g), LbEdgeCount(g))
                     : g.min_degree();
  r.probe_start = std::max(1, lb);
  for (int m = r.probe_start; m <= g.n(); ++m) {
    Decision d = IsMWinning(g, m, variant, options);
    Accumulate(r.stats, d.stats);
    if (d.outcome == Outcome::kResourceLimit) {
      r.outcome = Outcome::kResourceLimit;
      r.value = m;  // every budget below m was refuted
      return r;
    }
    if (d.outcome == Outcome::kYes) {
      r.value = m;
      r.t = d.t;
      r.witness = std::move(d.witness);
      return r;
    }
  }
  throw Error("no winning strategy with budget |V|; solver invariant broken");
}

FuzzReport RandomStrategyFuzz(const Graph& g, int m, int steps,
                              std::uint64_t trials, std::uint64_t seed,
                              Variant variant) {
  if (m < 0 || steps < 0) throw InvalidArgument("negative budget or length");
  FuzzReport report;
  std::mt19937_64 rng(seed);
  const bool fast = g.n() <= kSolverMaxNodes;
  const MaskGraph mg = fast ? MaskGraph(g) : MaskGraph(Graph());
  std::vector<Node> pool;
  std::vector<Node> chosen;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    ++report.trials;
    std::vector<std::vector<Node>> played;
    NodeSet burning = g.all();
    Mask burning_mask = fast ? FullMask(g.n()) : 0;
    bool won = g.n() == 0;
    for (int s = 0; s < steps && !won; ++s) {
      pool.clear();
      if (fast) {
        for (Mask b = burning_mask; b != 0; b &= b - 1) {
          pool.push_back(std::countr_zero(b));
        }
      } else {
        pool = burning.members();
      }
      const int k = std::min<int>(m, static_cast<int>(pool.size()));
      for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> dist(
            static_cast<std::size_t>(i), pool.size() - 1);
        std::swap(pool[static_cast<std::size_t>(i)], pool[dist(rng)]);
      }
      chosen.assign(pool.begin(), pool.begin() + k);
      if (fast) {
        Mask f = 0;
        for (Node v : chosen) f |= Mask{1} << v;
        burning_mask = mg.Step(burning_mask, f, variant);
        won = burning_mask == 0;
      } else {
        burning = Step(g, burning, NodeSet(g.n(), chosen), variant);
        won = burning.empty();
      }
      if (!report.first_win) played.push_back(chosen);
    }
    if (won) {
      ++report.successes;
      if (!report.first_win) {
        Strategy s{m, {}, "fuzz"};
        for (const auto& f : played) s.steps.emplace_back(g.n(), f);
        report.first_win = std::move(s);
      }
    }
  }
  return report;
}

}  // namespace fflab
