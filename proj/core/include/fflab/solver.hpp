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

#ifndef FFLAB_SOLVER_HPP_
#define FFLAB_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "fflab/engine.hpp"
#include "fflab/graph.hpp"

namespace fflab {

// The exact solver works on graphs with at most this many nodes.
inline constexpr int kSolverMaxNodes = 64;

enum class Outcome { kYes, kNo, kResourceLimit };
std::string_view ToString(Outcome o);

struct Limits {
  // Cap on stored burning sets; 0 means unlimited.
  std::uint64_t max_states = 0;
  // Wall-clock cap in seconds; 0 means unlimited.
  double max_seconds = 0.0;

  // max_states from FFLAB_LIMIT_STATES when set, else 20 million.
  static Limits FromEnvironment();
};

struct SolverOptions {
  Limits limits = Limits::FromEnvironment();
  // Discard burning sets that contain an already reached set.
  bool dominance = true;
  // Move only whole twin classes (true twins for firefighter, false twins
  // for hunter).
  bool module_moves = true;
};

struct SolveStats {
  std::uint64_t states_expanded = 0;
  std::uint64_t states_stored = 0;
  std::uint64_t states_dominated = 0;
  std::uint64_t moves_generated = 0;
  int depth = 0;
  double seconds = 0.0;
};

struct Decision {
  Outcome outcome = Outcome::kNo;
  // Shortest winning length when outcome == kYes.
  std::optional<int> t;
  // Verified shortest strategy when outcome == kYes.
  std::optional<Strategy> witness;
  SolveStats stats;
};

// Breadth-first search over burning sets from B_0 = V. A horizon caps the
// number of steps; without one the search runs until the reachable
// antichain is exhausted.
Decision IsMWinning(const Graph& g, int m, Variant variant,
                    const SolverOptions& options = {},
                    std::optional<int> horizon = std::nullopt);

// Same search; the shortest length is in Decision::t.
Decision ShortestT(const Graph& g, int m, Variant variant,
                   const SolverOptions& options = {});

// kYes iff a winning m-strategy of length <= t exists.
Decision IsWinningInTime(const Graph& g, int m, int t, Variant variant,
                         const SolverOptions& options = {});

struct FfnResult {
  Outcome outcome = Outcome::kYes;  // kYes: decided
  int value = 0;
  // First budget probed.
  int probe_start = 0;
  std::optional<int> t;
  std::optional<Strategy> witness;
  SolveStats stats;  // accumulated over all probes
};

// Smallest m admitting a winning strategy; ffn of the empty graph is 0.
FfnResult Ffn(const Graph& g, Variant variant,
              const SolverOptions& options = {});

// Twin classes in order of their smallest member.
struct TwinClasses {
  std::vector<NodeSet> classes;
  std::vector<int> class_of;
};
// True twins: N[u] = N[v]. Each class is a clique module.
TwinClasses CliqueModuleReduce(const Graph& g);
// False twins: N(u) = N(v). Each class is an independent module.
TwinClasses FalseTwinClasses(const Graph& g);

struct FuzzReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  // The first winning random strategy, trimmed to its winning prefix.
  std::optional<Strategy> first_win;
};

// Plays `trials` random m-strategies of length `steps`. Each step picks
// min(m, |B|) burning nodes uniformly. Deterministic per seed.
FuzzReport RandomStrategyFuzz(const Graph& g, int m, int steps,
                              std::uint64_t trials, std::uint64_t seed,
                              Variant variant = Variant::kFirefighter);

}  // namespace fflab

#endif  // FFLAB_SOLVER_HPP_
