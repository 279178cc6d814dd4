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

#ifndef FFLAB_ENGINE_HPP_
#define FFLAB_ENGINE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "fflab/graph.hpp"

namespace fflab {

// Firefighter: B' = (B \ F) ∪ N(B \ F).
// Hunter: the fugitive must move, B' = union of the adjacency rows of B \ F.
enum class Variant { kFirefighter, kHunter };

std::string_view ToString(Variant v);
// Accepts "firefighter" / "ff" / "hunter" / "hn".
Variant ParseVariant(std::string_view name);

// A budget and a sequence of firefighter sets. Steps may be smaller than
// the budget, including empty.
struct Strategy {
  int m = 0;
  std::vector<NodeSet> steps;
  // Name of the rule that produced the strategy, e.g. "solver" or
  // "binary-tree".
  std::string provenance;

  int length() const { return static_cast<int>(steps.size()); }
  bool operator==(const Strategy& other) const {
    return m == other.m && steps == other.steps;
  }
};

NodeSet Step(const Graph& g, const NodeSet& burning, const NodeSet& f,
             Variant variant);

// trace[0] = initial, trace[t] = Step(trace[t-1], F_t).
std::vector<NodeSet> RunFrom(const Graph& g, const Strategy& s,
                             const NodeSet& initial, Variant variant);
// Starts from B_0 = V.
std::vector<NodeSet> Run(const Graph& g, const Strategy& s, Variant variant);

struct Verdict {
  bool winning = false;
  // First t with B_t = ∅ when winning; the final index T otherwise.
  int index = 0;
  // B at `index`; empty when winning.
  NodeSet burning;
};

// Streams the game without retaining the trace.
Verdict VerifyFrom(const Graph& g, const Strategy& s, const NodeSet& initial,
                   Variant variant);
Verdict Verify(const Graph& g, const Strategy& s, Variant variant);
bool IsWinning(const Graph& g, const Strategy& s, Variant variant);

// Throws InvalidArgument if the budget is negative, a step exceeds it, or a
// step is not over g's node range.
void ValidateStrategy(const Graph& g, const Strategy& s);

}  // namespace fflab

#endif  // FFLAB_ENGINE_HPP_
