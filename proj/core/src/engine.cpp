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

#include "fflab/engine.hpp"

#include "fflab/error.hpp"

namespace fflab {

std::string_view ToString(Variant v) {
  return v == Variant::kFirefighter ? "firefighter" : "hunter";
}

Variant ParseVariant(std::string_view name) {
  if (name == "firefighter" || name == "ff") return Variant::kFirefighter;
  if (name == "hunter" || name == "hn") return Variant::kHunter;
  throw InvalidArgument("unknown game variant '" + std::string(name) + "'");
}

NodeSet Step(const Graph& g, const NodeSet& burning, const NodeSet& f,
             Variant variant) {
  const NodeSet left = burning - f;
  if (variant == Variant::kFirefighter) return ClosedNeighborhood(g, left);
  return AdjacencyUnion(g, left);
}

std::vector<NodeSet> RunFrom(const Graph& g, const Strategy& s,
                             const NodeSet& initial, Variant variant) {
  ValidateStrategy(g, s);
  std::vector<NodeSet> trace{initial};
  trace.reserve(s.steps.size() + 1);
  for (const NodeSet& f : s.steps) {
    trace.push_back(Step(g, trace.back(), f, variant));
  }
  return trace;
}

std::vector<NodeSet> Run(const Graph& g, const Strategy& s, Variant variant) {
  return RunFrom(g, s, g.all(), variant);
}

Verdict VerifyFrom(const Graph& g, const Strategy& s, const NodeSet& initial,
                   Variant variant) {
  ValidateStrategy(g, s);
  Verdict v{false, 0, initial};
  if (v.burning.empty()) {
    v.winning = true;
    return v;
  }
  for (const NodeSet& f : s.steps) {
    v.burning = Step(g, v.burning, f, variant);
    ++v.index;
    if (v.burning.empty()) {
      v.winning = true;
      return v;
    }
  }
  return v;
}

Verdict Verify(const Graph& g, const Strategy& s, Variant variant) {
  return VerifyFrom(g, s, g.all(), variant);
}

bool IsWinning(const Graph& g, const Strategy& s, Variant variant) {
  return Verify(g, s, variant).winning;
}

void ValidateStrategy(const Graph& g, const Strategy& s) {
  if (s.m < 0) throw InvalidArgument("negative strategy budget");
  for (std::size_t t = 0; t < s.steps.size(); ++t) {
    const NodeSet& f = s.steps[t];
    if (f.universe() != g.n()) {
      throw InvalidArgument("step " + std::to_string(t + 1) +
                            " is over a different node range");
    }
    if (f.size() > s.m) {
      throw InvalidArgument("step " + std::to_string(t + 1) + " uses " +
                            std::to_string(f.size()) +
                            " firefighters, budget is " +
                            std::to_string(s.m));
    }
  }
}

}  // namespace fflab
