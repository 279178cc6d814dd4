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

#ifndef FFLAB_JSON_HPP_
#define FFLAB_JSON_HPP_

#include <nlohmann/json.hpp>

#include "fflab/bounds.hpp"
#include "fflab/engine.hpp"
#include "fflab/gadgets.hpp"
#include "fflab/graph.hpp"
#include "fflab/solver.hpp"

namespace fflab {

using Json = nlohmann::ordered_json;

Json ToJson(const NodeSet& s);
Json ToJson(const Strategy& s);
// Reads {"m": int, "steps": [[int, ...], ...]} over n nodes. A missing "m"
// means the largest step. Throws ParseError on malformed input.
Strategy StrategyFromJson(const Json& j, int n);

Json ToJson(const SolveStats& stats);
// {"ffn", "variant", "outcome", "T", "witness", "stats"}.
Json ToJson(const FfnResult& r, Variant variant);
// Fixed-budget query: {"m", "variant", "outcome", "winning", "T", ...}.
Json ToJson(const Decision& d, int m, Variant variant);

Json ToJson(const Certificate& c);
Certificate CertificateFromJson(const Json& j);
Json ToJson(const ConjectureReport& r);

// {"n", "edges"}.
Json GraphToJson(const Graph& g);
Graph GraphFromJson(const Json& j);
// Graph plus labels, blocks, joins and params.
Json ToJson(const LabeledGadget& gadget);

}  // namespace fflab

#endif  // FFLAB_JSON_HPP_
