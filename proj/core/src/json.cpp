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

#include "fflab/json.hpp"

#include <string>

#include "fflab/error.hpp"

namespace fflab {
namespace {

std::string_view ToString(BlockKind k) {
  switch (k) {
    case BlockKind::kClique:
      return "clique";
    case BlockKind::kIndependent:
      return "independent";
    case BlockKind::kGiven:
      return "given";
  }
  return "?";
}

}  // namespace

Json ToJson(const NodeSet& s) { return Json(s.members()); }

Json ToJson(const Strategy& s) {
  Json steps = Json::array();
  for (const auto& f : s.steps) steps.push_back(ToJson(f));
  Json j{{"m", s.m}, {"steps", std::move(steps)}};
  if (!s.provenance.empty()) j["provenance"] = s.provenance;
  return j;
}

Strategy StrategyFromJson(const Json& j, int n) {
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array()) {
    throw ParseError("strategy must be an object with a \"steps\" array", 0,
                     0);
  }
  Strategy s;
  int largest = 0;
  for (const auto& step : j["steps"]) {
    if (!step.is_array()) throw ParseError("a step must be an array", 0, 0);
    NodeSet f(n);
    for (const auto& v : step) {
      if (!v.is_number_integer()) {
        throw ParseError("step entries must be integers", 0, 0);
      }
      const auto node = v.get<std::int64_t>();
      if (node < 0 || node >= n) {
        throw InvalidArgument("node " + std::to_string(node) +
                              " outside 0.." + std::to_string(n - 1));
      }
      f.insert(static_cast<Node>(node));
    }
    largest = std::max(largest, f.size());
    s.steps.push_back(std::move(f));
  }
  if (j.contains("m")) {
    if (!j["m"].is_number_integer()) {
      throw ParseError("\"m\" must be an integer", 0, 0);
    }
    s.m = j["m"].get<int>();
  } else {
    s.m = largest;
  }
  if (j.contains("provenance") && j["provenance"].is_string()) {
    s.provenance = j["provenance"].get<std::string>();
  }
  return s;
}

Json ToJson(const SolveStats& st) {
  return Json{{"states_expanded", st.states_expanded},
              {"states_stored", st.states_stored},
              {"states_dominated", st.states_dominated},
              {"moves_generated", st.moves_generated},
              {"depth", st.depth},
              {"seconds", st.seconds}};
}

Json ToJson(const FfnResult& r, Variant variant) {
  const bool decided = r.outcome != Outcome::kResourceLimit;
  Json j{{"ffn", decided ? Json(r.value) : Json(nullptr)},
         {"variant", ToString(variant)},
         {"outcome", decided ? "decided" : "resource_limit"},
         {"probe_start", r.probe_start},
         {"T", r.t ? Json(*r.t) : Json(nullptr)},
         {"witness", r.witness ? ToJson(*r.witness) : Json(nullptr)},
         {"stats", ToJson(r.stats)}};
  if (!decided) j["lower_bound"] = r.value;
  return j;
}

Json ToJson(const Decision& d, int m, Variant variant) {
  const bool decided = d.outcome != Outcome::kResourceLimit;
  return Json{{"m", m},
              {"variant", ToString(variant)},
              {"outcome", decided ? "decided" : "resource_limit"},
              {"winning", decided ? Json(d.outcome == Outcome::kYes)
                                  : Json(nullptr)},
              {"T", d.t ? Json(*d.t) : Json(nullptr)},
              {"witness", d.witness ? ToJson(*d.witness) : Json(nullptr)},
              {"stats", ToJson(d.stats)}};
}

Json ToJson(const Certificate& c) {
  return Json{{"kind", ToString(c.kind)},
              {"V_prime", c.v_prime},
              {"i", c.i},
              {"m", c.m}};
}

Certificate CertificateFromJson(const Json& j) {
  try {
    Certificate c;
    c.kind = ParseCertificateKind(j.at("kind").get<std::string>());
    c.v_prime = j.at("V_prime").get<std::vector<Node>>();
    c.i = j.at("i").get<int>();
    c.m = j.at("m").get<int>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad certificate: ") + e.what(), 0, 0);
  }
}

Json ToJson(const ConjectureReport& r) {
  return Json{{"ffn", r.ffn},
              {"max_certified", r.max_certified},
              {"best", ToJson(r.best)},
              {"sound", r.sound},
              {"tight", r.tight},
              {"subgraph_notion", r.subgraph_notion}};
}

Json GraphToJson(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph GraphFromJson(const Json& j) {
  try {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
      g.add_edge(e.at(0).get<Node>(), e.at(1).get<Node>());
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad graph: ") + e.what(), 0, 0);
  }
}

Json ToJson(const LabeledGadget& gadget) {
  Json j{{"kind", gadget.kind}, {"graph", GraphToJson(gadget.graph)}};
  Json labels = Json::object();
  for (const auto& [name, set] : gadget.labels) labels[name] = ToJson(set);
  j["labels"] = std::move(labels);
  Json blocks = Json::array();
  for (const auto& b : gadget.blocks) {
    blocks.push_back({{"name", b.name}, {"kind", ToString(b.kind)}});
  }
  j["blocks"] = std::move(blocks);
  Json joins = Json::array();
  for (const auto& jn : gadget.joins) {
    joins.push_back({{"a", jn.a},
                     {"b", jn.b},
                     {"kind", jn.kind == JoinKind::kFull ? "full" : "single"}});
  }
  j["joins"] = std::move(joins);
  Json params = Json::object();
  for (const auto& [k, v] : gadget.params) params[k] = v;
  j["params"] = std::move(params);
  return j;
}

}  // namespace fflab
