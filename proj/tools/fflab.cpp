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

// fflab: batch front end over the core library.
//
// Exit codes: 0 decided / ok, 1 usage or input error, 2 resource limit,
// 3 verification failed (losing strategy, enumcheck discrepancy).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fflab/bounds.hpp"
#include "fflab/engine.hpp"
#include "fflab/error.hpp"
#include "fflab/gadgets.hpp"
#include "fflab/io.hpp"
#include "fflab/json.hpp"
#include "fflab/solver.hpp"
#include "fflab/strategies.hpp"

namespace fflab::cli {
namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kResource = 2;
constexpr int kLose = 3;

struct SolverFlags {
  std::string variant = "firefighter";
  std::optional<std::uint64_t> limit_states;
  std::optional<double> limit_seconds;
  bool no_dominance = false;
  bool no_modules = false;

  void Attach(CLI::App* app) {
    app->add_option("--variant", variant, "firefighter | hunter")
        ->check(CLI::IsMember({"firefighter", "ff", "hunter", "hn"}));
    app->add_option("--limit-states", limit_states,
                    "cap on stored burning sets (0 = none); default "
                    "FFLAB_LIMIT_STATES or 20000000");
    app->add_option("--limit-seconds", limit_seconds, "wall-clock cap");
    app->add_flag("--no-dominance", no_dominance, "disable antichain pruning");
    app->add_flag("--no-modules", no_modules, "disable twin-class moves");
  }

  SolverOptions Options() const {
    SolverOptions o;
    if (limit_states) o.limits.max_states = *limit_states;
    if (limit_seconds) o.limits.max_seconds = *limit_seconds;
    o.dominance = !no_dominance;
    o.module_moves = !no_modules;
    return o;
  }
};

void Emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json ReadJsonFile(const std::string& path) {
  try {
    return Json::parse(ReadTextFile(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), 0, e.byte);
  }
}

// [[0,1],[1,2]] or {"bags": [[0,1],[1,2]]}.
std::vector<NodeSet> ReadBags(const std::string& path, int n) {
  Json j = ReadJsonFile(path);
  if (j.is_object() && j.contains("bags")) j = j["bags"];
  if (!j.is_array()) throw ParseError(path + ": expected a list of bags", 0, 0);
  std::vector<NodeSet> bags;
  for (const auto& bag : j) {
    NodeSet b(n);
    for (const auto& v : bag) {
      const int x = v.get<int>();
      if (x < 0 || x >= n) {
        throw InvalidArgument("bag node " + std::to_string(x) +
                              " out of range");
      }
      b.insert(x);
    }
    bags.push_back(std::move(b));
  }
  return bags;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads.
void ParallelFor(std::size_t count, int jobs,
                 const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::clamp(
      jobs, 1, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string graph;
  std::optional<int> m;
  std::optional<int> time;
  SolverFlags solver;
};

int Solve(const SolveArgs& a) {
  const Graph g = ReadGraphFile(a.graph);
  const Variant variant = ParseVariant(a.solver.variant);
  const SolverOptions options = a.solver.Options();
  if (a.time && !a.m) throw CLI::ValidationError("--time needs --m");
  if (!a.m) {
    const FfnResult r = Ffn(g, variant, options);
    Emit(ToJson(r, variant));
    return r.outcome == Outcome::kResourceLimit ? kResource : kOk;
  }
  const Decision d = a.time
                         ? IsWinningInTime(g, *a.m, *a.time, variant, options)
                         : ShortestT(g, *a.m, variant, options);
  Json j = ToJson(d, *a.m, variant);
  if (a.time) j["time"] = *a.time;
  Emit(j);
  return d.outcome == Outcome::kResourceLimit ? kResource : kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::string strategy;
  std::string variant = "firefighter";
};

int VerifyCmd(const VerifyArgs& a) {
  const Graph g = ReadGraphFile(a.graph);
  const Variant variant = ParseVariant(a.variant);
  const Strategy s = StrategyFromJson(ReadJsonFile(a.strategy), g.n());
  ValidateStrategy(g, s);
  const Verdict v = Verify(g, s, variant);
  Json j{{"winning", v.winning},
         {"variant", ToString(variant)},
         {"m", s.m},
         {"length", s.length()},
         {"index", v.index},
         {"burning", ToJson(v.burning)}};
  Emit(j);
  return v.winning ? kOk : kLose;
}

// ---- bound -----------------------------------------------------------------

struct BoundArgs {
  std::string graph;
  std::optional<std::string> pathdecomp;
  std::uint64_t seed = 1;
};

int Bound(const BoundArgs& a) {
  const Graph g = ReadGraphFile(a.graph);
  UpperBoundHints hints;
  if (a.pathdecomp) {
    auto bags = ReadBags(*a.pathdecomp, g.n());
    ValidatePathDecomposition(g, bags);
    hints.path_decomposition = std::move(bags);
  }

  std::vector<Certificate> certs;
  certs.push_back({CertificateKind::kMinDegree, {}, 0, LbMinDegree(g)});
  certs.push_back({CertificateKind::kEdgeCount, {}, 0, LbEdgeCount(g)});
  SubgraphSearch search;
  search.seed = a.seed;
  certs.push_back(LbSubgraphExpansion(g, search).certificate);
  if (const auto c = CharSmallFfn(g); c && *c == 2) {
    certs.push_back({CertificateKind::kCharacterization, {}, 0, 2});
  } else if (!c && g.n() > 0) {
    certs.push_back({CertificateKind::kCharacterization, {}, 0, 3});
  }
  Json lower_certs = Json::array();
  int lower = 0;
  const Certificate* best_lower = nullptr;
  for (const auto& c : certs) {
    if (!CheckCertificate(g, c)) continue;
    lower_certs.push_back(ToJson(c));
    if (best_lower == nullptr || c.m > lower) {
      lower = c.m;
      best_lower = &c;
    }
  }

  const std::vector<UpperBound> candidates = UbCandidates(g, hints);
  Json upper_list = Json::array();
  const UpperBound* best = nullptr;
  for (const auto& ub : candidates) {
    upper_list.push_back(
        {{"value", ub.value}, {"provenance", ub.strategy.provenance}});
    if (best == nullptr || ub.value < best->value) best = &ub;
  }
  Json j{{"n", g.n()},
         {"edges", static_cast<int>(g.edges().size())},
         {"lower",
          {{"value", lower},
           {"certificate",
            best_lower ? ToJson(*best_lower) : Json(nullptr)},
           {"certificates", std::move(lower_certs)}}},
         {"upper",
          {{"value", best ? best->value : 0},
           {"strategy", best ? ToJson(best->strategy) : Json(nullptr)},
           {"candidates", std::move(upper_list)}}}};
  if (IsForest(g) && g.n() > 0) j["forest_bound"] = ForestBound(g);
  Emit(j);
  return kOk;
}

// ---- gadget ----------------------------------------------------------------

struct GadgetArgs {
  std::string kind;
  int m = 1;
  int time = 2;
  int alpha = 4;
  int beta = 1;
  std::optional<std::string> graph;
  std::vector<int> sizes;
  std::string shape = "star";
  std::uint64_t seed = 1;
  bool strategy = false;
};

LabeledGadget Unlabeled(const std::string& kind, Graph g) {
  LabeledGadget out;
  out.kind = kind;
  out.graph = std::move(g);
  return out;
}

int GadgetCmd(const GadgetArgs& a) {
  const GadgetParams params{a.alpha, a.beta};
  auto base = [&] {
    if (!a.graph) throw CLI::ValidationError(a.kind + " needs --graph");
    return ReadGraphFile(*a.graph);
  };
  LabeledGadget gadget;
  std::optional<Strategy> strategy;
  Json notes = Json::object();
  if (a.kind == "aux-h") {
    gadget = AuxH(a.m, params);
  } else if (a.kind == "g-of") {
    const Graph x = base();
    gadget = GOf(a.m, x, params);
    if (a.strategy) {
      const Decision inner = ShortestT(x, a.m - 1, Variant::kFirefighter);
      if (inner.witness) strategy = StrategyGOf(gadget, *inner.witness);
      else notes["strategy"] = "X has no winning (m-1)-strategy";
    }
  } else if (a.kind == "g-family") {
    gadget = GFamily(a.m, params);
    if (a.strategy) strategy = StrategyGFamily(gadget);
  } else if (a.kind == "time-gadget") {
    const Graph g = base();
    gadget = TimeGadget(g, a.time, a.m);
    if (a.strategy) {
      const Decision inner =
          IsWinningInTime(g, a.m, a.time, Variant::kFirefighter);
      if (inner.witness) {
        strategy = StrategyTimeGadget(gadget, *inner.witness);
      } else {
        notes["strategy"] = "G has no winning m-strategy within T steps";
      }
    }
  } else if (a.kind == "bin-packing") {
    gadget = Unlabeled("bin-packing", BinPackingGraph(a.sizes));
  } else if (a.kind == "three-partition") {
    gadget = ThreePartitionTree(a.sizes, ParseTreeShape(a.shape), a.seed);
    if (a.strategy) {
      try {
        strategy = StrategyThreePartition(gadget);
      } catch (const InvalidArgument& e) {
        notes["strategy"] = e.what();
      }
    }
  } else if (a.kind == "hunter-transform") {
    const Graph g = base();
    gadget = Unlabeled("hunter-transform", HunterTransform(g));
    if (a.strategy) {
      const FfnResult f = Ffn(g, Variant::kFirefighter);
      if (f.witness) strategy = HunterStrategyFromFf(g, *f.witness);
    }
  } else if (a.kind == "blowup2") {
    gadget = Unlabeled("blowup2", Blowup2(base()));
  } else {
    throw CLI::ValidationError("unknown gadget kind '" + a.kind + "'");
  }
  Json j{{"gadget", ToJson(gadget)},
         {"strategy", strategy ? ToJson(*strategy) : Json(nullptr)}};
  if (!notes.empty()) j["notes"] = notes;
  Emit(j);
  return kOk;
}

// ---- enumcheck -------------------------------------------------------------

struct EnumArgs {
  std::string check;
  std::string input = "-";
  int max_n = 7;
  SolverFlags solver;
};

struct GraphVerdict {
  bool skipped = false;
  bool limited = false;
  bool discrepancy = false;
  std::optional<Json> record;
};

GraphVerdict CheckOne(const std::string& check, const Graph& g,
                      const SolverOptions& options) {
  GraphVerdict out;
  const FfnResult f = Ffn(g, Variant::kFirefighter, options);
  if (f.outcome == Outcome::kResourceLimit) {
    out.limited = true;
    return out;
  }
  Json rec{{"graph6", SerializeGraph6(g)}, {"ffn", f.value}};
  if (check == "char") {
    const auto c = CharSmallFfn(g);
    const bool ok = f.value <= 2 ? c == f.value : !c.has_value();
    if (!ok) {
      rec["char"] = c ? Json(*c) : Json(nullptr);
      out.discrepancy = true;
      out.record = rec;
    }
  } else if (check == "conjecture") {
    if (g.n() > 16) {
      out.skipped = true;
      return out;
    }
    const ConjectureReport rep = CheckConjecture(g, f.value);
    if (!rep.sound) out.discrepancy = true;
    if (!rep.sound || !rep.tight) {
      rec["report"] = ToJson(rep);
      out.record = rec;
    }
  } else {
    Json violations = Json::array();
    const LowerBound sub = LbSubgraphExpansion(g);
    if (LbMinDegree(g) > f.value) violations.push_back("min_degree");
    if (LbEdgeCount(g) > f.value) violations.push_back("edge_count");
    if (sub.value > f.value || !CheckCertificate(g, sub.certificate)) {
      violations.push_back("subgraph_expansion");
    }
    if (const auto c = CharSmallFfn(g); c && *c > f.value) {
      violations.push_back("characterization");
    }
    for (const auto& ub : UbCandidates(g)) {
      if (ub.value < f.value) violations.push_back(ub.strategy.provenance);
    }
    if (!violations.empty()) {
      rec["violations"] = violations;
      out.discrepancy = true;
      out.record = rec;
    }
  }
  return out;
}

int EnumCheck(const EnumArgs& a, int jobs) {
  std::vector<Graph> graphs;
  if (a.input == "-") {
    graphs = ReadGraph6Stream(std::cin);
  } else {
    std::ifstream in(a.input);
    if (!in) throw Error("cannot open " + a.input);
    graphs = ReadGraph6Stream(in);
  }
  std::vector<std::size_t> selected;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (graphs[k].n() <= a.max_n) selected.push_back(k);
  }
  const SolverOptions options = a.solver.Options();
  std::vector<GraphVerdict> verdicts(selected.size());
  ParallelFor(selected.size(), jobs, [&](std::size_t i) {
    verdicts[i] = CheckOne(a.check, graphs[selected[i]], options);
  });
  int checked = 0;
  int skipped = static_cast<int>(graphs.size() - selected.size());
  int limited = 0;
  int discrepancies = 0;
  Json records = Json::array();
  for (const auto& v : verdicts) {
    if (v.skipped) ++skipped;
    else if (v.limited) ++limited;
    else ++checked;
    if (v.discrepancy) ++discrepancies;
    if (v.record) records.push_back(*v.record);
  }
  Emit(Json{{"check", a.check},
            {"max_n", a.max_n},
            {"graphs", static_cast<int>(graphs.size())},
            {"checked", checked},
            {"skipped", skipped},
            {"resource_limited", limited},
            {"discrepancies", discrepancies},
            {"records", std::move(records)}});
  if (discrepancies > 0) return kLose;
  return limited > 0 ? kResource : kOk;
}

// ---- fuzz ------------------------------------------------------------------

struct FuzzArgs {
  std::string graph;
  int m = 1;
  int steps = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::string variant = "firefighter";
};

int Fuzz(const FuzzArgs& a) {
  const Graph g = ReadGraphFile(a.graph);
  const Variant variant = ParseVariant(a.variant);
  const int steps = a.steps > 0 ? a.steps : std::max(1, g.n());
  const FuzzReport r =
      RandomStrategyFuzz(g, a.m, steps, a.trials, a.seed, variant);
  Emit(Json{{"m", a.m},
            {"steps", steps},
            {"seed", a.seed},
            {"variant", ToString(variant)},
            {"trials", r.trials},
            {"successes", r.successes},
            {"found", r.successes > 0},
            {"first_win", r.first_win ? ToJson(*r.first_win) : Json(nullptr)}});
  return kOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"fflab: firefighter and hunter games on graphs"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for batch commands")
      ->check(CLI::PositiveNumber);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "exact ffn, shortest T or T-winning");
  s->add_option("graph", solve.graph, "edge list or graph6 file")->required();
  s->add_option("--m", solve.m, "budget")->check(CLI::NonNegativeNumber);
  s->add_option("--time", solve.time, "horizon T (needs --m)")
      ->check(CLI::NonNegativeNumber);
  solve.solver.Attach(s);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "replay a strategy");
  v->add_option("graph", verify.graph)->required();
  v->add_option("strategy", verify.strategy, "strategy JSON")->required();
  v->add_option("--variant", verify.variant)
      ->check(CLI::IsMember({"firefighter", "ff", "hunter", "hn"}));

  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "lower and upper bounds");
  b->add_option("graph", bound.graph)->required();
  b->add_option("--pathdecomp", bound.pathdecomp, "bags as JSON");
  b->add_option("--seed", bound.seed);

  GadgetArgs gadget;
  auto* gd = app.add_subcommand("gadget", "build a construction");
  gd->add_option("kind", gadget.kind,
                 "aux-h | g-of | g-family | time-gadget | bin-packing | "
                 "three-partition | hunter-transform | blowup2")
      ->required();
  gd->add_option("--m", gadget.m);
  gd->add_option("--time", gadget.time);
  gd->add_option("--alpha", gadget.alpha);
  gd->add_option("--beta", gadget.beta);
  gd->add_option("--graph", gadget.graph, "base graph file");
  gd->add_option("--sizes", gadget.sizes, "item sizes")->delimiter(',');
  gd->add_option("--shape", gadget.shape, "star | path | arbitrary");
  gd->add_option("--seed", gadget.seed);
  gd->add_flag("--strategy", gadget.strategy, "also build its strategy");

  EnumArgs enumc;
  auto* e = app.add_subcommand("enumcheck", "sweep a graph6 stream");
  e->add_option("--check", enumc.check)
      ->required()
      ->check(CLI::IsMember({"char", "conjecture", "bounds-soundness"}));
  e->add_option("--input", enumc.input, "graph6 file, - for stdin");
  e->add_option("--max-n", enumc.max_n);
  enumc.solver.Attach(e);

  FuzzArgs fuzz;
  auto* f = app.add_subcommand("fuzz", "random strategies");
  f->add_option("graph", fuzz.graph)->required();
  f->add_option("--m", fuzz.m)->required();
  f->add_option("--steps", fuzz.steps, "strategy length (default |V|)");
  f->add_option("--trials", fuzz.trials);
  f->add_option("--seed", fuzz.seed);
  f->add_option("--variant", fuzz.variant)
      ->check(CLI::IsMember({"firefighter", "ff", "hunter", "hn"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*s) return Solve(solve);
    if (*v) return VerifyCmd(verify);
    if (*b) return Bound(bound);
    if (*gd) return GadgetCmd(gadget);
    if (*e) return EnumCheck(enumc, jobs);
    if (*f) return Fuzz(fuzz);
  } catch (const CLI::Error& err) {
    std::cerr << "fflab: " << err.what() << "\n";
    return kUsage;
  } catch (const Error& err) {
    std::cerr << "fflab: " << err.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "fflab: " << err.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace
}  // namespace fflab::cli

int main(int argc, char** argv) { return fflab::cli::Main(argc, argv); }
