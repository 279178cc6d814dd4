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

#ifndef FFLAB_TESTS_SUPPORT_HPP_
#define FFLAB_TESTS_SUPPORT_HPP_

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fflab/graph.hpp"
#include "fflab/io.hpp"
#include "oracle.hpp"

namespace fflab::testing {

inline std::vector<Graph> Fixture(const std::string& prefix, int n) {
  std::ifstream in(std::string(FFLAB_FIXTURE_DIR) + "/" + prefix + "_n" +
                   std::to_string(n) + ".g6");
  if (!in) throw std::runtime_error("missing fixture " + prefix);
  return ReadGraph6Stream(in);
}

// Connected graphs on exactly n nodes, 1 <= n <= 7.
inline std::vector<Graph> ConnectedGraphs(int n) {
  return Fixture("connected", n);
}

// Every graph on exactly n nodes up to isomorphism, 1 <= n <= 7.
inline std::vector<Graph> AllGraphs(int n) { return Fixture("all", n); }

inline std::vector<Graph> ConnectedGraphsUpTo(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (Graph& g : ConnectedGraphs(n)) out.push_back(std::move(g));
  }
  return out;
}

inline oracle::Edges OracleEdges(const Graph& g) {
  oracle::Edges out;
  for (const auto& [u, v] : g.edges()) out.emplace_back(u, v);
  return out;
}

}  // namespace fflab::testing

#endif  // FFLAB_TESTS_SUPPORT_HPP_
