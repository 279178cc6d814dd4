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

#ifndef FFLAB_IO_HPP_
#define FFLAB_IO_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "fflab/graph.hpp"

namespace fflab {

// Edge-list text: first non-comment line is n, then one "u v" per line.
// '#' starts a comment. Throws ParseError with line and byte offset.
Graph ParseEdgeList(std::string_view text);
std::string SerializeEdgeList(const Graph& g);

// A single graph6 record, without the trailing newline. An optional
// ">>graph6<<" header is accepted.
Graph ParseGraph6(std::string_view record);
std::string SerializeGraph6(const Graph& g);
// One graph per non-empty line; the line number is reported on error.
std::vector<Graph> ReadGraph6Stream(std::istream& in);

// Reads a file in either format: graph6 if the first meaningful line is not
// a bare integer, edge list otherwise.
Graph ReadGraphFile(const std::string& path);
std::string ReadTextFile(const std::string& path);

}  // namespace fflab

#endif  // FFLAB_IO_HPP_
