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

#include "fflab/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fflab/error.hpp"

namespace fflab {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string_view StripComment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool IsBlank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Parses whitespace-separated non-negative integers, remembering offsets.
std::vector<std::pair<long long, std::size_t>> Integers(const Line& line) {
  std::vector<std::pair<long long, std::size_t>> out;
  const std::string_view s = StripComment(line.text);
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(),
                                           value);
    const std::size_t consumed = static_cast<std::size_t>(ptr - (s.data() + i));
    if (ec != std::errc() || consumed == 0 ||
        (i + consumed < s.size() &&
         !std::isspace(static_cast<unsigned char>(s[i + consumed])))) {
      throw ParseError("expected integer", line.number, i);
    }
    out.emplace_back(value, i);
    i += consumed;
  }
  return out;
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  const auto lines = SplitLines(text);
  std::size_t idx = 0;
  while (idx < lines.size() && IsBlank(StripComment(lines[idx].text))) ++idx;
  if (idx == lines.size()) throw ParseError("missing node count", 1, 0);
  const auto header = Integers(lines[idx]);
  if (header.size() != 1) {
    throw ParseError("first line must hold only the node count",
                     lines[idx].number, 0);
  }
  if (header[0].first < 0 || header[0].first > (1 << 20)) {
    throw ParseError("node count out of range", lines[idx].number,
                     header[0].second);
  }
  const int n = static_cast<int>(header[0].first);
  Graph g(n);
  for (++idx; idx < lines.size(); ++idx) {
    const auto nums = Integers(lines[idx]);
    if (nums.empty()) continue;
    if (nums.size() != 2) {
      throw ParseError("edge line must hold exactly two nodes",
                       lines[idx].number, 0);
    }
    for (const auto& [value, offset] : nums) {
      if (value < 0 || value >= n) {
        throw ParseError("node " + std::to_string(value) + " out of range",
                         lines[idx].number, offset);
      }
    }
    if (nums[0].first == nums[1].first) {
      throw ParseError("self-loop", lines[idx].number, nums[1].second);
    }
    g.add_edge(static_cast<Node>(nums[0].first),
               static_cast<Node>(nums[1].first));
  }
  return g;
}

std::string SerializeEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.n() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph ParseGraph6(std::string_view record) {
  std::size_t base = 0;
  if (record.substr(0, kGraph6Header.size()) == kGraph6Header) {
    base = kGraph6Header.size();
  }
  while (!record.empty() &&
         std::isspace(static_cast<unsigned char>(record.back()))) {
    record.remove_suffix(1);
  }
  std::size_t pos = base;
  auto next = [&]() -> int {
    if (pos >= record.size()) {
      throw ParseError("graph6 record truncated", 1, pos);
    }
    const int c = static_cast<unsigned char>(record[pos]);
    if (c < 63 || c > 126) {
      throw ParseError("invalid graph6 character", 1, pos);
    }
    ++pos;
    return c - 63;
  };
  int n = next();
  if (n == 63) {
    if (pos < record.size() && record[pos] == '~') {
      throw ParseError("graph6 node counts above 258047 unsupported", 1, pos);
    }
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | next();
  }
  Graph g(n);
  int bits_left = 0;
  int word = 0;
  for (Node j = 1; j < n; ++j) {
    for (Node i = 0; i < j; ++i) {
      if (bits_left == 0) {
        word = next();
        bits_left = 6;
      }
      --bits_left;
      if (((word >> bits_left) & 1) != 0) g.add_edge(i, j);
    }
  }
  if (pos != record.size()) {
    throw ParseError("trailing characters after graph6 record", 1, pos);
  }
  return g;
}

std::string SerializeGraph6(const Graph& g) {
  std::string out;
  const int n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    throw InvalidArgument("graph too large for graph6");
  }
  int filled = 0;
  int word = 0;
  for (Node j = 1; j < n; ++j) {
    for (Node i = 0; i < j; ++i) {
      word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        filled = 0;
        word = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> ReadGraph6Stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (IsBlank(line)) continue;
    try {
      out.push_back(ParseGraph6(line));
    } catch (const ParseError& e) {
      throw ParseError("bad graph6 record", number, e.offset());
    }
  }
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph ReadGraphFile(const std::string& path) {
  const std::string text = ReadTextFile(path);
  for (const auto& line : SplitLines(text)) {
    const std::string_view body = StripComment(line.text);
    if (IsBlank(body)) continue;
    bool all_digits = true;
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)) &&
          !std::isspace(static_cast<unsigned char>(c))) {
        all_digits = false;
      }
    }
    if (all_digits) return ParseEdgeList(text);
    return ParseGraph6(line.text);
  }
  throw ParseError("empty graph file", 1, 0);
}

}  // namespace fflab
