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

#include "fflab/node_set.hpp"

#include <algorithm>

#include "fflab/error.hpp"

namespace fflab {
namespace {

std::size_t WordCount(int universe) {
  return (static_cast<std::size_t>(universe) + NodeSet::kWordBits - 1) /
         NodeSet::kWordBits;
}

}  // namespace

NodeSet::NodeSet(int universe) : universe_(universe) {
  if (universe < 0) throw InvalidArgument("negative node universe");
  words_.assign(WordCount(universe), 0);
}

NodeSet::NodeSet(int universe, std::initializer_list<Node> members)
    : NodeSet(universe) {
  for (Node v : members) insert(v);
}

NodeSet::NodeSet(int universe, std::span<const Node> members)
    : NodeSet(universe) {
  for (Node v : members) insert(v);
}

NodeSet NodeSet::Full(int universe) {
  NodeSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  const int tail = universe % kWordBits;
  if (tail != 0) s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

NodeSet NodeSet::FromMask(int universe, Word mask) {
  if (universe > kWordBits) {
    throw InvalidArgument("FromMask requires a universe of at most 64 nodes");
  }
  NodeSet s(universe);
  if (universe == 0) return s;
  const Word valid =
      universe == kWordBits ? ~Word{0} : ((Word{1} << universe) - 1);
  if ((mask & ~valid) != 0) throw InvalidArgument("mask exceeds universe");
  s.words_[0] = mask;
  return s;
}

void NodeSet::check_node(Node v) const {
  if (v < 0 || v >= universe_) {
    throw InvalidArgument("node " + std::to_string(v) +
                          " outside range [0," + std::to_string(universe_) +
                          ")");
  }
}

void NodeSet::check_same_universe(const NodeSet& other) const {
  if (universe_ != other.universe_) {
    throw InvalidArgument("node sets over different universes (" +
                          std::to_string(universe_) + " vs " +
                          std::to_string(other.universe_) + ")");
  }
}

void NodeSet::insert(Node v) {
  check_node(v);
  words_[static_cast<std::size_t>(v) / kWordBits] |=
      Word{1} << (static_cast<std::size_t>(v) % kWordBits);
}

void NodeSet::erase(Node v) {
  check_node(v);
  words_[static_cast<std::size_t>(v) / kWordBits] &=
      ~(Word{1} << (static_cast<std::size_t>(v) % kWordBits));
}

void NodeSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

int NodeSet::size() const {
  int total = 0;
  for (Word w : words_) total += std::popcount(w);
  return total;
}

bool NodeSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](Word w) { return w == 0; });
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool NodeSet::intersects(const NodeSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

NodeSet& NodeSet::operator|=(const NodeSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

NodeSet& NodeSet::operator-=(const NodeSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

NodeSet NodeSet::complement() const { return Full(universe_) - *this; }

std::vector<Node> NodeSet::members() const {
  std::vector<Node> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Node v) { out.push_back(v); });
  return out;
}

std::optional<Node> NodeSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Node>(w * kWordBits +
                               static_cast<std::size_t>(
                                   std::countr_zero(words_[w])));
    }
  }
  return std::nullopt;
}

std::strong_ordering NodeSet::lex_compare(const NodeSet& other) const {
  const auto a = members();
  const auto b = other.members();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for_each([&](Node v) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  });
  out += '}';
  return out;
}

std::size_t NodeSetHash::operator()(const NodeSet& s) const noexcept {
  std::size_t h = static_cast<std::size_t>(s.universe()) * 0x9e3779b97f4a7c15ULL;
  for (NodeSet::Word w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace fflab
