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

#ifndef FFLAB_NODE_SET_HPP_
#define FFLAB_NODE_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fflab {

// Nodes are dense integers 0..n-1.
using Node = int;

// A subset of the node range [0, universe) stored as a packed bitmask.
//
// Binary set operations require both operands to share the same universe;
// mixing universes is a programming error and throws InvalidArgument.
class NodeSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  NodeSet() = default;
  explicit NodeSet(int universe);
  NodeSet(int universe, std::initializer_list<Node> members);
  NodeSet(int universe, std::span<const Node> members);

  static NodeSet Full(int universe);
  // Builds a set over a universe of at most 64 nodes from a raw mask.
  static NodeSet FromMask(int universe, Word mask);

  int universe() const { return universe_; }

  bool contains(Node v) const {
    return v >= 0 && v < universe_ &&
           ((words_[static_cast<std::size_t>(v) / kWordBits] >>
             (static_cast<std::size_t>(v) % kWordBits)) &
            Word{1}) != 0;
  }
  void insert(Node v);
  void erase(Node v);
  void clear();

  int size() const;
  bool empty() const;

  bool is_subset_of(const NodeSet& other) const;
  bool intersects(const NodeSet& other) const;

  NodeSet& operator|=(const NodeSet& other);
  NodeSet& operator&=(const NodeSet& other);
  NodeSet& operator-=(const NodeSet& other);
  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

  // Complement within the universe.
  NodeSet complement() const;

  // Members in increasing order.
  std::vector<Node> members() const;
  std::optional<Node> first() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<Node>(w * kWordBits + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  // Low 64 members as a mask; valid when universe() <= 64.
  Word mask() const { return words_.empty() ? 0 : words_[0]; }
  std::span<const Word> words() const { return words_; }

  bool operator==(const NodeSet& other) const = default;
  // Lexicographic order on the sorted member lists.
  std::strong_ordering lex_compare(const NodeSet& other) const;

  // "{0,2,5}"
  std::string to_string() const;

 private:
  void check_node(Node v) const;
  void check_same_universe(const NodeSet& other) const;

  int universe_ = 0;
  std::vector<Word> words_;
};

struct NodeSetHash {
  std::size_t operator()(const NodeSet& s) const noexcept;
};

}  // namespace fflab

#endif  // FFLAB_NODE_SET_HPP_
