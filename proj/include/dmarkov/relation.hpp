// Copyright 2026 The dmarkov Authors
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

#ifndef DMARKOV_RELATION_HPP_
#define DMARKOV_RELATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dmarkov/graph.hpp"

namespace dmarkov {

// The CI symbol (ij|K): i and j independent given K. Always i < j and K
// disjoint from {i, j}.
struct Statement {
  int i = 0;
  int j = 1;
  VertexSet k = 0;

  // Normalizes the order of i and j; throws ArgumentError on i == j or
  // overlapping K.
  static Statement make(int i, int j, VertexSet k = 0);

  // "(1 3 | 2 4)", 1-based; "(1 3 |)" for an empty K.
  std::string to_string() const;

  friend bool operator==(const Statement&, const Statement&) = default;
  friend auto operator<=>(const Statement&, const Statement&) = default;
};

// Rank of K among the subsets of N \ {i, j}: the members of N \ {i, j} are
// numbered in increasing order and K is read as a binary number over them.
std::uint32_t subset_rank(VertexSet k, int i, int j);
VertexSet subset_unrank(std::uint32_t rank, int i, int j);

// Number of statements on a ground set of size n, C(n,2) * 2^(n-2).
std::size_t statement_count(int n);

// Index of a statement: pair_rank(i,j) * 2^(n-2) + subset_rank(K, i, j).
// This order is part of the serialization format and must not change.
std::size_t statement_index(const Statement& s, int n);
Statement statement_at(std::size_t index, int n);

// A set of CI statements on the ground set {0, ..., n-1}, stored as a bitset
// over statement_index.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n);

  int ground_size() const { return n_; }
  std::size_t capacity() const { return capacity_; }

  bool contains(const Statement& s) const { return test(statement_index(s, n_)); }
  void insert(const Statement& s) { set(statement_index(s, n_)); }
  void erase(const Statement& s) { reset(statement_index(s, n_)); }

  bool test(std::size_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  void set(std::size_t index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void reset(std::size_t index) { words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63)); }

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  // Members in index order.
  std::vector<Statement> statements() const;
  std::vector<std::size_t> indices() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  bool is_subset_of(const Relation& other) const;

  Relation& operator|=(const Relation& other);
  Relation& operator&=(const Relation& other);
  Relation& operator-=(const Relation& other);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator&(Relation a, const Relation& b) { return a &= b; }
  friend Relation operator-(Relation a, const Relation& b) { return a -= b; }

  friend bool operator==(const Relation&, const Relation&) = default;

  // Bytes with statement 0 in the most significant bit of byte 0. Comparing
  // these strings lexicographically compares relations bit by bit in index
  // order.
  std::vector<std::uint8_t> to_bytes() const;
  static Relation from_bytes(int n, std::span<const std::uint8_t> bytes);
  std::string to_hex() const;
  static Relation from_hex(int n, const std::string& hex);

  // One statement per line in list form.
  std::string to_list() const;

 private:
  void check_compatible(const Relation& other) const;

  int n_ = 0;
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic order on the bit sequences (statement 0 first, 0 < 1).
bool lex_less(const Relation& a, const Relation& b);

Relation full_relation(int n);

// All (ij|K) such that K separates i and j in g.
Relation relation_of_graph(const Graph& g);

// (ij|K) -> (ij|N \ ijK).
Relation dual(const Relation& r);

// Statements of r not mentioning k, on the ground set N \ k.
Relation marginal(const Relation& r, int k);

// (ij|K) with (ij|kK) in r, on the ground set N \ k.
Relation conditional(const Relation& r, int k);

// Direct sum; the ground set of `second` is shifted by first.ground_size().
Relation direct_sum_relations(const Relation& first, const Relation& second);

// <G> united with the dual of <H>.
Relation double_markov_relation(const Graph& g, const Graph& h);

// Image of r under the vertex renaming v -> perm[v].
Relation permuted(const Relation& r, std::span<const int> perm);

// (ij|L) in r implies (ij|kL) in r for every k outside ijL.
bool is_upward_stable(const Relation& r);

}  // namespace dmarkov

#endif  // DMARKOV_RELATION_HPP_
