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

#include "dmarkov/relation.hpp"

#include <algorithm>
#include <cctype>

#include "dmarkov/errors.hpp"

namespace dmarkov {

Statement Statement::make(int i, int j, VertexSet k) {
  if (i == j) throw ArgumentError("statement needs two distinct vertices");
  if (i < 0 || j < 0 || i >= kMaxVertices || j >= kMaxVertices) {
    throw ArgumentError("statement vertex out of range");
  }
  if (i > j) std::swap(i, j);
  if ((k & (singleton(i) | singleton(j))) != 0) {
    throw ArgumentError("conditioning set overlaps the statement's pair");
  }
  return {i, j, k};
}

std::string Statement::to_string() const {
  std::string out = "(" + std::to_string(i + 1) + " " + std::to_string(j + 1) + " |";
  for (int v : members(k)) out += " " + std::to_string(v + 1);
  return out + ")";
}

std::uint32_t subset_rank(VertexSet k, int i, int j) {
  const VertexSet low = k & ((VertexSet{1} << i) - 1);
  const VertexSet mid = (k >> (i + 1)) & ((VertexSet{1} << (j - i - 1)) - 1);
  const VertexSet high = k >> (j + 1);
  return low | (mid << i) | (high << (j - 1));
}

VertexSet subset_unrank(std::uint32_t rank, int i, int j) {
  const VertexSet low = rank & ((VertexSet{1} << i) - 1);
  const VertexSet mid = (rank >> i) & ((VertexSet{1} << (j - i - 1)) - 1);
  const VertexSet high = rank >> (j - 1);
  return low | (mid << (i + 1)) | (high << (j + 1));
}

std::size_t statement_count(int n) {
  if (n < 2) return 0;
  return static_cast<std::size_t>(pair_count(n)) << (n - 2);
}

std::size_t statement_index(const Statement& s, int n) {
  if (s.j >= n || (s.k & ~full_set(n)) != 0) {
    throw ArgumentError("statement " + s.to_string() + " outside ground set of size " +
                        std::to_string(n));
  }
  return (static_cast<std::size_t>(pair_rank(s.i, s.j, n)) << (n - 2)) |
         subset_rank(s.k, s.i, s.j);
}

Statement statement_at(std::size_t index, int n) {
  const Edge e = pair_unrank(static_cast<int>(index >> (n - 2)), n);
  const auto rank = static_cast<std::uint32_t>(index & ((std::size_t{1} << (n - 2)) - 1));
  return {e.i, e.j, subset_unrank(rank, e.i, e.j)};
}

Relation::Relation(int n) : n_(n), capacity_(statement_count(n)) {
  if (n < 1 || n > kMaxVertices) {
    throw SizeError("ground set size " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxVertices) + "]");
  }
  words_.assign((capacity_ + 63) / 64, 0);
}

std::size_t Relation::size() const {
  std::size_t count = 0;
  for (std::uint64_t w : words_) count += static_cast<std::size_t>(__builtin_popcountll(w));
  return count;
}

std::vector<std::size_t> Relation::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Statement> Relation::statements() const {
  std::vector<Statement> out;
  for (std::size_t index : indices()) out.push_back(statement_at(index, n_));
  return out;
}

void Relation::check_compatible(const Relation& other) const {
  if (n_ != other.n_) throw ArgumentError("relations live on different ground sets");
}

bool Relation::is_subset_of(const Relation& other) const {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

Relation& Relation::operator|=(const Relation& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Relation& Relation::operator&=(const Relation& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Relation& Relation::operator-=(const Relation& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::vector<std::uint8_t> Relation::to_bytes() const {
  std::vector<std::uint8_t> bytes((capacity_ + 7) / 8, 0);
  for (std::size_t index : indices()) {
    bytes[index / 8] |= static_cast<std::uint8_t>(0x80u >> (index % 8));
  }
  return bytes;
}

Relation Relation::from_bytes(int n, std::span<const std::uint8_t> bytes) {
  Relation r(n);
  if (bytes.size() != (r.capacity_ + 7) / 8) {
    throw ArgumentError("relation byte string has wrong length for n = " + std::to_string(n));
  }
  for (std::size_t index = 0; index < r.capacity_; ++index) {
    if (bytes[index / 8] & (0x80u >> (index % 8))) r.set(index);
  }
  const std::size_t tail = r.capacity_ % 8;
  if (tail != 0 && (bytes.back() & (0xFFu >> tail)) != 0) {
    throw ArgumentError("relation byte string has padding bits set");
  }
  return r;
}

std::string Relation::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : to_bytes()) {
    out += kDigits[b >> 4];
    out += kDigits[b & 15];
  }
  return out;
}

Relation Relation::from_hex(int n, const std::string& hex) {
  if (hex.size() % 2 != 0) throw ArgumentError("hex relation has odd length");
  auto nibble = [](char c) -> int {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ArgumentError(std::string("invalid hex digit '") + c + "'");
  };
  std::vector<std::uint8_t> bytes;
  for (std::size_t p = 0; p < hex.size(); p += 2) {
    bytes.push_back(static_cast<std::uint8_t>(nibble(hex[p]) * 16 + nibble(hex[p + 1])));
  }
  return from_bytes(n, bytes);
}

std::string Relation::to_list() const {
  std::string out;
  for (const Statement& s : statements()) out += s.to_string() + "\n";
  return out;
}

bool lex_less(const Relation& a, const Relation& b) {
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    if (wa[w] != wb[w]) {
      const std::uint64_t diff = wa[w] ^ wb[w];
      return (wb[w] >> __builtin_ctzll(diff)) & 1u;
    }
  }
  return false;
}

Relation full_relation(int n) {
  Relation r(n);
  for (std::size_t index = 0; index < r.capacity(); ++index) r.set(index);
  return r;
}

Relation relation_of_graph(const Graph& g) {
  const int n = g.size();
  Relation r(n);
  for (std::size_t index = 0; index < r.capacity(); ++index) {
    const Statement s = statement_at(index, n);
    if (separates(g, s.i, s.j, s.k)) r.set(index);
  }
  return r;
}

Relation dual(const Relation& r) {
  const int n = r.ground_size();
  Relation out(n);
  for (const Statement& s : r.statements()) {
    out.insert({s.i, s.j, full_set(n) & ~(s.k | singleton(s.i) | singleton(s.j))});
  }
  return out;
}

namespace {

int grow(int v, int k) { return v >= k ? v + 1 : v; }

VertexSet grow_set(VertexSet s, int k) {
  const VertexSet low = s & ((VertexSet{1} << k) - 1);
  return low | ((s & ~low) << 1);
}

void check_minor_vertex(const Relation& r, int k) {
  if (r.ground_size() < 2) throw ArgumentError("minor of a relation on a single vertex");
  if (k < 0 || k >= r.ground_size()) throw ArgumentError("minor vertex out of range");
}

}  // namespace

Relation marginal(const Relation& r, int k) {
  check_minor_vertex(r, k);
  Relation out(r.ground_size() - 1);
  for (std::size_t index = 0; index < out.capacity(); ++index) {
    const Statement s = statement_at(index, out.ground_size());
    const Statement lifted{grow(s.i, k), grow(s.j, k), grow_set(s.k, k)};
    if (r.contains(lifted)) out.set(index);
  }
  return out;
}

Relation conditional(const Relation& r, int k) {
  check_minor_vertex(r, k);
  Relation out(r.ground_size() - 1);
  for (std::size_t index = 0; index < out.capacity(); ++index) {
    const Statement s = statement_at(index, out.ground_size());
    const Statement lifted{grow(s.i, k), grow(s.j, k), grow_set(s.k, k) | singleton(k)};
    if (r.contains(lifted)) out.set(index);
  }
  return out;
}

Relation direct_sum_relations(const Relation& first, const Relation& second) {
  const int n = first.ground_size();
  const int m = second.ground_size();
  if (n + m > kMaxVertices) {
    throw SizeError("direct sum has " + std::to_string(n + m) + " vertices, maximum is " +
                    std::to_string(kMaxVertices));
  }
  const int total = n + m;
  Relation out(total);
  const VertexSet left = full_set(n);
  const VertexSet right = full_set(total) & ~left;
  for (std::size_t index = 0; index < out.capacity(); ++index) {
    const Statement s = statement_at(index, total);
    const bool i_left = s.i < n;
    const bool j_left = s.j < n;
    if (i_left != j_left) {
      out.set(index);
    } else if (i_left) {
      if (first.contains({s.i, s.j, s.k & left})) out.set(index);
    } else {
      if (second.contains({s.i - n, s.j - n, (s.k & right) >> n})) out.set(index);
    }
  }
  return out;
}

Relation double_markov_relation(const Graph& g, const Graph& h) {
  if (g.size() != h.size()) throw ArgumentError("double_markov_relation: size mismatch");
  return relation_of_graph(g) | dual(relation_of_graph(h));
}

Relation permuted(const Relation& r, std::span<const int> perm) {
  const int n = r.ground_size();
  if (static_cast<int>(perm.size()) != n) throw ArgumentError("permutation size mismatch");
  Relation out(n);
  for (const Statement& s : r.statements()) {
    VertexSet k = 0;
    for (int v : members(s.k)) k |= singleton(perm[v]);
    out.insert(Statement::make(perm[s.i], perm[s.j], k));
  }
  return out;
}

bool is_upward_stable(const Relation& r) {
  const int n = r.ground_size();
  for (const Statement& s : r.statements()) {
    const VertexSet rest = full_set(n) & ~(s.k | singleton(s.i) | singleton(s.j));
    for (int v : members(rest)) {
      if (!r.contains({s.i, s.j, s.k | singleton(v)})) return false;
    }
  }
  return true;
}

}  // namespace dmarkov
