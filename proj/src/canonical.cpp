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

#include "dmarkov/canonical.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>

#include "dmarkov/errors.hpp"

namespace dmarkov {

namespace {

// 21 pairs * 32 contexts = 672 statements for n = 7.
constexpr std::size_t kMaxWords = 11;
using Words = std::array<std::uint64_t, kMaxWords>;

// For every permutation p: image[p][x] is the index of the image of
// statement x under p, and dual_image[p][x] that of the image of its dual.
struct PermutationTable {
  int n = 0;
  std::size_t statements = 0;
  std::size_t perms = 0;
  std::vector<std::uint16_t> image;
  std::vector<std::uint16_t> dual_image;
};

PermutationTable build_table(int n) {
  PermutationTable t;
  t.n = n;
  t.statements = statement_count(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const VertexSet all = full_set(n);
  do {
    for (std::size_t x = 0; x < t.statements; ++x) {
      const Statement s = statement_at(x, n);
      VertexSet k = 0;
      for (int v : members(s.k)) k |= singleton(perm[v]);
      const int i = perm[s.i], j = perm[s.j];
      const VertexSet pair = singleton(i) | singleton(j);
      const Statement image = Statement::make(i, j, k);
      const Statement dual_image = Statement::make(i, j, all & ~(k | pair));
      t.image.push_back(static_cast<std::uint16_t>(statement_index(image, n)));
      t.dual_image.push_back(static_cast<std::uint16_t>(statement_index(dual_image, n)));
    }
    ++t.perms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

const PermutationTable& table_for(int n) {
  static std::array<std::once_flag, kMaxCanonicalVertices + 1> once;
  static std::array<std::unique_ptr<PermutationTable>, kMaxCanonicalVertices + 1> tables;
  std::call_once(once[n], [n] { tables[n] = std::make_unique<PermutationTable>(build_table(n)); });
  return *tables[n];
}

// Same order as lex_less.
bool words_less(const Words& a, const Words& b, std::size_t count) {
  for (std::size_t w = 0; w < count; ++w) {
    if (a[w] != b[w]) {
      const std::uint64_t diff = a[w] ^ b[w];
      return (b[w] >> __builtin_ctzll(diff)) & 1u;
    }
  }
  return false;
}

}  // namespace

Relation canonical_relation(const Relation& r, bool modulo_duality) {
  const int n = r.ground_size();
  if (n > kMaxCanonicalVertices) {
    throw SizeError("canonical form needs n <= 7, got n = " + std::to_string(n));
  }
  if (n < 2) return r;
  const PermutationTable& t = table_for(n);
  const std::size_t word_count = r.words().size();
  const std::vector<std::size_t> bits = r.indices();

  Words best{};
  bool have_best = false;
  Words image{};
  auto consider = [&](const std::uint16_t* map) {
    image.fill(0);
    for (std::size_t x : bits) {
      const std::uint16_t y = map[x];
      image[y >> 6] |= std::uint64_t{1} << (y & 63);
    }
    if (!have_best || words_less(image, best, word_count)) {
      best = image;
      have_best = true;
    }
  };
  for (std::size_t p = 0; p < t.perms; ++p) {
    consider(t.image.data() + p * t.statements);
    if (modulo_duality) consider(t.dual_image.data() + p * t.statements);
  }

  Relation out(n);
  std::copy_n(best.begin(), word_count, out.mutable_words().begin());
  return out;
}

std::vector<std::uint8_t> canonical_form(const Relation& r, bool modulo_duality) {
  return canonical_relation(r, modulo_duality).to_bytes();
}

}  // namespace dmarkov
