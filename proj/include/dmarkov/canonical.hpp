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

#ifndef DMARKOV_CANONICAL_HPP_
#define DMARKOV_CANONICAL_HPP_

#include <cstdint>
#include <vector>

#include "dmarkov/relation.hpp"

namespace dmarkov {

inline constexpr int kMaxCanonicalVertices = 7;

// The lex_less-least relation among all vertex permutations of r, and of
// dual(r) as well when modulo_duality is set. Throws SizeError for n > 7.
Relation canonical_relation(const Relation& r, bool modulo_duality);

// canonical_relation(r, modulo_duality).to_bytes(). Two relations are
// equivalent iff their canonical forms are equal.
std::vector<std::uint8_t> canonical_form(const Relation& r, bool modulo_duality);

}  // namespace dmarkov

#endif  // DMARKOV_CANONICAL_HPP_
