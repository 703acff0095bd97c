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

#ifndef DMARKOV_IO_HPP_
#define DMARKOV_IO_HPP_

#include <string>
#include <string_view>

#include "dmarkov/graph.hpp"
#include "dmarkov/relation.hpp"
#include "dmarkov/sym_matrix.hpp"

namespace dmarkov {

struct GraphPair {
  Graph g;
  Graph h;
};

// Text formats, all 1-based. Blank lines and lines starting with '#' are
// ignored. Malformed input throws ParseError with the line and column of
// the offending token.
//
//   graph pair:  n 4
//                G 1-2 1-3 1-4
//                H 1-2 2-3 3-4
//
//   relation:    n 4
//                hex 0a01...        (bitset in statement_index order)
//            or  n 4
//                (1 3 | 2 4)        (one statement per line)
//                (2 4 | 1 3)
//
//   matrix:      3
//                1 1/2 0
//                1/2 1 0.25
//                0 0.25 1
GraphPair parse_graph_pair(std::string_view text);
Relation parse_relation(std::string_view text);
RationalSymMatrix parse_matrix(std::string_view text);

std::string format_graph_pair(const GraphPair& pair);
std::string format_relation_hex(const Relation& r);
std::string format_relation_list(const Relation& r);
std::string format_matrix(const RationalSymMatrix& s);

// Whole file contents. Throws std::runtime_error if unreadable.
std::string read_file(const std::string& path);

}  // namespace dmarkov

#endif  // DMARKOV_IO_HPP_
