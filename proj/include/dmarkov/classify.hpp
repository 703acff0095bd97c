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

#ifndef DMARKOV_CLASSIFY_HPP_
#define DMARKOV_CLASSIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dmarkov/graph.hpp"
#include "dmarkov/sym_matrix.hpp"

namespace dmarkov {

// One parametrized piece of a correlation model, written in normalized
// labels 1..m (see Normalization).
struct Family {
  std::string name;
  std::vector<std::string> params;   // free entries, e.g. "s12"
  std::vector<std::string> entries;  // derived nonzero entries, e.g. "s13 = s12*s23"
  std::string domain;                // e.g. "s23^2 + s34^2 < 1"
  std::function<Eigen::MatrixXd(const std::vector<double>&)> local;
  std::function<bool(const std::vector<double>&)> admissible;

  int dimension() const { return static_cast<int>(params.size()); }
};

// Normalized label p (0-based) is the caller's vertex support[p]. When
// swapped is set the families describe M_1(H,G); the caller's model consists
// of the inverses of those matrices, rescaled to unit diagonal.
struct Normalization {
  std::vector<int> support;
  bool swapped = false;
  bool reversed = false;  // three-edge path read from its other end
};

struct ModelDescription {
  int n = 0;
  std::string case_tag;
  int intersection_size = 0;
  std::vector<std::vector<int>> blocks;
  Normalization normalization;
  std::vector<Family> families;
  int component_count = 0;
  int dimension = 0;  // of M_1(G,H)
  bool connected = true;
};

// Exact description of M_1(G,H) for |E_G & E_H| <= 3 with E_G & E_H connected
// on the vertices it touches. Throws ArgumentError otherwise.
ModelDescription classify_small_intersection(const Graph& g, const Graph& h);

// The correlation matrix of family `family` at the given parameters, in the
// caller's labels. Throws ArgumentError if params lie outside the domain.
SymMatrix<double> sample_from_family(const ModelDescription& desc, std::size_t family,
                                     const std::vector<double>& params);

// Smallest eigenvalue of the local matrix accepted by draw_parameters.
inline constexpr double kDrawMargin = 1e-3;

// Draws admissible parameters uniformly from (-1,1)^k by rejection, keeping
// the local matrix's smallest eigenvalue at least kDrawMargin.
std::vector<double> draw_parameters(const ModelDescription& desc, std::size_t family,
                                    std::mt19937_64& rng);

SymMatrix<double> sample_from_family(const ModelDescription& desc, std::size_t family,
                                     std::mt19937_64& rng);

// Labeled graphs on n vertices in edge_code order, optionally only the
// connected ones.
std::vector<Graph> labeled_graphs(int n, bool connected_only);

struct EnumerationEntry {
  std::vector<std::uint8_t> canonical;  // canonical_form(<G,H>, true)
  Graph g;                              // representative with least
  Graph h;                              // (g.edge_code(), h.edge_code())
};

struct EnumerationResult {
  std::size_t count = 0;
  std::vector<EnumerationEntry> representatives;  // sorted by canonical
};

// Classes of <G,H> under vertex permutation and duality, over all ordered
// pairs from `graphs`. Work is split into `chunks` independent pieces (0
// picks one per hardware thread) and merged deterministically.
EnumerationResult enumerate_pairs(const std::vector<Graph>& graphs, std::size_t chunks = 0);

// enumerate_pairs(labeled_graphs(n, connected_only)). Requires 3 <= n <= 6.
EnumerationResult enumerate_inequivalent(int n, bool connected_only, std::size_t chunks = 0);

}  // namespace dmarkov

#endif  // DMARKOV_CLASSIFY_HPP_
