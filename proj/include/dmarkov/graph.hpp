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

#ifndef DMARKOV_GRAPH_HPP_
#define DMARKOV_GRAPH_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dmarkov {

inline constexpr int kMaxVertices = 16;

// Bit v is set iff vertex v (0-based) is a member.
using VertexSet = std::uint32_t;

struct Edge {
  int i;  // i < j
  int j;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Number of unordered pairs on n vertices.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Lexicographic rank of the pair {i, j}, i < j, among all pairs on n vertices:
// (0,1) -> 0, (0,2) -> 1, ..., (n-2,n-1) -> C(n,2)-1.
constexpr int pair_rank(int i, int j, int n) {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

// Inverse of pair_rank.
Edge pair_unrank(int rank, int n);

inline VertexSet singleton(int v) { return VertexSet{1} << v; }
inline int cardinality(VertexSet s) { return __builtin_popcount(s); }
inline VertexSet full_set(int n) { return (VertexSet{1} << n) - 1; }
std::vector<int> members(VertexSet s);

// Simple undirected graph on the vertices 0..n-1 (printed 1-based).
//
// Adjacency is stored as one neighbor bitmask per vertex; the two copies of
// each edge are always kept in sync.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph empty(int n) { return Graph(n); }
  static Graph complete(int n);

  // Parses a whitespace separated list of 1-based edges "1-2 2-3".
  static Graph parse(int n, std::string_view edge_list);

  int size() const { return n_; }
  bool has_edge(int i, int j) const;
  VertexSet neighbors(int v) const;
  int edge_count() const;

  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  // Edges and non-edges in lexicographic order (pair_rank order).
  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

  Graph complement() const;

  // Subgraph induced on `vertices`, relabeled 0..|vertices|-1 in increasing
  // order of the original labels.
  Graph induced(VertexSet vertices) const;

  // Graph with vertex v renamed to perm[v].
  Graph permuted(std::span<const int> perm) const;

  // Bit pair_rank(i,j) set iff ij is an edge. Requires C(n,2) <= 64.
  std::uint64_t edge_code() const;
  static Graph from_edge_code(int n, std::uint64_t code);

  // "1-2 1-3", 1-based, lexicographic.
  std::string to_string() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint16_t, kMaxVertices> adj_{};
};

// True iff every path from i to j in g meets k.
bool separates(const Graph& g, int i, int j, VertexSet k);

// Deletes vertex k with its incident edges. Labels above k shift down by one.
Graph marginal_minor(const Graph& g, int k);

// Deletes vertex k after joining all its neighbors into a clique. Labels above
// k shift down by one.
Graph conditional_minor(const Graph& g, int k);

// Disjoint union; the vertices of `second` are offset by first.size().
Graph direct_sum(const Graph& first, const Graph& second);

// Vertex sets of the connected components, each sorted, blocks ordered by
// least element.
std::vector<std::vector<int>> connected_components(const Graph& g);
std::vector<VertexSet> component_sets(const Graph& g);
bool is_connected(const Graph& g);

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

// Every simple path from k to l as a vertex sequence, in lexicographic order.
// Throws ResourceError if more than `cap` paths exist.
std::vector<std::vector<int>> all_paths(const Graph& g, int k, int l,
                                        std::size_t cap = kDefaultPathCap);

// Number of simple k-l paths, counting stops once `limit` is reached.
std::size_t count_paths(const Graph& g, int k, int l, std::size_t limit);

Graph edge_intersection(const Graph& a, const Graph& b);
Graph edge_union(const Graph& a, const Graph& b);

}  // namespace dmarkov

#endif  // DMARKOV_GRAPH_HPP_
