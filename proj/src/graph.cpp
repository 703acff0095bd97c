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

#include "dmarkov/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dmarkov/errors.hpp"

namespace dmarkov {

Edge pair_unrank(int rank, int n) {
  int i = 0;
  while (rank >= n - 1 - i) {
    rank -= n - 1 - i;
    ++i;
  }
  return {i, i + 1 + rank};
}

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(__builtin_ctz(s));
    s &= s - 1;
  }
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeError("graph size " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxVertices) + "]");
  }
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    g.adj_[v] = static_cast<std::uint16_t>(full_set(n) & ~singleton(v));
  }
  return g;
}

namespace {

int parse_vertex(std::string_view text, std::string_view token, int n) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ArgumentError("malformed edge token '" + std::string(token) + "'");
  }
  if (value < 1 || value > n) {
    throw ArgumentError("vertex out of range in edge token '" +
                        std::string(token) + "'");
  }
  return value - 1;
}

}  // namespace

Graph Graph::parse(int n, std::string_view edge_list) {
  Graph g(n);
  std::istringstream in{std::string(edge_list)};
  std::string token;
  while (in >> token) {
    auto dash = token.find('-');
    if (dash == std::string::npos) {
      throw ArgumentError("malformed edge token '" + token + "'");
    }
    std::string_view view(token);
    int i = parse_vertex(view.substr(0, dash), token, n);
    int j = parse_vertex(view.substr(dash + 1), token, n);
    if (i == j) {
      throw ArgumentError("self-loop in edge token '" + token + "'");
    }
    g.add_edge(i, j);
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw ArgumentError("vertex " + std::to_string(v) +
                        " out of range for graph on " + std::to_string(n_) +
                        " vertices");
  }
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return (adj_[i] >> j) & 1u;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += cardinality(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw ArgumentError("self-loops are not allowed");
  adj_[i] |= static_cast<std::uint16_t>(singleton(j));
  adj_[j] |= static_cast<std::uint16_t>(singleton(i));
}

void Graph::remove_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  adj_[i] &= static_cast<std::uint16_t>(~singleton(j));
  adj_[j] &= static_cast<std::uint16_t>(~singleton(i));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((adj_[i] >> j) & 1u) out.push_back({i, j});
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!((adj_[i] >> j) & 1u)) out.push_back({i, j});
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    g.adj_[v] = static_cast<std::uint16_t>(full_set(n_) & ~adj_[v] & ~singleton(v));
  }
  return g;
}

Graph Graph::induced(VertexSet vertices) const {
  std::vector<int> keep = members(vertices & full_set(n_));
  Graph g(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if ((adj_[keep[a]] >> keep[b]) & 1u)
        g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw ArgumentError("permutation size does not match graph size");
  }
  Graph g(n_);
  for (const Edge& e : edges()) g.add_edge(perm[e.i], perm[e.j]);
  return g;
}

std::uint64_t Graph::edge_code() const {
  if (pair_count(n_) > 64) throw SizeError("edge code needs C(n,2) <= 64");
  std::uint64_t code = 0;
  for (const Edge& e : edges()) code |= std::uint64_t{1} << pair_rank(e.i, e.j, n_);
  return code;
}

Graph Graph::from_edge_code(int n, std::uint64_t code) {
  Graph g(n);
  if (pair_count(n) > 64) throw SizeError("edge code needs C(n,2) <= 64");
  for (int r = 0; r < pair_count(n); ++r) {
    if ((code >> r) & 1u) {
      Edge e = pair_unrank(r, n);
      g.add_edge(e.i, e.j);
    }
  }
  return g;
}

std::string Graph::to_string() const {
  std::string out;
  for (const Edge& e : edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.i + 1) + "-" + std::to_string(e.j + 1);
  }
  return out;
}

bool separates(const Graph& g, int i, int j, VertexSet k) {
  const int n = g.size();
  if (i < 0 || i >= n || j < 0 || j >= n || i == j) {
    throw ArgumentError("separates: need two distinct valid vertices");
  }
  if ((k & ~full_set(n)) != 0) throw ArgumentError("separates: invalid separator");
  if ((k & (singleton(i) | singleton(j))) != 0) {
    throw ArgumentError("separates: separator overlaps the endpoints");
  }
  VertexSet reached = singleton(i);
  VertexSet frontier = reached;
  while (frontier != 0) {
    VertexSet next = 0;
    for (int v : members(frontier)) next |= g.neighbors(v);
    next &= ~reached & ~k;
    reached |= next;
    frontier = next;
  }
  return (reached & singleton(j)) == 0;
}

namespace {

// Maps old labels to new ones after deleting k.
Graph delete_vertex(const Graph& g, int k) {
  const int n = g.size();
  Graph out(n - 1);
  auto relabel = [k](int v) { return v > k ? v - 1 : v; };
  for (const Edge& e : g.edges()) {
    if (e.i == k || e.j == k) continue;
    out.add_edge(relabel(e.i), relabel(e.j));
  }
  return out;
}

}  // namespace

Graph marginal_minor(const Graph& g, int k) {
  if (k < 0 || k >= g.size()) throw ArgumentError("marginal_minor: invalid vertex");
  return delete_vertex(g, k);
}

Graph conditional_minor(const Graph& g, int k) {
  if (k < 0 || k >= g.size()) throw ArgumentError("conditional_minor: invalid vertex");
  Graph filled = g;
  std::vector<int> nb = members(g.neighbors(k));
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b) filled.add_edge(nb[a], nb[b]);
  return delete_vertex(filled, k);
}

Graph direct_sum(const Graph& first, const Graph& second) {
  const int n = first.size() + second.size();
  if (n > kMaxVertices) {
    throw SizeError("direct sum has " + std::to_string(n) + " vertices, maximum is " +
                    std::to_string(kMaxVertices));
  }
  Graph out(n);
  for (const Edge& e : first.edges()) out.add_edge(e.i, e.j);
  for (const Edge& e : second.edges())
    out.add_edge(e.i + first.size(), e.j + first.size());
  return out;
}

std::vector<VertexSet> component_sets(const Graph& g) {
  std::vector<VertexSet> blocks;
  VertexSet seen = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (seen & singleton(v)) continue;
    VertexSet block = singleton(v);
    VertexSet frontier = block;
    while (frontier != 0) {
      VertexSet next = 0;
      for (int u : members(frontier)) next |= g.neighbors(u);
      next &= ~block;
      block |= next;
      frontier = next;
    }
    seen |= block;
    blocks.push_back(block);
  }
  return blocks;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (VertexSet block : component_sets(g)) out.push_back(members(block));
  return out;
}

bool is_connected(const Graph& g) { return component_sets(g).size() <= 1; }

namespace {

// Depth-first search over neighbors in increasing order, which yields paths
// in lexicographic order of their vertex sequences.
template <typename Visit>
bool walk_paths(const Graph& g, int v, int target, VertexSet visited,
                std::vector<int>& path, Visit& visit) {
  if (v == target) return visit(path);
  VertexSet next = g.neighbors(v) & ~visited;
  while (next != 0) {
    int u = __builtin_ctz(next);
    next &= next - 1;
    path.push_back(u);
    bool keep_going = walk_paths(g, u, target, visited | singleton(u), path, visit);
    path.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

void check_endpoints(const Graph& g, int k, int l) {
  if (k < 0 || k >= g.size() || l < 0 || l >= g.size() || k == l) {
    throw ArgumentError("path endpoints must be two distinct valid vertices");
  }
}

}  // namespace

std::vector<std::vector<int>> all_paths(const Graph& g, int k, int l, std::size_t cap) {
  check_endpoints(g, k, l);
  std::vector<std::vector<int>> out;
  std::vector<int> path{k};
  bool overflow = false;
  auto visit = [&](const std::vector<int>& p) {
    if (out.size() == cap) {
      overflow = true;
      return false;
    }
    out.push_back(p);
    return true;
  };
  walk_paths(g, k, l, singleton(k), path, visit);
  if (overflow) {
    throw ResourceError("more than " + std::to_string(cap) + " paths between " +
                        std::to_string(k + 1) + " and " + std::to_string(l + 1));
  }
  return out;
}

std::size_t count_paths(const Graph& g, int k, int l, std::size_t limit) {
  check_endpoints(g, k, l);
  std::size_t count = 0;
  std::vector<int> path{k};
  auto visit = [&](const std::vector<int>&) { return ++count < limit; };
  if (limit > 0) walk_paths(g, k, l, singleton(k), path, visit);
  return count;
}

Graph edge_intersection(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) throw ArgumentError("edge_intersection: size mismatch");
  Graph out(a.size());
  for (const Edge& e : a.edges())
    if (b.has_edge(e.i, e.j)) out.add_edge(e.i, e.j);
  return out;
}

Graph edge_union(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) throw ArgumentError("edge_union: size mismatch");
  Graph out = a;
  for (const Edge& e : b.edges()) out.add_edge(e.i, e.j);
  return out;
}

}  // namespace dmarkov
