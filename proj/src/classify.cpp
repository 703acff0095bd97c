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

#include "dmarkov/classify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <utility>

#include <Eigen/Cholesky>

#include "dmarkov/errors.hpp"
#include "dmarkov/geometry.hpp"

namespace dmarkov {

namespace {

using Params = std::vector<double>;
using Setter = std::function<void(Eigen::MatrixXd&, const Params&)>;
using Test = std::function<bool(const Params&)>;

double sq(double x) { return x * x; }

std::string var(int i, int j) { return "s" + std::to_string(i) + std::to_string(j); }

void put(Eigen::MatrixXd& a, int i, int j, double v) { a(i - 1, j - 1) = a(j - 1, i - 1) = v; }

// Family on m normalized vertices with free entries `free` (1-based pairs).
// A null `test` means the domain is "positive definite".
Family family(std::string name, int m, std::vector<std::pair<int, int>> free,
              std::vector<std::string> entries, std::string domain, Setter derive,
              Test test) {
  Family f;
  f.name = std::move(name);
  for (auto [i, j] : free) f.params.push_back(var(i, j));
  f.entries = std::move(entries);
  f.domain = std::move(domain);
  f.local = [m, free, derive](const Params& p) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(m, m);
    for (std::size_t k = 0; k < free.size(); ++k) put(a, free[k].first, free[k].second, p[k]);
    if (derive) derive(a, p);
    return a;
  };
  const std::size_t arity = free.size();
  auto local = f.local;
  f.admissible = [arity, test, local](const Params& p) {
    if (p.size() != arity) return false;
    for (double x : p)
      if (!(std::abs(x) < 1.0)) return false;
    if (test) return test(p);
    return is_pd(SymMatrix<double>::from_dense(local(p)));
  };
  return f;
}

Test always() {
  return [](const Params&) { return true; };
}

Test unit_disk() {
  return [](const Params& p) { return sq(p[0]) + sq(p[1]) < 1.0; };
}

std::string pd_name(std::vector<int> vertices) {
  std::string out = "PD_{";
  for (int v : vertices) out += std::to_string(v);
  return out + "}";
}

Family segment(int m, int i, int j) {
  return family(pd_name({i, j}), m, {{i, j}}, {}, "|" + var(i, j) + "| < 1", nullptr, always());
}

// Correlation matrices supported on the two edges ij, jk sharing vertex j.
Family cherry(int m, int i, int j, int k, std::string name) {
  const int a1 = std::min(i, j), b1 = std::max(i, j);
  const int a2 = std::min(j, k), b2 = std::max(j, k);
  return family(std::move(name), m, {{a1, b1}, {a2, b2}}, {},
                var(a1, b1) + "^2 + " + var(a2, b2) + "^2 < 1", nullptr, unit_disk());
}

Family block_product(int m) {
  return family("PD_{12} x PD_{34}", m, {{1, 2}, {3, 4}}, {}, "|s12| < 1, |s34| < 1", nullptr,
                always());
}

// Status of a pair outside E_G & E_H: in G only, in H only, or in neither.
enum class Status { kG, kH, kO };

Status status_of(const Graph& g, const Graph& h, int u, int v, bool swapped) {
  const bool in_g = g.has_edge(u, v);
  const bool in_h = h.has_edge(u, v);
  Status s = in_g ? Status::kG : (in_h ? Status::kH : Status::kO);
  if (swapped && s != Status::kO) s = s == Status::kG ? Status::kH : Status::kG;
  return s;
}

char status_char(Status s) { return s == Status::kG ? 'g' : (s == Status::kH ? 'h' : 'o'); }

void finish(ModelDescription& d) {
  d.component_count = static_cast<int>(d.families.size());
  d.dimension = 0;
  for (const Family& f : d.families) d.dimension = std::max(d.dimension, f.dimension());
}

// Statuses of (13, 14, 24) on the normalized path -> case number.
int path_case(const std::string& key) {
  static const std::map<std::string, int> kCases = {
      {"ggg", 1}, {"ogg", 2}, {"gog", 3}, {"oog", 4}, {"ogo", 5}, {"ooo", 6},
      {"hgg", 7}, {"hog", 8}, {"hgo", 9}, {"ghg", 10}, {"ohg", 11},
  };
  const auto it = kCases.find(key);
  return it == kCases.end() ? 0 : it->second;
}

std::vector<Family> path_families(int c) {
  const Family tri = family("M(G&H)^-1, tridiagonal", 4, {{1, 2}, {2, 3}, {3, 4}}, {},
                            "positive definite", nullptr, nullptr);
  const Family f234 = cherry(4, 2, 3, 4, "M({23,34})^-1");
  const Family f123 = cherry(4, 1, 2, 3, "M({12,23})^-1");
  const Family case7 = family(
      "s13 = s12*s23", 4, {{1, 2}, {2, 3}, {3, 4}}, {"s13 = s12*s23"},
      "|s12| < 1, s23^2 + s34^2 < 1", [](Eigen::MatrixXd& a, const Params& p) { put(a, 1, 3, p[0] * p[1]); },
      [](const Params& p) { return sq(p[1]) + sq(p[2]) < 1.0; });
  const Family case9 = family(
      "s13 = s12*s23, s34 = 0", 4, {{1, 2}, {2, 3}}, {"s13 = s12*s23"}, "|s12| < 1, |s23| < 1",
      [](Eigen::MatrixXd& a, const Params& p) { put(a, 1, 3, p[0] * p[1]); }, always());
  const Family case10 = family(
      "s14 = -s12*s23*s34/(1 - s23^2)", 4, {{1, 2}, {2, 3}, {3, 4}},
      {"s14 = -s12*s23*s34/(1 - s23^2)"}, "s12^2 + s23^2 < 1, s23^2 + s34^2 < 1",
      [](Eigen::MatrixXd& a, const Params& p) {
        put(a, 1, 4, -p[0] * p[1] * p[2] / (1.0 - sq(p[1])));
      },
      [](const Params& p) { return sq(p[0]) + sq(p[1]) < 1.0 && sq(p[1]) + sq(p[2]) < 1.0; });
  switch (c) {
    case 1: return {tri};
    case 2:
    case 4: return {block_product(4), f234};
    case 3: return {block_product(4), f123, f234};
    case 5:
    case 6: return {block_product(4), segment(4, 2, 3)};
    case 7:
    case 8: return {case7};
    case 9: return {block_product(4), case9};
    case 10: return {case10};
    case 11: return {block_product(4), f234};
  }
  return {};
}

void classify_path(const Graph& g, const Graph& h, const Graph& common, ModelDescription& d) {
  std::vector<int> ends;
  for (int v = 0; v < common.size(); ++v)
    if (cardinality(common.neighbors(v)) == 1) ends.push_back(v);
  std::vector<int> order{ends.front()};
  while (order.size() < 4) {
    const int last = order.back();
    const VertexSet next = common.neighbors(last) &
                           ~(order.size() > 1 ? singleton(order[order.size() - 2]) : 0);
    order.push_back(__builtin_ctz(next));
  }
  auto key_for = [&](const std::vector<int>& p, bool swapped) {
    std::string key;
    key += status_char(status_of(g, h, p[0], p[2], swapped));
    key += status_char(status_of(g, h, p[0], p[3], swapped));
    key += status_char(status_of(g, h, p[1], p[3], swapped));
    return key;
  };
  std::string key = key_for(order, false);
  const auto g_count = std::count(key.begin(), key.end(), 'g');
  const auto h_count = std::count(key.begin(), key.end(), 'h');
  d.normalization.swapped = g_count < h_count;
  key = key_for(order, d.normalization.swapped);
  int c = path_case(key);
  if (c == 0) {
    std::reverse(order.begin(), order.end());
    d.normalization.reversed = true;
    key = key_for(order, d.normalization.swapped);
    c = path_case(key);
  }
  if (c == 0) throw ArgumentError("unclassified three-edge path pattern " + key);
  d.normalization.support = order;
  d.case_tag = "path-" + std::to_string(c);
  d.families = path_families(c);
}

void classify_star(const Graph& g, const Graph& h, const Graph& common, ModelDescription& d) {
  int center = 0;
  while (cardinality(common.neighbors(center)) != 3) ++center;
  std::vector<int> leaves = members(common.neighbors(center));

  auto status = [&](int u, int v) { return status_of(g, h, u, v, d.normalization.swapped); };
  auto count = [&](Status s) {
    int total = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) total += status(leaves[a], leaves[b]) == s ? 1 : 0;
    return total;
  };
  d.normalization.swapped = count(Status::kG) < count(Status::kH);
  const int gs = count(Status::kG), hs = count(Status::kH), os = count(Status::kO);

  // Leaf pair of the given status; the third leaf goes last.
  auto pair_with = [&](Status s) {
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (status(leaves[a], leaves[b]) == s) return std::pair{leaves[a], leaves[b]};
    return std::pair{-1, -1};
  };
  auto third = [&](int u, int v) {
    for (int x : leaves)
      if (x != u && x != v) return x;
    return -1;
  };

  std::vector<int> local;  // normalized leaves 2, 3, 4
  if (gs == 3) {
    local = leaves;
    d.case_tag = "star-ggg";
    d.families = {family("M(G&H)^-1, star", 4, {{1, 2}, {1, 3}, {1, 4}}, {},
                         "s12^2 + s13^2 + s14^2 < 1", nullptr, [](const Params& p) {
                           return sq(p[0]) + sq(p[1]) + sq(p[2]) < 1.0;
                         })};
  } else if (os == 3) {
    local = leaves;
    d.case_tag = "star-ooo";
    d.families = {segment(4, 1, 2), segment(4, 1, 3), segment(4, 1, 4)};
  } else if (gs == 1 && os == 2) {
    auto [u, v] = pair_with(Status::kG);
    local = {u, v, third(u, v)};
    d.case_tag = "star-goo";
    d.families = {cherry(4, 2, 1, 3, "M({12,13})^-1"), segment(4, 1, 4)};
  } else if (gs == 2 && os == 1) {
    auto [u, v] = pair_with(Status::kO);
    local = {third(u, v), u, v};
    d.case_tag = "star-ggo";
    d.families = {cherry(4, 2, 1, 4, "M({12,14})^-1"), cherry(4, 2, 1, 3, "M({12,13})^-1")};
  } else if (gs == 2 && hs == 1) {
    auto [u, v] = pair_with(Status::kH);
    local = {third(u, v), u, v};
    d.case_tag = "star-ggh";
    d.families = {family("s34 = s13*s14/(1 - s12^2)", 4, {{1, 2}, {1, 3}, {1, 4}},
                         {"s34 = s13*s14/(1 - s12^2)"}, "positive definite",
                         [](Eigen::MatrixXd& a, const Params& p) {
                           put(a, 3, 4, p[1] * p[2] / (1.0 - sq(p[0])));
                         },
                         nullptr)};
  } else {
    // One pair of each status. x is the leaf shared by the g and h pairs.
    auto [g1, g2] = pair_with(Status::kG);
    auto [h1, h2] = pair_with(Status::kH);
    const int x = (g1 == h1 || g1 == h2) ? g1 : g2;
    const int y = x == g1 ? g2 : g1;
    const int z = x == h1 ? h2 : h1;
    local = {x, y, z};
    d.case_tag = "star-gho";
    d.families = {
        family("s24 = s12*s14, s13 = 0", 4, {{1, 2}, {1, 4}}, {"s24 = s12*s14"},
               "|s12| < 1, |s14| < 1",
               [](Eigen::MatrixXd& a, const Params& p) { put(a, 2, 4, p[0] * p[1]); }, always()),
        cherry(4, 2, 1, 3, "M({12,13})^-1")};
  }
  d.normalization.support = {center, local[0], local[1], local[2]};
}

}  // namespace

ModelDescription classify_small_intersection(const Graph& g, const Graph& h) {
  if (g.size() != h.size()) throw ArgumentError("graph sizes differ");
  const Graph common = edge_intersection(g, h);
  ModelDescription d;
  d.n = g.size();
  d.intersection_size = common.edge_count();
  if (d.intersection_size > 3) {
    throw ArgumentError("classification needs |E_G & E_H| <= 3, got " +
                        std::to_string(d.intersection_size));
  }
  for (const Block& b : decompose(g, h).blocks) d.blocks.push_back(b.vertices);
  const auto nontrivial = std::count_if(d.blocks.begin(), d.blocks.end(),
                                        [](const std::vector<int>& b) { return b.size() > 1; });
  if (nontrivial > 1) {
    throw ArgumentError("E_G & E_H is not connected; classify each block of decompose separately");
  }

  const std::vector<Edge> edges = common.edges();
  switch (d.intersection_size) {
    case 0:
      d.case_tag = "empty";
      d.families = {family("identity", 0, {}, {}, "none", nullptr, always())};
      break;
    case 1: {
      d.case_tag = "one-edge";
      d.normalization.support = {edges[0].i, edges[0].j};
      d.families = {segment(2, 1, 2)};
      break;
    }
    case 2: {
      const int j = (edges[0].i == edges[1].i || edges[0].i == edges[1].j) ? edges[0].i : edges[0].j;
      const int i = edges[0].i == j ? edges[0].j : edges[0].i;
      const int k = edges[1].i == j ? edges[1].j : edges[1].i;
      d.normalization.support = {std::min(i, k), j, std::max(i, k)};
      switch (status_of(g, h, i, k, false)) {
        case Status::kG:
          d.case_tag = "two-edge-1";
          d.families = {cherry(3, 1, 2, 3, "M(G&H)^-1")};
          break;
        case Status::kH:
          d.case_tag = "two-edge-2";
          d.families = {family("M(G&H)", 3, {{1, 2}, {2, 3}}, {"s13 = s12*s23"},
                               "|s12| < 1, |s23| < 1",
                               [](Eigen::MatrixXd& a, const Params& p) { put(a, 1, 3, p[0] * p[1]); },
                               always())};
          break;
        case Status::kO:
          d.case_tag = "two-edge-3";
          d.families = {segment(3, 1, 2), segment(3, 2, 3)};
          break;
      }
      break;
    }
    case 3: {
      int leaves = 0, hub = 0;
      for (int v = 0; v < d.n; ++v) {
        const int deg = cardinality(common.neighbors(v));
        leaves += deg == 1 ? 1 : 0;
        hub += deg == 3 ? 1 : 0;
      }
      if (leaves == 0) {
        d.case_tag = "triangle";
        VertexSet touched = 0;
        for (const Edge& e : edges) touched |= singleton(e.i) | singleton(e.j);
        d.normalization.support = members(touched);
        d.families = {family("PD_{123}", 3, {{1, 2}, {1, 3}, {2, 3}}, {}, "positive definite",
                             nullptr, nullptr)};
      } else if (hub == 1) {
        classify_star(g, h, common, d);
      } else {
        classify_path(g, h, common, d);
      }
      break;
    }
  }
  finish(d);
  return d;
}

SymMatrix<double> sample_from_family(const ModelDescription& desc, std::size_t family,
                                     const std::vector<double>& params) {
  if (family >= desc.families.size()) throw ArgumentError("family index out of range");
  const Family& f = desc.families[family];
  if (!f.admissible(params)) {
    throw ArgumentError("parameters outside the domain " + f.domain + " of family " + f.name);
  }
  const Eigen::MatrixXd local = f.local(params);
  SymMatrix<double> s = SymMatrix<double>::identity(desc.n);
  const std::vector<int>& support = desc.normalization.support;
  for (std::size_t p = 0; p < support.size(); ++p)
    for (std::size_t q = p + 1; q < support.size(); ++q) s.set(support[p], support[q], local(p, q));
  if (desc.normalization.swapped) s = to_correlation(inverse(s)).r;
  return s;
}

std::vector<double> draw_parameters(const ModelDescription& desc, std::size_t family,
                                    std::mt19937_64& rng) {
  if (family >= desc.families.size()) throw ArgumentError("family index out of range");
  const Family& f = desc.families[family];
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::vector<double> p(f.params.size());
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (double& x : p) x = uniform(rng);
    if (!f.admissible(p)) continue;
    const Eigen::MatrixXd local = f.local(p);
    if (local.size() == 0) return p;
    const Eigen::MatrixXd shifted =
        local - kDrawMargin * Eigen::MatrixXd::Identity(local.rows(), local.cols());
    if (shifted.llt().info() == Eigen::Success) return p;
  }
  throw ResourceError("no admissible parameters found for family " + f.name);
}

SymMatrix<double> sample_from_family(const ModelDescription& desc, std::size_t family,
                                     std::mt19937_64& rng) {
  return sample_from_family(desc, family, draw_parameters(desc, family, rng));
}

}  // namespace dmarkov
