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

#include "dmarkov/ideal.hpp"

#include <algorithm>
#include <cmath>

#include "dmarkov/errors.hpp"

namespace dmarkov {

namespace {

void check_symbolic_size(const Graph& h) {
  if (h.size() > kMaxSymbolicVertices) {
    throw SizeError("symbolic computation needs n <= 7, got n = " + std::to_string(h.size()));
  }
}

void check_pair(const Graph& h, int k, int l) {
  if (k == l || k < 0 || l < 0 || k >= h.size() || l >= h.size()) {
    throw ArgumentError("need two distinct valid vertices");
  }
}

bool monomial_less(const MonomialIdeal::Monomial& a, const MonomialIdeal::Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool divides(const MonomialIdeal::Monomial& a, const MonomialIdeal::Monomial& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<PathTerm> path_expansion(const Graph& h, int k, int l, std::size_t cap) {
  check_pair(h, k, l);
  std::vector<PathTerm> out;
  for (auto& path : all_paths(h, k, l, cap)) {
    PathTerm term{path, path.size() % 2 == 1 ? 1 : -1, {}};
    for (std::size_t p = 0; p + 1 < path.size(); ++p) {
      term.monomial.push_back({std::min(path[p], path[p + 1]), std::max(path[p], path[p + 1])});
    }
    std::sort(term.monomial.begin(), term.monomial.end());
    out.push_back(std::move(term));
  }
  return out;
}

PolynomialMatrix symbolic_matrix(const Graph& h) {
  const int n = h.size();
  PolynomialMatrix a(n, std::vector<SparsePolynomial>(n, SparsePolynomial(n)));
  for (int i = 0; i < n; ++i) {
    a[i][i] = SparsePolynomial::constant(n, 1);
    for (int j = 0; j < n; ++j) {
      if (i != j && h.has_edge(i, j)) a[i][j] = SparsePolynomial::variable(n, i, j);
    }
  }
  return a;
}

namespace {

SparsePolynomial symbolic_minor(const PolynomialMatrix& full, const std::vector<int>& rows,
                                const std::vector<int>& cols, int n) {
  PolynomialMatrix a;
  for (int r : rows) {
    std::vector<SparsePolynomial> line;
    for (int c : cols) line.push_back(full[r][c]);
    a.push_back(std::move(line));
  }
  return polynomial_determinant(a, n);
}

}  // namespace

SparsePolynomial symbolic_apm(const Graph& h, int k, int l) {
  check_symbolic_size(h);
  check_pair(h, k, l);
  const int n = h.size();
  return symbolic_minor(symbolic_matrix(h), members(full_set(n) & ~singleton(k)),
                        members(full_set(n) & ~singleton(l)), n);
}

SparsePolynomial symbolic_principal_minor(const Graph& h, VertexSet v) {
  check_symbolic_size(h);
  const std::vector<int> idx = members(v);
  return symbolic_minor(symbolic_matrix(h), idx, idx, h.size());
}

SparsePolynomial symbolic_path_sum(const Graph& h, int k, int l) {
  check_symbolic_size(h);
  const int n = h.size();
  SparsePolynomial sum(n);
  for (const PathTerm& term : path_expansion(h, k, l)) {
    SparsePolynomial monomial = SparsePolynomial::constant(n, term.sign);
    VertexSet used = 0;
    for (int v : term.path) used |= singleton(v);
    for (const Edge& e : term.monomial) monomial = monomial * SparsePolynomial::variable(n, e.i, e.j);
    sum += monomial * symbolic_principal_minor(h, full_set(n) & ~used);
  }
  return sum;
}

PathIdentityCheck check_path_identity(const SymMatrix<double>& s, const Graph& h, int k, int l) {
  check_pair(h, k, l);
  const int n = s.size();
  if (h.size() != n) throw ArgumentError("graph and matrix sizes differ");
  const double sign = (k + l) % 2 == 0 ? 1.0 : -1.0;
  PathIdentityCheck out{};
  out.lhs = sign * determinant(submatrix(s, members(full_set(n) & ~singleton(k)),
                                         members(full_set(n) & ~singleton(l))));
  double magnitude = 0.0;
  for (const PathTerm& term : path_expansion(h, k, l)) {
    VertexSet used = 0;
    for (int v : term.path) used |= singleton(v);
    double value = term.sign * principal_minor(s, full_set(n) & ~used);
    for (const Edge& e : term.monomial) value *= s(e.i, e.j);
    out.rhs += value;
    magnitude += std::abs(value);
  }
  const double denom = std::max(std::abs(out.lhs), magnitude);
  out.rel_error = denom == 0.0 ? 0.0 : std::abs(out.lhs - out.rhs) / denom;
  return out;
}

void MonomialIdeal::add(Monomial m) {
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  if (contains(m)) return;
  std::erase_if(generators_, [&](const Monomial& g) { return divides(m, g); });
  generators_.insert(std::upper_bound(generators_.begin(), generators_.end(), m, monomial_less),
                     std::move(m));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

std::vector<MonomialIdeal::Monomial> MonomialIdeal::minimal_primes() const {
  Monomial vars;
  for (const Monomial& g : generators_) vars.insert(vars.end(), g.begin(), g.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() > 24) throw SizeError("too many variables for minimal prime enumeration");

  // Each generator as a bitmask over vars.
  std::vector<std::uint32_t> masks;
  for (const Monomial& g : generators_) {
    std::uint32_t mask = 0;
    for (const Edge& e : g) {
      mask |= 1u << (std::lower_bound(vars.begin(), vars.end(), e) - vars.begin());
    }
    masks.push_back(mask);
  }
  auto covers = [&](std::uint32_t set) {
    return std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & set) != 0; });
  };
  std::vector<Monomial> out;
  const std::uint32_t limit = 1u << vars.size();
  for (std::uint32_t set = 0; set < limit; ++set) {
    if (!covers(set)) continue;
    bool minimal = true;
    for (std::uint32_t bits = set; bits != 0 && minimal; bits &= bits - 1) {
      if (covers(set & ~(bits & -bits))) minimal = false;
    }
    if (!minimal) continue;
    Monomial prime;
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (set & (1u << v)) prime.push_back(vars[v]);
    out.push_back(std::move(prime));
  }
  std::sort(out.begin(), out.end(), monomial_less);
  return out;
}

std::string monomial_string(const MonomialIdeal::Monomial& m) {
  std::string out;
  for (const Edge& e : m) {
    if (!out.empty()) out += "*";
    out += "s" + std::to_string(e.i + 1) + std::to_string(e.j + 1);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::string> MonomialIdeal::to_strings() const {
  std::vector<std::string> out;
  for (const Monomial& g : generators_) out.push_back(monomial_string(g));
  return out;
}

namespace {

void require_unique_paths(const Graph& g, const Graph& h) {
  if (!unique_path_hypothesis(g, h)) {
    throw UnsupportedError(
        "some non-edge of G is joined by two or more paths in H; the CI ideal is not "
        "known to be monomial");
  }
}

}  // namespace

MonomialIdeal sci_monomial_generators(const Graph& g, const Graph& h) {
  require_unique_paths(g, h);
  MonomialIdeal ideal(g.size());
  for (const Edge& e : h.non_edges()) ideal.add({e});
  for (const Edge& e : g.non_edges()) {
    for (const PathTerm& term : path_expansion(h, e.i, e.j)) ideal.add(term.monomial);
  }
  return ideal;
}

std::optional<Graph> inverse_graphical_recognition(const Graph& g, const Graph& h) {
  require_unique_paths(g, h);
  for (const Edge& e : g.non_edges()) {
    for (const PathTerm& term : path_expansion(h, e.i, e.j)) {
      const bool uses_non_edge = std::any_of(term.monomial.begin(), term.monomial.end(),
                                             [&](const Edge& f) { return !g.has_edge(f.i, f.j); });
      if (!uses_non_edge) return std::nullopt;
    }
  }
  Graph out = g;
  for (const Edge& e : g.non_edges()) {
    if (!h.has_edge(e.i, e.j)) out.add_edge(e.i, e.j);
  }
  return out;
}

}  // namespace dmarkov
