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

#ifndef DMARKOV_IDEAL_HPP_
#define DMARKOV_IDEAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dmarkov/geometry.hpp"
#include "dmarkov/graph.hpp"
#include "dmarkov/polynomial.hpp"
#include "dmarkov/sym_matrix.hpp"

namespace dmarkov {

inline constexpr int kMaxSymbolicVertices = 7;

// A simple path p with sgn(p) = (-1)^{|V(p)|-1} and its edges, sorted.
struct PathTerm {
  std::vector<int> path;
  int sign;
  std::vector<Edge> monomial;
};

// One term per simple H-path from k to l, in lexicographic path order.
// Throws ResourceError if more than `cap` paths exist.
std::vector<PathTerm> path_expansion(const Graph& h, int k, int l,
                                     std::size_t cap = kDefaultPathCap);

// Generic symmetric matrix with unit diagonal, s_ij on E_H and 0 elsewhere.
PolynomialMatrix symbolic_matrix(const Graph& h);

// det(S_{N\k,N\l}) of the generic matrix, rows and columns ascending.
// Throws SizeError for n > 7.
SparsePolynomial symbolic_apm(const Graph& h, int k, int l);

// det(S_{V,V}) of the generic matrix; 1 for empty V.
SparsePolynomial symbolic_principal_minor(const Graph& h, VertexSet v);

// sum over H-paths p from k to l of sgn(p) * s_p * det(S_{N\V(p),N\V(p)}).
// Equals (-1)^{k+l} symbolic_apm(h, k, l).
SparsePolynomial symbolic_path_sum(const Graph& h, int k, int l);

struct PathIdentityCheck {
  double lhs;        // (-1)^{k+l} det(S_{N\k,N\l})
  double rhs;        // path sum
  double rel_error;  // |lhs - rhs| / max(|lhs|, sum of |path terms|), 0 if both vanish
};

PathIdentityCheck check_path_identity(const SymMatrix<double>& s, const Graph& h, int k, int l);

// Square-free monomials in the variables s_ij, each stored as its sorted edge
// list. Generators are kept minimal and sorted by degree, then
// lexicographically.
class MonomialIdeal {
 public:
  using Monomial = std::vector<Edge>;

  MonomialIdeal() = default;
  explicit MonomialIdeal(int n) : n_(n) {}

  int ground_size() const { return n_; }
  const std::vector<Monomial>& generators() const { return generators_; }

  // Adds m unless it is a multiple of a generator; drops generators that
  // become redundant.
  void add(Monomial m);

  // True iff some generator divides m.
  bool contains(const Monomial& m) const;

  // Minimal primes as sets of variables (minimal vertex covers of the
  // generators), sorted like generators.
  std::vector<Monomial> minimal_primes() const;

  // "s13", "s23*s34", ... one per generator.
  std::vector<std::string> to_strings() const;

 private:
  int n_ = 0;
  std::vector<Monomial> generators_;
};

std::string monomial_string(const MonomialIdeal::Monomial& m);

// <s_ij : ij not in H> + <s_p : p an H-path with endpoints not adjacent in
// G>, minimalized. Throws UnsupportedError unless unique_path_hypothesis(G,H).
MonomialIdeal sci_monomial_generators(const Graph& g, const Graph& h);

// If every H-path joining the ends of a G-non-edge uses a G-non-edge, returns
// G plus all pairs outside both E_G and E_H. Throws UnsupportedError unless
// unique_path_hypothesis(G,H).
std::optional<Graph> inverse_graphical_recognition(const Graph& g, const Graph& h);

}  // namespace dmarkov

#endif  // DMARKOV_IDEAL_HPP_
