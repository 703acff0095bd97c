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

// Helpers shared by the test binaries.

#ifndef DMARKOV_TESTS_TEST_UTIL_HPP_
#define DMARKOV_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dmarkov/graph.hpp"
#include "dmarkov/relation.hpp"
#include "dmarkov/sym_matrix.hpp"

namespace dmarkov::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline Graph random_forest(int n, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(0.7);
  for (int v = 1; v < n; ++v) {
    if (!coin(rng)) continue;
    std::uniform_int_distribution<int> parent(0, v - 1);
    g.add_edge(parent(rng), v);
  }
  return g;
}

inline Relation random_relation(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Relation r(n);
  for (std::size_t i = 0; i < r.capacity(); ++i)
    if (coin(rng)) r.set(i);
  return r;
}

// A A^T + shift * I with a Gaussian A.
inline SymMatrix<double> random_pd(int n, std::mt19937_64& rng, double shift = 0.5) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = normal(rng);
  Eigen::MatrixXd s = a * a.transpose() + shift * Eigen::MatrixXd::Identity(n, n);
  return SymMatrix<double>::symmetrize(s);
}

// Random PD matrix with exact zeros: a concentration matrix supported on g,
// made diagonally dominant, then inverted. Its relation contains <g>.
inline SymMatrix<double> random_graphical(const Graph& g, std::mt19937_64& rng) {
  const int n = g.size();
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) k(e.i, e.j) = k(e.j, e.i) = unif(rng);
  for (int i = 0; i < n; ++i) k(i, i) = k.row(i).cwiseAbs().sum() + 0.5;
  return SymMatrix<double>::symmetrize(k);
}

// Laplace expansion along the first row; independent of any library routine.
inline double laplace_det(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return 1.0;
  if (n == 1) return a(0, 0);
  double sum = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (a(0, c) == 0.0) continue;
    Eigen::MatrixXd sub(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index cc = 0, t = 0; cc < n; ++cc)
        if (cc != c) sub(r - 1, t++) = a(r, cc);
    sum += ((c % 2) ? -1.0 : 1.0) * a(0, c) * laplace_det(sub);
  }
  return sum;
}

// Relation of a matrix by brute force over all minors with a Laplace oracle.
inline Relation brute_relation(const SymMatrix<double>& s, double tol) {
  const int n = s.size();
  Relation r(n);
  for (std::size_t idx = 0; idx < r.capacity(); ++idx) {
    const Statement st = statement_at(idx, n);
    std::vector<int> rows{st.i};
    std::vector<int> cols{st.j};
    for (int v : members(st.k)) {
      rows.push_back(v);
      cols.push_back(v);
    }
    Eigen::MatrixXd sub(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) sub(a, b) = s(rows[a], cols[b]);
    if (std::abs(laplace_det(sub)) <= tol) r.set(idx);
  }
  return r;
}

// The 6 x 6 principally regular matrix with x14 = sqrt(981/1210).
inline SymMatrix<double> principally_regular_matrix() {
  const double x14 = std::sqrt(981.0 / 1210.0);
  const double x15 = 11.0 * x14, x34 = -x14, x36 = -11.0 * x14;
  Eigen::MatrixXd a(6, 6);
  a << 10, 1, 1, x14, x15, 0,
       1, 10, 1, 0, 0, 0,
       1, 1, 10, x34, 0, x36,
       x14, 0, x34, 10, 1, 1,
       x15, 0, 0, 1, 10, 1,
       0, 0, x36, 1, 1, 10;
  return SymMatrix<double>::from_dense(a);
}

inline Graph principally_regular_g() {
  return Graph::parse(6, "1-2 1-3 1-6 2-3 2-4 2-5 2-6 3-5 4-5 4-6 5-6");
}

inline Graph principally_regular_h() {
  return Graph::parse(6, "1-2 1-3 1-4 1-5 2-3 3-4 3-6 4-5 4-6 5-6");
}

}  // namespace dmarkov::testing

#endif  // DMARKOV_TESTS_TEST_UTIL_HPP_
