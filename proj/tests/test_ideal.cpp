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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dmarkov/errors.hpp"
#include "dmarkov/geometry.hpp"
#include "dmarkov/ideal.hpp"
#include "dmarkov/polynomial.hpp"
#include "test_util.hpp"

namespace dmarkov {
namespace {

using testing::laplace_det;
using testing::random_graph;

// Symmetric matrix supported on h with a random diagonal.
SymMatrix<double> random_pattern(const Graph& h, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  SymMatrix<double> s(h.size());
  for (int i = 0; i < h.size(); ++i) s.set(i, i, 1.0 + unif(rng));
  for (const Edge& e : h.edges()) s.set(e.i, e.j, unif(rng));
  return s;
}

Eigen::MatrixXd delete_row_col(const Eigen::MatrixXd& a, int row, int col) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd out(n - 1, n - 1);
  for (int r = 0, rr = 0; r < n; ++r) {
    if (r == row) continue;
    for (int c = 0, cc = 0; c < n; ++c) {
      if (c == col) continue;
      out(rr, cc++) = a(r, c);
    }
    ++rr;
  }
  return out;
}

std::vector<Graph> graphs_on(int n) {
  std::vector<Graph> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << pair_count(n)); ++c)
    out.push_back(Graph::from_edge_code(n, c));
  return out;
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

TEST(PolynomialTest, Arithmetic) {
  const auto a = SparsePolynomial::variable(3, 0, 1);
  const auto b = SparsePolynomial::variable(3, 1, 2);
  const auto c = SparsePolynomial::variable(3, 0, 2);
  EXPECT_EQ((a * b - c).to_string(), "s12*s23 - s13");
  EXPECT_EQ((a - a).to_string(), "0");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a * a * Rational(-2)).to_string(), "-2*s12*s12");
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a + b) * c, a * c + b * c);
  SymMatrix<double> s = SymMatrix<double>::identity(3);
  s.set(0, 1, 0.5);
  s.set(1, 2, 0.25);
  s.set(0, 2, 2.0);
  EXPECT_DOUBLE_EQ((a * b - c).evaluate(s), 0.125 - 2.0);
  EXPECT_DOUBLE_EQ(SparsePolynomial::constant(3, Rational(3, 2)).evaluate(s), 1.5);
}

TEST(PolynomialTest, DeterminantMatchesLaplace) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const Graph h = random_graph(n, 0.6, rng);
    const SparsePolynomial det = symbolic_principal_minor(h, full_set(n));
    SymMatrix<double> s = random_pattern(h, rng);
    for (int i = 0; i < n; ++i) s.set(i, i, 1.0);
    EXPECT_NEAR(det.evaluate(s), laplace_det(s.dense()), 1e-12);
  }
  EXPECT_EQ(symbolic_principal_minor(Graph::complete(3), 0).to_string(), "1");
}

TEST(PathExpansionTest, Examples) {
  const auto p3 = path_expansion(Graph::parse(3, "1-2 2-3"), 0, 2);
  ASSERT_EQ(p3.size(), 1u);
  EXPECT_EQ(p3[0].sign, 1);
  EXPECT_EQ(p3[0].path, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(p3[0].monomial, (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(path_expansion(Graph::empty(4), 0, 3).empty());
  const auto c4 = path_expansion(Graph::parse(4, "1-2 2-3 3-4 1-4"), 0, 2);
  ASSERT_EQ(c4.size(), 2u);
  EXPECT_EQ(c4[0].path, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(c4[1].path, (std::vector<int>{0, 3, 2}));
  EXPECT_EQ(c4[0].sign, 1);
  EXPECT_EQ(c4[1].sign, 1);
  const auto k2 = path_expansion(Graph::complete(2), 0, 1);
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0].sign, -1);
}

TEST(SymbolicApmTest, Examples) {
  EXPECT_EQ(symbolic_apm(Graph::parse(3, "1-2 2-3"), 0, 2).to_string(), "s12*s23");
  const SparsePolynomial k3 = symbolic_apm(Graph::complete(3), 0, 1);
  const auto s12 = SparsePolynomial::variable(3, 0, 1);
  const auto s13 = SparsePolynomial::variable(3, 0, 2);
  const auto s23 = SparsePolynomial::variable(3, 1, 2);
  EXPECT_TRUE(k3 == s12 - s13 * s23 || k3 == s13 * s23 - s12);
  EXPECT_TRUE(symbolic_apm(Graph::empty(4), 1, 3).is_zero());
  EXPECT_THROW(symbolic_apm(Graph::empty(8), 0, 1), SizeError);
}

// Symbolic identity against an independent numeric determinant.
TEST(PathIdentityTest, SymbolicExhaustiveSmall) {
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& h : graphs_on(n)) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          if (k == l) continue;
          const SparsePolynomial apm = symbolic_apm(h, k, l);
          const SparsePolynomial sum = symbolic_path_sum(h, k, l);
          ASSERT_EQ((k + l) % 2 == 0 ? apm : apm * Rational(-1), sum);
          SymMatrix<double> s = random_pattern(h, rng);
          for (int i = 0; i < n; ++i) s.set(i, i, 1.0);
          ASSERT_NEAR(apm.evaluate(s), laplace_det(delete_row_col(s.dense(), k, l)), 1e-12);
        }
      }
    }
  }
}

TEST(PathIdentityTest, NumericRandom) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 5;
    const Graph h = random_graph(n, 0.5, rng);
    const SymMatrix<double> s = random_pattern(h, rng);
    const int k = trial % n, l = (trial / n + 1 + k) % n;
    if (k == l) continue;
    const PathIdentityCheck c = check_path_identity(s, h, k, l);
    EXPECT_LE(c.rel_error, 1e-10);
    const double sign = (k + l) % 2 == 0 ? 1.0 : -1.0;
    EXPECT_NEAR(c.lhs, sign * laplace_det(delete_row_col(s.dense(), k, l)), 1e-10);
  }
}

TEST(MonomialIdealTest, Minimalization) {
  MonomialIdeal ideal(4);
  ideal.add({{1, 2}, {2, 3}});
  ideal.add({{1, 2}});
  ideal.add({{0, 1}});
  ideal.add({{0, 1}});
  EXPECT_EQ(ideal.to_strings(), (std::vector<std::string>{"s12", "s23"}));
  EXPECT_TRUE(ideal.contains({{1, 2}, {2, 3}}));
  EXPECT_FALSE(ideal.contains({{0, 2}}));
}

TEST(MonomialIdealTest, MinimalPrimes) {
  MonomialIdeal ideal(4);
  ideal.add({{0, 1}, {1, 2}});
  ideal.add({{0, 1}, {2, 3}});
  using M = MonomialIdeal::Monomial;
  EXPECT_EQ(ideal.minimal_primes(), (std::vector<M>{{{0, 1}}, {{1, 2}, {2, 3}}}));
  EXPECT_EQ(monomial_string({{0, 1}, {2, 3}}), "s12*s34");
  EXPECT_EQ(monomial_string({}), "1");
}

TEST(SciGeneratorsTest, Examples) {
  const Graph star = Graph::parse(4, "1-2 1-3 1-4");
  const Graph path = Graph::parse(4, "1-2 2-3 3-4");
  EXPECT_EQ(as_set(sci_monomial_generators(star, path).to_strings()),
            (std::set<std::string>{"s13", "s14", "s24", "s23", "s34"}));
  // Disjoint edge sets: every variable is a generator.
  const Graph g = Graph::parse(4, "1-3 2-4");
  const auto all = sci_monomial_generators(g, path).to_strings();
  EXPECT_EQ(all.size(), 6u);
  for (const std::string& m : all) EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(as_set(sci_monomial_generators(Graph::complete(4), path).to_strings()),
            (std::set<std::string>{"s13", "s14", "s24"}));
  const Graph cycle = Graph::parse(4, "1-2 2-3 3-4 1-4");
  EXPECT_THROW(sci_monomial_generators(Graph::parse(4, "1-2 2-3 3-4 1-4 2-4"), cycle),
               UnsupportedError);
}

// Coordinate patterns from minimal primes are model points when PD.
TEST(SciGeneratorsTest, MinimalPrimePatternsAreModelPoints) {
  std::mt19937_64 rng(4);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 4;
    const Graph g = random_graph(n, 0.5, rng);
    const Graph h = testing::random_forest(n, rng);
    const MonomialIdeal ideal = sci_monomial_generators(g, h);
    std::uniform_real_distribution<double> unif(-0.4, 0.4);
    for (const MonomialIdeal::Monomial& prime : ideal.minimal_primes()) {
      SymMatrix<double> s = SymMatrix<double>::identity(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!std::binary_search(prime.begin(), prime.end(), Edge{i, j})) s.set(i, j, unif(rng));
      if (!is_pd(s)) continue;
      ++checked;
      EXPECT_LE(max_residual(s, g, h), 1e-9);
    }
  }
  EXPECT_GT(checked, 30);
}

TEST(InverseGraphicalTest, Examples) {
  // Two-edge path 1-2-3 with 13 in G only.
  const auto yes = inverse_graphical_recognition(Graph::complete(3), Graph::parse(3, "1-2 2-3"));
  EXPECT_TRUE(yes.has_value());
  const Graph p = Graph::parse(3, "1-2 2-3");
  EXPECT_FALSE(inverse_graphical_recognition(p, p).has_value());
  EXPECT_EQ(inverse_graphical_recognition(Graph::complete(4), Graph::complete(4)), Graph::complete(4));
}

}  // namespace
}  // namespace dmarkov
