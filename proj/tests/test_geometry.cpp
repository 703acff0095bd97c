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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dmarkov/errors.hpp"
#include "dmarkov/geometry.hpp"
#include "test_util.hpp"

namespace dmarkov {
namespace {

using testing::random_graph;
using testing::random_pd;

std::vector<Graph> graphs_on(int n) {
  std::vector<Graph> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << pair_count(n)); ++c)
    out.push_back(Graph::from_edge_code(n, c));
  return out;
}

Graph complete_minus(int n, int i, int j) {
  Graph g = Graph::complete(n);
  g.remove_edge(i, j);
  return g;
}

int span_rank(const TangentBasis& basis) {
  const int n = basis.base.size();
  Eigen::MatrixXd m(pair_count(n) + n, basis.generators.size());
  for (std::size_t c = 0; c < basis.generators.size(); ++c) m.col(c) = vectorize(basis.generators[c].m);
  return numerical_rank(m);
}

TEST(VectorizeTest, Layout) {
  SymMatrix<double> s(3);
  s.set(0, 1, 1);
  s.set(0, 2, 2);
  s.set(1, 2, 3);
  s.set(0, 0, 4);
  s.set(1, 1, 5);
  s.set(2, 2, 6);
  Eigen::VectorXd expected(6);
  expected << 1, 2, 3, 4, 5, 6;
  EXPECT_EQ(vectorize(s), expected);
  EXPECT_EQ(vectorize(s, true), expected.head(3));
  EXPECT_EQ(coordinate_index(1, 2, 3), 2);
  EXPECT_EQ(coordinate_index(2, 2, 3), 5);
}

TEST(TangentTest, IdentityGenerators) {
  const Graph g = Graph::parse(3, "1-2");
  const TangentBasis basis = tangent_basis_concentration(SymMatrix<double>::identity(3), g);
  ASSERT_EQ(basis.generators.size(), 4u);
  SymMatrix<double> e12(3);
  e12.set(0, 1, 2.0);  // E_12 + E_21 in packed form counts the pair once
  EXPECT_EQ(basis.generators[0].m(0, 1), 1.0);
  EXPECT_EQ(basis.generators[0].m(0, 0), 0.0);
  EXPECT_EQ(basis.generators[1].m(0, 0), 2.0);
  EXPECT_EQ(basis.generators[1].m(1, 1), 0.0);
}

// Central differences of t -> (K + t E)^{-1} against the generators.
TEST(TangentTest, FiniteDifferences) {
  std::mt19937_64 rng(2);
  const double t = 1e-5;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 3;
    const Graph g = random_graph(n, 0.6, rng);
    const auto p = random_pd(n, rng);
    const TangentBasis basis = tangent_basis_concentration(p, g);
    const Eigen::MatrixXd k = inverse(p).dense();
    for (const TangentGenerator& gen : basis.generators) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      e(gen.i, gen.j) = e(gen.j, gen.i) = 1.0;
      const Eigen::MatrixXd plus = (k + t * e).inverse();
      const Eigen::MatrixXd minus = (k - t * e).inverse();
      const Eigen::MatrixXd derivative = (plus - minus) / (2 * t);
      const double factor = gen.i == gen.j ? 2.0 : 1.0;
      EXPECT_LE((derivative * factor + gen.m.dense()).cwiseAbs().maxCoeff(),
                1e-6 * (1 + gen.m.dense().cwiseAbs().maxCoeff()));
    }
  }
}

TEST(TangentTest, SpanDimension) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 4;
    const Graph g = random_graph(n, 0.5, rng);
    const auto p = random_pd(n, rng);
    EXPECT_EQ(span_rank(tangent_basis_concentration(p, g)), g.edge_count() + n);
    EXPECT_EQ(span_rank(tangent_basis_covariance(p, g)), g.edge_count() + n);
  }
}

TEST(TransversalityTest, IdentityIffUnionComplete) {
  const auto id3 = SymMatrix<double>::identity(3);
  const auto id4 = SymMatrix<double>::identity(4);
  for (int n : {3, 4}) {
    const auto graphs = graphs_on(n);
    for (const Graph& g : graphs)
      for (const Graph& h : graphs)
        ASSERT_EQ(is_transverse_at(n == 3 ? id3 : id4, g, h),
                  edge_union(g, h) == Graph::complete(n));
  }
}

TEST(TransversalityTest, Examples) {
  const Graph g = complete_minus(4, 0, 1);
  EXPECT_FALSE(is_transverse_at(SymMatrix<double>::identity(4), g, g));
  std::mt19937_64 rng(4);
  const auto p = random_pd(5, rng);
  EXPECT_TRUE(is_transverse_at(p, Graph::complete(5), Graph::complete(5)));
  EXPECT_THROW(is_transverse_at(p, Graph::empty(5), Graph::empty(5)), DomainError);
}

TEST(JacobianTest, RankAtIdentity) {
  for (int n = 2; n <= 4; ++n) {
    const auto id = SymMatrix<double>::identity(n);
    const auto graphs = graphs_on(n);
    for (const Graph& g : graphs) {
      for (const Graph& h : graphs) {
        const PseudoJacobian j = stacked_jacobian(id, g, h, true);
        ASSERT_EQ(j.matrix.cols(), pair_count(n));
        ASSERT_EQ(numerical_rank(j.matrix), pair_count(n) - edge_intersection(g, h).edge_count());
      }
    }
  }
}

TEST(JacobianTest, CompleteGraphsHaveNoRows) {
  const PseudoJacobian j = stacked_jacobian(SymMatrix<double>::identity(4), Graph::complete(4),
                                            Graph::complete(4), false);
  EXPECT_EQ(j.matrix.rows(), 0);
  EXPECT_EQ(j.matrix.cols(), 10);
  EXPECT_TRUE(j.g_rows.empty());
  EXPECT_TRUE(j.h_rows.empty());
}

// Rows are gradients: compare with central differences of the residual.
TEST(JacobianTest, MatchesFiniteDifferences) {
  std::mt19937_64 rng(6);
  const double t = 1e-6;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 3;
    const Graph g = random_graph(n, 0.5, rng);
    const Graph h = random_graph(n, 0.5, rng);
    const auto s = random_pd(n, rng);
    const PseudoJacobian j = stacked_jacobian(s, g, h, false);
    for (int c = 0; c < j.matrix.cols(); ++c) {
      Eigen::VectorXd dir = Eigen::VectorXd::Zero(j.matrix.cols());
      dir(c) = 1.0;
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
          if (coordinate_index(a, b, n) == c) e(a, b) = e(b, a) = 1.0;
      const Eigen::MatrixXd sp = s.dense() + t * e, sm = s.dense() - t * e;
      for (std::size_t r = 0; r < j.g_rows.size(); ++r) {
        const Edge ed = j.g_rows[r];
        auto apm = [&](const Eigen::MatrixXd& m) {
          std::vector<int> rows, cols;
          for (int v = 0; v < n; ++v) {
            if (v != ed.i) rows.push_back(v);
            if (v != ed.j) cols.push_back(v);
          }
          Eigen::MatrixXd sub(n - 1, n - 1);
          for (int a = 0; a < n - 1; ++a)
            for (int b = 0; b < n - 1; ++b) sub(a, b) = m(rows[a], cols[b]);
          return sub.determinant();
        };
        const double fd = (apm(sp) - apm(sm)) / (2 * t);
        EXPECT_NEAR(std::abs(j.matrix(r, c)), std::abs(fd), 1e-5 * (1 + std::abs(fd)));
      }
    }
  }
}

TEST(AdjugateTest, MatchesInverse) {
  std::mt19937_64 rng(7);
  const auto s = random_pd(4, rng).dense();
  EXPECT_LE((adjugate(s) - s.determinant() * s.inverse()).cwiseAbs().maxCoeff(), 1e-9);
  Eigen::MatrixXd singular(3, 3);
  singular << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  EXPECT_LE((singular * adjugate(singular)).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_GT(adjugate(singular).cwiseAbs().maxCoeff(), 0.1);
}

TEST(DimensionBoundTest, Examples) {
  const Graph star = Graph::parse(4, "1-2 1-3 1-4");
  const Graph path = Graph::parse(4, "1-2 2-3 3-4");
  EXPECT_EQ(dimension_bound(star, path).model, 5);
  EXPECT_EQ(dimension_bound(star, path).correlation, 1);
  EXPECT_EQ(dimension_bound(Graph::complete(5), Graph::complete(5)).model, 15);
  EXPECT_EQ(dimension_bound(Graph::complete(5), Graph::complete(5)).correlation, 10);
  EXPECT_EQ(dimension_bound(Graph::parse(4, "1-2 3-4"), Graph::parse(4, "1-3 2-4")).model, 4);
  EXPECT_EQ(dimension_bound(Graph::parse(4, "1-2 3-4"), Graph::parse(4, "1-3 2-4")).correlation, 0);
}

TEST(DecomposeTest, Examples) {
  const DecompositionResult d =
      decompose(Graph::parse(4, "1-2 1-3 1-4"), Graph::parse(4, "1-2 2-3 3-4"));
  ASSERT_EQ(d.blocks.size(), 3u);
  EXPECT_EQ(d.blocks[0].vertices, (std::vector<int>{0, 1}));
  EXPECT_EQ(d.blocks[1].vertices, (std::vector<int>{2}));
  EXPECT_EQ(d.blocks[2].vertices, (std::vector<int>{3}));
  EXPECT_EQ(d.blocks[0].g, Graph::complete(2));
  EXPECT_EQ(decompose(Graph::parse(3, "1-2"), Graph::parse(3, "2-3")).blocks.size(), 3u);
  const Graph c = Graph::parse(5, "1-2 2-3 3-4 4-5");
  EXPECT_EQ(decompose(c, c).blocks.size(), 1u);
}

TEST(CertificateTest, UniquePath) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 4;
    const Graph g = random_graph(n, 0.5, rng);
    const Graph h = testing::random_forest(n, rng);
    EXPECT_TRUE(unique_path_hypothesis(g, h));
    EXPECT_EQ(connectedness_certificate(g, h).kind, CertificateKind::kUniquePath);
  }
  const Graph cycle = Graph::parse(4, "1-2 2-3 3-4 1-4");
  EXPECT_FALSE(unique_path_hypothesis(Graph::parse(4, "1-2 2-3 3-4 1-4 2-4"), cycle));
  EXPECT_TRUE(unique_path_hypothesis(Graph::complete(4), Graph::complete(4)));
}

TEST(CertificateTest, Hub) {
  // Every leaf-to-leaf path in a star passes its center.
  const Graph star = Graph::parse(5, "1-3 2-3 3-4 3-5");
  EXPECT_EQ(hub_vertex(Graph::empty(5), star), 2);
  const Graph bowtie = Graph::parse(5, "1-2 1-3 2-3 1-4 1-5 4-5");
  const ConnectednessCertificate c = connectedness_certificate(bowtie, bowtie);
  EXPECT_EQ(c.kind, CertificateKind::kHub);
  EXPECT_EQ(c.hub, 0);
  EXPECT_TRUE(verify_certificate(bowtie, bowtie, c));
}

TEST(CertificateTest, SmallIntersectionAndUnknown) {
  const Graph g = Graph::parse(4, "1-3 1-4 2-3 2-4");
  const Graph h = Graph::parse(4, "1-2 1-4 2-3 3-4");
  const ConnectednessCertificate c = connectedness_certificate(g, h);
  EXPECT_EQ(c.kind, CertificateKind::kSmallIntersection);
  EXPECT_EQ(c.intersection_size, 2);
  Graph k5 = complete_minus(5, 0, 1);
  EXPECT_EQ(connectedness_certificate(k5, k5).kind, CertificateKind::kHub);  // vacuous
  k5.remove_edge(2, 3);
  EXPECT_EQ(connectedness_certificate(k5, k5).kind, CertificateKind::kUnknown);
}

TEST(CertificateTest, AlwaysVerifies) {
  const auto graphs = graphs_on(4);
  for (const Graph& g : graphs) {
    for (const Graph& h : graphs) {
      const ConnectednessCertificate c = connectedness_certificate(g, h);
      ASSERT_TRUE(verify_certificate(g, h, c));
      ASSERT_EQ(c.intersection_size, edge_intersection(g, h).edge_count());
    }
  }
  ConnectednessCertificate bogus{CertificateKind::kUniquePath, -1, 0};
  const Graph cycle = Graph::parse(4, "1-2 2-3 3-4 1-4");
  EXPECT_FALSE(verify_certificate(Graph::parse(4, "1-2 2-3 3-4 1-4 2-4"), cycle, bogus));
}

TEST(ShrinkTest, EndpointsAndPositivity) {
  std::mt19937_64 rng(9);
  const auto s = random_pd(4, rng);
  EXPECT_EQ(hadamard_shrink(s, 1, 1.0), s);
  const auto z = hadamard_shrink(s, 1, 0.0);
  for (int j = 0; j < 4; ++j) EXPECT_EQ(z(1, j), j == 1 ? s(1, 1) : 0.0);
  EXPECT_THROW(hadamard_shrink(s, 1, 1.5), ArgumentError);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const auto p = random_pd(n, rng, 0.01);
    for (double eps = 0.0; eps <= 1.0; eps += 0.125) EXPECT_TRUE(is_pd(hadamard_shrink(p, trial % n, eps)));
  }
}

TEST(ModelPointTest, TrivialModel) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 4;
    const Graph g = random_graph(n, 0.5, rng);
    const Graph h = g.complement();
    const ModelPointResult r = find_model_point(g, h, trial);
    ASSERT_TRUE(r.converged);
    EXPECT_LE((r.point.dense() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-6);
  }
}

TEST(ModelPointTest, StarAndPath) {
  const Graph star = Graph::parse(4, "1-2 1-3 1-4");
  const Graph path = Graph::parse(4, "1-2 2-3 3-4");
  const ModelPointResult r = find_model_point(star, path, 0);
  ASSERT_TRUE(r.converged);
  EXPECT_LE(r.residual, 1e-10);
  EXPECT_TRUE(is_pd(r.point));
  for (auto [i, j] : {std::pair{0, 2}, {0, 3}, {1, 3}, {1, 2}, {2, 3}}) EXPECT_LE(std::abs(r.point(i, j)), 1e-6);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(r.point(i, i), 1.0);
}

TEST(ModelPointTest, CompleteGraphsAndDeterminism) {
  const ModelPointResult r = find_model_point(Graph::complete(4), Graph::complete(4), 5);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_EQ(r.iterations, 0);
  const Graph g = Graph::parse(5, "1-2 2-3 3-4 4-5 1-5");
  const Graph h = Graph::parse(5, "1-2 1-3 2-4 3-5");
  EXPECT_EQ(find_model_point(g, h, 3).point, find_model_point(g, h, 3).point);
}

TEST(ModelPointTest, ConvergedPointsAreBlockDiagonal) {
  std::mt19937_64 rng(11);
  int converged = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + trial % 3;
    const Graph g = random_graph(n, 0.5, rng);
    const Graph h = random_graph(n, 0.5, rng);
    const ModelPointResult r = find_model_point(g, h, trial);
    if (!r.converged) continue;
    ++converged;
    std::vector<int> block_of(n);
    const auto blocks = decompose(g, h).blocks;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int v : blocks[b].vertices) block_of[v] = static_cast<int>(b);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (block_of[i] != block_of[j]) EXPECT_LE(std::abs(r.point(i, j)), 1e-6);
    EXPECT_GE(numerical_rank(stacked_jacobian(r.point, g, h, true).matrix),
              pair_count(n) - edge_intersection(g, h).edge_count());
  }
  EXPECT_GE(converged, 20);
}

TEST(LocalDimensionTest, Examples) {
  const auto id4 = SymMatrix<double>::identity(4);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(4, 0.5, rng);
    Graph h = g.complement();
    for (const Edge& e : g.edges())
      if (trial % 2) h.add_edge(e.i, e.j);
    EXPECT_EQ(local_tangent_dimension(id4, g, h, true), edge_intersection(g, h).edge_count());
  }
  const Graph v = Graph::parse(4, "1-3 2-3");
  EXPECT_EQ(local_tangent_dimension(id4, v, v, true), 2);
  EXPECT_EQ(local_tangent_dimension(id4, Graph::complete(4), Graph::complete(4), true), 6);
  SymMatrix<double> off = id4;
  off.set(0, 1, 0.5);
  EXPECT_THROW(local_tangent_dimension(off, v, v, true), DomainError);
}

}  // namespace
}  // namespace dmarkov
