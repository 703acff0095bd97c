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

#ifndef DMARKOV_GEOMETRY_HPP_
#define DMARKOV_GEOMETRY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "dmarkov/graph.hpp"
#include "dmarkov/sym_matrix.hpp"

namespace dmarkov {

// A tangent direction tagged by the pair it belongs to; i == j marks a
// diagonal generator.
struct TangentGenerator {
  int i;
  int j;
  SymMatrix<double> m;
};

struct TangentBasis {
  SymMatrix<double> base;
  std::vector<TangentGenerator> generators;
};

// M^{ij} = P^i P_j + P^j P_i for ij in E_G, and M^{ii} = 2 P^i P_i, where P^i
// is the i-th column and P_j the j-th row of P. Edges first in pair_rank
// order, then the diagonal. Throws DomainError unless P is positive definite.
TangentBasis tangent_basis_concentration(const SymMatrix<double>& p, const Graph& g);

// E^{ij} = e_i e_j^T + e_j e_i^T for ij in E_H, and E^{ii} = e_i e_i^T.
TangentBasis tangent_basis_covariance(const SymMatrix<double>& p, const Graph& h);

// Coordinates of a symmetric matrix: the off-diagonal entries in pair_rank
// order, then the diagonal. Correlation mode keeps only the off-diagonals.
Eigen::VectorXd vectorize(const SymMatrix<double>& s, bool correlation_mode = false);

// Column index of sigma_st (s <= t) in the layout of vectorize.
int coordinate_index(int s, int t, int n);

// True iff T_P M(G) + T_P M(H)^{-1} is the whole space of symmetric
// matrices. Throws DomainError if P is not in M(G,H) up to residual_tol.
bool is_transverse_at(const SymMatrix<double>& p, const Graph& g, const Graph& h,
                      double residual_tol = kDefaultTol, double rank_tol = kDefaultRankTol);

// Gradients of g_kl = det(S_{N\k,N\l}) for kl in E_G^c, followed by gradients
// of f_ij = s_ij for ij in E_H^c, as rows; columns follow vectorize.
struct PseudoJacobian {
  Eigen::MatrixXd matrix;
  std::vector<Edge> g_rows;
  std::vector<Edge> h_rows;
  bool correlation_mode = false;
};

PseudoJacobian stacked_jacobian(const SymMatrix<double>& s, const Graph& g, const Graph& h,
                                bool correlation_mode);

// Adjugate of a square matrix, computed from its singular value
// decomposition so that singular inputs are handled.
Eigen::MatrixXd adjugate(const Eigen::MatrixXd& a);

struct DimensionBound {
  int model;        // |E_G & E_H| + n
  int correlation;  // |E_G & E_H|
};

DimensionBound dimension_bound(const Graph& g, const Graph& h);

struct Block {
  std::vector<int> vertices;  // ascending
  Graph g;                    // induced on vertices, relabeled 0..|block|-1
  Graph h;
};

// Blocks are the connected components of G & H, ordered by least vertex.
struct DecompositionResult {
  std::vector<Block> blocks;
};

DecompositionResult decompose(const Graph& g, const Graph& h);

enum class CertificateKind {
  kUniquePath,
  kUniquePathSwapped,
  kHub,
  kHubSwapped,
  kSmallIntersection,
  kUnknown,
};

std::string_view certificate_name(CertificateKind kind);

struct ConnectednessCertificate {
  CertificateKind kind = CertificateKind::kUnknown;
  int hub = -1;                // hub vertex for kHub and kHubSwapped
  int intersection_size = 0;   // |E_G & E_H|
};

// Least i such that every H-path joining the ends of a G-non-edge contains i.
std::optional<int> hub_vertex(const Graph& g, const Graph& h);

// True iff every G-non-edge is joined by at most one simple path in H.
bool unique_path_hypothesis(const Graph& g, const Graph& h);

// The first certificate that applies, in the order of CertificateKind.
// kUnknown means that no certificate was found.
ConnectednessCertificate connectedness_certificate(const Graph& g, const Graph& h);

// Re-checks a certificate from the graphs alone.
bool verify_certificate(const Graph& g, const Graph& h, const ConnectednessCertificate& cert);

// S o W where W has entries eps in row and column i, 1 elsewhere (including
// w_ii). Throws DomainError for non-PD S, ArgumentError for eps outside
// [0, 1].
SymMatrix<double> hadamard_shrink(const SymMatrix<double>& s, int i, double eps);

struct ModelPointOptions {
  double residual_tol = 1e-10;
  int max_iter = 5000;
  int restarts = 20;
};

struct ModelPointResult {
  bool converged = false;
  SymMatrix<double> point;  // best point found
  double residual = 0.0;    // max norm of the membership residual at point
  int restart = -1;         // restart that produced point
  int iterations = 0;
};

// Searches for a correlation matrix in M(G,H). Entries off E_H are fixed at
// zero; the entries on E_H are fitted to make (R^{-1})_kl vanish for kl in
// E_G^c with damped Gauss-Newton steps that never leave the PD cone. Restart
// r draws its start from a generator seeded with seed + r. The first restart
// that converges is returned, otherwise the best point with
// converged == false.
ModelPointResult find_model_point(const Graph& g, const Graph& h, std::uint64_t seed,
                                  const ModelPointOptions& opts = {});

// Dimension of the kernel of stacked_jacobian at S. Throws DomainError if S
// is not in M(G,H) up to residual_tol.
int local_tangent_dimension(const SymMatrix<double>& s, const Graph& g, const Graph& h,
                            bool correlation_mode, double residual_tol = kDefaultTol,
                            double rank_tol = kDefaultRankTol);

}  // namespace dmarkov

#endif  // DMARKOV_GEOMETRY_HPP_
