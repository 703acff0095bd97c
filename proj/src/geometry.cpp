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

#include "dmarkov/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "dmarkov/errors.hpp"

namespace dmarkov {

namespace {

void check_sizes(int n, const Graph& g, const Graph& h) {
  if (g.size() != n || h.size() != n) throw ArgumentError("graph and matrix sizes differ");
}

void require_model_point(const SymMatrix<double>& s, const Graph& g, const Graph& h,
                         double residual_tol) {
  if (!is_pd(s)) throw DomainError("matrix is not positive definite");
  const double r = max_residual(s, g, h);
  if (r > residual_tol) {
    throw DomainError("matrix is not in the model, residual " + std::to_string(r));
  }
}

SymMatrix<double> outer_sym(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return SymMatrix<double>::symmetrize(a * b.transpose() + b * a.transpose());
}

std::vector<int> all_but(int n, int k) { return members(full_set(n) & ~singleton(k)); }

}  // namespace

TangentBasis tangent_basis_concentration(const SymMatrix<double>& p, const Graph& g) {
  const int n = p.size();
  if (g.size() != n) throw ArgumentError("graph and matrix sizes differ");
  if (!is_pd(p)) throw DomainError("tangent basis needs a positive definite base point");
  const Eigen::MatrixXd a = p.dense();
  TangentBasis basis{p, {}};
  for (const Edge& e : g.edges()) {
    basis.generators.push_back({e.i, e.j, outer_sym(a.col(e.i), a.col(e.j))});
  }
  for (int i = 0; i < n; ++i) basis.generators.push_back({i, i, outer_sym(a.col(i), a.col(i))});
  return basis;
}

TangentBasis tangent_basis_covariance(const SymMatrix<double>& p, const Graph& h) {
  const int n = p.size();
  if (h.size() != n) throw ArgumentError("graph and matrix sizes differ");
  TangentBasis basis{p, {}};
  for (const Edge& e : h.edges()) {
    SymMatrix<double> m(n);
    m.set(e.i, e.j, 1.0);
    basis.generators.push_back({e.i, e.j, std::move(m)});
  }
  for (int i = 0; i < n; ++i) {
    SymMatrix<double> m(n);
    m.set(i, i, 1.0);
    basis.generators.push_back({i, i, std::move(m)});
  }
  return basis;
}

int coordinate_index(int s, int t, int n) {
  if (s > t) std::swap(s, t);
  return s == t ? pair_count(n) + s : pair_rank(s, t, n);
}

Eigen::VectorXd vectorize(const SymMatrix<double>& s, bool correlation_mode) {
  const int n = s.size();
  Eigen::VectorXd v(correlation_mode ? pair_count(n) : pair_count(n) + n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) v(pair_rank(i, j, n)) = s(i, j);
    if (!correlation_mode) v(pair_count(n) + i) = s(i, i);
  }
  return v;
}

bool is_transverse_at(const SymMatrix<double>& p, const Graph& g, const Graph& h,
                      double residual_tol, double rank_tol) {
  const int n = p.size();
  check_sizes(n, g, h);
  require_model_point(p, g, h, residual_tol);
  const TangentBasis tg = tangent_basis_concentration(p, g);
  const TangentBasis th = tangent_basis_covariance(p, h);
  const int dim = pair_count(n) + n;
  Eigen::MatrixXd span(dim, tg.generators.size() + th.generators.size());
  Eigen::Index col = 0;
  for (const auto& gen : tg.generators) span.col(col++) = vectorize(gen.m);
  for (const auto& gen : th.generators) span.col(col++) = vectorize(gen.m);
  return numerical_rank(span, rank_tol) == dim;
}

Eigen::MatrixXd adjugate(const Eigen::MatrixXd& a) {
  const Eigen::Index m = a.rows();
  if (m == 0) return Eigen::MatrixXd(0, 0);
  if (m == 1) return Eigen::MatrixXd::Ones(1, 1);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  Eigen::VectorXd others(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    double prod = 1.0;
    for (Eigen::Index j = 0; j < m; ++j)
      if (j != i) prod *= sv(j);
    others(i) = prod;
  }
  const double sign = svd.matrixU().determinant() * svd.matrixV().determinant();
  return sign * svd.matrixV() * others.asDiagonal() * svd.matrixU().transpose();
}

PseudoJacobian stacked_jacobian(const SymMatrix<double>& s, const Graph& g, const Graph& h,
                                bool correlation_mode) {
  const int n = s.size();
  check_sizes(n, g, h);
  PseudoJacobian out;
  out.correlation_mode = correlation_mode;
  out.g_rows = g.non_edges();
  out.h_rows = h.non_edges();
  const int cols = correlation_mode ? pair_count(n) : pair_count(n) + n;
  out.matrix = Eigen::MatrixXd::Zero(out.g_rows.size() + out.h_rows.size(), cols);

  // Position of vertex v among the ascending members of N \ k.
  auto pos = [](int v, int k) { return v < k ? v : v - 1; };

  Eigen::Index row = 0;
  for (const Edge& e : out.g_rows) {
    const int k = e.i, l = e.j;
    const Eigen::MatrixXd a = submatrix(s, all_but(n, k), all_but(n, l));
    // d det / d a_rc = cofactor C_rc = adj(A)_cr.
    const Eigen::MatrixXd cof = adjugate(a).transpose();
    for (int p = 0; p < n; ++p) {
      for (int q = correlation_mode ? p + 1 : p; q < n; ++q) {
        double d = 0.0;
        if (p != k && q != l) d += cof(pos(p, k), pos(q, l));
        if (p != q && q != k && p != l) d += cof(pos(q, k), pos(p, l));
        out.matrix(row, coordinate_index(p, q, n)) = d;
      }
    }
    ++row;
  }
  for (const Edge& e : out.h_rows) out.matrix(row++, pair_rank(e.i, e.j, n)) = 1.0;
  return out;
}

DimensionBound dimension_bound(const Graph& g, const Graph& h) {
  const int common = edge_intersection(g, h).edge_count();
  return {common + g.size(), common};
}

DecompositionResult decompose(const Graph& g, const Graph& h) {
  DecompositionResult out;
  for (VertexSet block : component_sets(edge_intersection(g, h))) {
    out.blocks.push_back({members(block), g.induced(block), h.induced(block)});
  }
  return out;
}

std::string_view certificate_name(CertificateKind kind) {
  static constexpr std::array<std::string_view, 6> kNames = {
      "UniquePath", "UniquePathSwapped", "Hub", "HubSwapped", "SmallIntersection", "Unknown"};
  return kNames[static_cast<int>(kind)];
}

bool unique_path_hypothesis(const Graph& g, const Graph& h) {
  if (g.size() != h.size()) throw ArgumentError("graph sizes differ");
  for (const Edge& e : g.non_edges()) {
    if (count_paths(h, e.i, e.j, 2) > 1) return false;
  }
  return true;
}

namespace {

bool is_hub(const Graph& g, const Graph& h, int i) {
  for (const Edge& e : g.non_edges()) {
    if (e.i == i || e.j == i) continue;
    if (!separates(h, e.i, e.j, singleton(i))) return false;
  }
  return true;
}

}  // namespace

std::optional<int> hub_vertex(const Graph& g, const Graph& h) {
  if (g.size() != h.size()) throw ArgumentError("graph sizes differ");
  for (int i = 0; i < g.size(); ++i) {
    if (is_hub(g, h, i)) return i;
  }
  return std::nullopt;
}

ConnectednessCertificate connectedness_certificate(const Graph& g, const Graph& h) {
  ConnectednessCertificate cert;
  cert.intersection_size = edge_intersection(g, h).edge_count();
  if (unique_path_hypothesis(g, h)) {
    cert.kind = CertificateKind::kUniquePath;
  } else if (unique_path_hypothesis(h, g)) {
    cert.kind = CertificateKind::kUniquePathSwapped;
  } else if (auto hub = hub_vertex(g, h)) {
    cert.kind = CertificateKind::kHub;
    cert.hub = *hub;
  } else if (auto hub_swapped = hub_vertex(h, g)) {
    cert.kind = CertificateKind::kHubSwapped;
    cert.hub = *hub_swapped;
  } else if (cert.intersection_size <= 3) {
    cert.kind = CertificateKind::kSmallIntersection;
  }
  return cert;
}

bool verify_certificate(const Graph& g, const Graph& h, const ConnectednessCertificate& cert) {
  const bool hub_in_range = cert.hub >= 0 && cert.hub < g.size();
  switch (cert.kind) {
    case CertificateKind::kUniquePath:
      return unique_path_hypothesis(g, h);
    case CertificateKind::kUniquePathSwapped:
      return unique_path_hypothesis(h, g);
    case CertificateKind::kHub:
      return hub_in_range && is_hub(g, h, cert.hub);
    case CertificateKind::kHubSwapped:
      return hub_in_range && is_hub(h, g, cert.hub);
    case CertificateKind::kSmallIntersection:
      return edge_intersection(g, h).edge_count() <= 3;
    case CertificateKind::kUnknown:
      return true;
  }
  return false;
}

SymMatrix<double> hadamard_shrink(const SymMatrix<double>& s, int i, double eps) {
  if (i < 0 || i >= s.size()) throw ArgumentError("hadamard_shrink: vertex out of range");
  if (!(eps >= 0.0 && eps <= 1.0)) throw ArgumentError("hadamard_shrink: eps outside [0, 1]");
  if (!is_pd(s)) throw DomainError("hadamard_shrink needs a positive definite matrix");
  SymMatrix<double> out = s;
  for (int j = 0; j < s.size(); ++j) {
    if (j != i) out.set(i, j, eps * s(i, j));
  }
  return out;
}

int local_tangent_dimension(const SymMatrix<double>& s, const Graph& g, const Graph& h,
                            bool correlation_mode, double residual_tol, double rank_tol) {
  check_sizes(s.size(), g, h);
  require_model_point(s, g, h, residual_tol);
  const PseudoJacobian j = stacked_jacobian(s, g, h, correlation_mode);
  return static_cast<int>(j.matrix.cols()) - numerical_rank(j.matrix, rank_tol);
}

}  // namespace dmarkov
