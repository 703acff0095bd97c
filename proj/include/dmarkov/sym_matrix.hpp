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

#ifndef DMARKOV_SYM_MATRIX_HPP_
#define DMARKOV_SYM_MATRIX_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "dmarkov/errors.hpp"
#include "dmarkov/graph.hpp"
#include "dmarkov/rational.hpp"
#include "dmarkov/relation.hpp"

namespace dmarkov {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr double kDefaultTol = 1e-8;
inline constexpr double kDefaultPivotTol = 1e-8;
inline constexpr double kDefaultRankTol = 1e-8;

// Symmetric n x n matrix holding one copy of each entry (packed upper
// triangle, row major).
template <typename Scalar>
class SymMatrix {
 public:
  using Dense = DenseMatrix<Scalar>;

  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
      throw SizeError("matrix size " + std::to_string(n) + " outside [1, 16]");
    }
    packed_.assign(static_cast<std::size_t>(n * (n + 1) / 2), Scalar(0));
  }

  static SymMatrix identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar(1));
    return m;
  }

  // Throws ArgumentError unless `a` is square and exactly symmetric.
  template <typename Derived>
  static SymMatrix from_dense(const Eigen::MatrixBase<Derived>& a) {
    if (a.rows() != a.cols()) throw ArgumentError("matrix is not square");
    SymMatrix m(static_cast<int>(a.rows()));
    for (int i = 0; i < m.n_; ++i) {
      for (int j = i; j < m.n_; ++j) {
        if (a(i, j) != a(j, i)) throw ArgumentError("matrix is not symmetric");
        m.set(i, j, a(i, j));
      }
    }
    return m;
  }

  // (a + a^T) / 2.
  template <typename Derived>
  static SymMatrix symmetrize(const Eigen::MatrixBase<Derived>& a) {
    if (a.rows() != a.cols()) throw ArgumentError("matrix is not square");
    SymMatrix m(static_cast<int>(a.rows()));
    for (int i = 0; i < m.n_; ++i)
      for (int j = i; j < m.n_; ++j) m.set(i, j, (a(i, j) + a(j, i)) / Scalar(2));
    return m;
  }

  int size() const { return n_; }

  const Scalar& operator()(int i, int j) const { return packed_[offset(i, j)]; }
  void set(int i, int j, const Scalar& value) { packed_[offset(i, j)] = value; }

  Dense dense() const {
    Dense a(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) a(i, j) = a(j, i) = (*this)(i, j);
    return a;
  }

  template <typename Other>
  SymMatrix<Other> cast() const {
    SymMatrix<Other> m(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) m.set(i, j, static_cast<Other>((*this)(i, j)));
    return m;
  }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t offset(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i * n_ - i * (i - 1) / 2 + (j - i));
  }

  int n_ = 0;
  std::vector<Scalar> packed_;
};

using RationalSymMatrix = SymMatrix<Rational>;

// Fraction-free Gaussian elimination with row pivoting on nonzero entries.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> a = input;
  const Eigen::Index n = a.rows();
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return n == 0 ? Scalar(1) : sign * a(n - 1, n - 1);
}

// Determinant: LU with partial pivoting for floating point, Bareiss for
// exact scalars. The empty matrix has determinant 1.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() == 0) return Scalar(1);
  if constexpr (std::is_floating_point_v<Scalar>) {
    return DenseMatrix<Scalar>(a).partialPivLu().determinant();
  } else {
    return bareiss_determinant(a);
  }
}

template <typename Scalar>
DenseMatrix<Scalar> submatrix(const SymMatrix<Scalar>& s, const std::vector<int>& rows,
                              const std::vector<int>& cols) {
  DenseMatrix<Scalar> a(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) a(r, c) = s(rows[r], cols[c]);
  return a;
}

// det(S_{iK,jK}); rows i then K ascending, columns j then K ascending.
template <typename Scalar>
Scalar almost_principal_minor(const SymMatrix<Scalar>& s, int i, int j, VertexSet k) {
  const int n = s.size();
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
    throw ArgumentError("almost principal minor needs two distinct valid indices");
  }
  if ((k & (singleton(i) | singleton(j) | ~full_set(n))) != 0) {
    throw ArgumentError("conditioning set overlaps the index pair or the ground set");
  }
  std::vector<int> rows{i};
  std::vector<int> cols{j};
  for (int v : members(k)) {
    rows.push_back(v);
    cols.push_back(v);
  }
  return determinant(submatrix(s, rows, cols));
}

// det(S_{K,K}) with K ascending.
template <typename Scalar>
Scalar principal_minor(const SymMatrix<Scalar>& s, VertexSet k) {
  const std::vector<int> idx = members(k);
  return determinant(submatrix(s, idx, idx));
}

// Outcome of a definiteness test. failing_index is the 0-based index of the
// first pivot (equivalently, leading minor of order failing_index + 1) that
// is not positive, or -1.
struct PdDiagnostic {
  bool positive_definite = false;
  int failing_index = -1;
};

// Cholesky with pivots required to exceed pivot_tol * max(1, max |s_ij|).
PdDiagnostic pd_diagnostic(const SymMatrix<double>& s, double pivot_tol = kDefaultPivotTol);
// Sylvester's criterion on exact leading minors.
PdDiagnostic pd_diagnostic(const RationalSymMatrix& s);

inline bool is_pd(const SymMatrix<double>& s, double pivot_tol = kDefaultPivotTol) {
  return pd_diagnostic(s, pivot_tol).positive_definite;
}
inline bool is_pd(const RationalSymMatrix& s) { return pd_diagnostic(s).positive_definite; }

// <S>: (ij|K) is included iff |det S_{iK,jK}| <= tol * sqrt(s_ii s_jj) *
// prod_{k in K} s_kk, the Hadamard-Fischer bound on that minor. Throws
// DomainError unless S is positive definite.
Relation relation_of_matrix(const SymMatrix<double>& s, double tol = kDefaultTol);
// Exact zero test.
Relation relation_of_matrix(const RationalSymMatrix& s);

// Throw DomainError unless S is positive definite.
SymMatrix<double> inverse(const SymMatrix<double>& s);
RationalSymMatrix inverse(const RationalSymMatrix& s);

struct Correlation {
  Eigen::VectorXd scale;  // D = diag(scale), scale_i = sqrt(s_ii)
  SymMatrix<double> r;    // S = D R D
};

// Throws DomainError if some diagonal entry is not positive.
Correlation to_correlation(const SymMatrix<double>& s);

template <typename Scalar>
SymMatrix<Scalar> principal_submatrix(const SymMatrix<Scalar>& s, VertexSet keep) {
  const std::vector<int> idx = members(keep);
  SymMatrix<Scalar> out(static_cast<int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a; b < idx.size(); ++b)
      out.set(static_cast<int>(a), static_cast<int>(b), s(idx[a], idx[b]));
  return out;
}

namespace detail {
template <typename Scalar>
void check_minor_index(const SymMatrix<Scalar>& s, int k) {
  if (s.size() < 2) throw ArgumentError("minor of a 1 x 1 matrix");
  if (k < 0 || k >= s.size()) throw ArgumentError("minor index out of range");
}
}  // namespace detail

// S_{N\k,N\k}. Throws DomainError unless S is positive definite.
template <typename Scalar>
SymMatrix<Scalar> marginal_matrix(const SymMatrix<Scalar>& s, int k) {
  detail::check_minor_index(s, k);
  if (!is_pd(s)) throw DomainError("marginal_matrix needs a positive definite matrix");
  return principal_submatrix(s, full_set(s.size()) & ~singleton(k));
}

// Schur complement of s_kk. Throws DomainError unless S is positive definite.
template <typename Scalar>
SymMatrix<Scalar> conditional_matrix(const SymMatrix<Scalar>& s, int k) {
  detail::check_minor_index(s, k);
  if (!is_pd(s)) throw DomainError("conditional_matrix needs a positive definite matrix");
  const std::vector<int> idx = members(full_set(s.size()) & ~singleton(k));
  SymMatrix<Scalar> out(s.size() - 1);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a; b < idx.size(); ++b) {
      out.set(static_cast<int>(a), static_cast<int>(b),
              s(idx[a], idx[b]) - s(idx[a], k) * s(k, idx[b]) / s(k, k));
    }
  }
  return out;
}

template <typename Scalar>
SymMatrix<Scalar> hadamard(const SymMatrix<Scalar>& a, const SymMatrix<Scalar>& b) {
  if (a.size() != b.size()) throw ArgumentError("hadamard: size mismatch");
  SymMatrix<Scalar> out(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = i; j < a.size(); ++j) out.set(i, j, a(i, j) * b(i, j));
  return out;
}

template <typename Scalar>
SymMatrix<Scalar> direct_sum_matrix(const SymMatrix<Scalar>& a, const SymMatrix<Scalar>& b) {
  const int n = a.size();
  if (n + b.size() > kMaxVertices) throw SizeError("direct sum exceeds 16 rows");
  SymMatrix<Scalar> out(n + b.size());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.set(i, j, a(i, j));
  for (int i = 0; i < b.size(); ++i)
    for (int j = i; j < b.size(); ++j) out.set(n + i, n + j, b(i, j));
  return out;
}

// (S^{-1})_ij for ij in E_G^c, then s_kl for kl in E_H^c, both in pair_rank
// order. Throws DomainError unless S is positive definite.
template <typename Scalar>
DenseVector<Scalar> membership_residual(const SymMatrix<Scalar>& s, const Graph& g,
                                        const Graph& h) {
  if (g.size() != s.size() || h.size() != s.size()) {
    throw ArgumentError("membership_residual: size mismatch");
  }
  const SymMatrix<Scalar> k = inverse(s);
  const std::vector<Edge> g_off = g.non_edges();
  const std::vector<Edge> h_off = h.non_edges();
  DenseVector<Scalar> out(static_cast<Eigen::Index>(g_off.size() + h_off.size()));
  Eigen::Index row = 0;
  for (const Edge& e : g_off) out(row++) = k(e.i, e.j);
  for (const Edge& e : h_off) out(row++) = s(e.i, e.j);
  return out;
}

// Max norm of membership_residual, 0 for an empty residual.
double max_residual(const SymMatrix<double>& s, const Graph& g, const Graph& h);

// Number of singular values above rel_tol times the largest one.
int numerical_rank(const Eigen::MatrixXd& a, double rel_tol = kDefaultRankTol);

}  // namespace dmarkov

#endif  // DMARKOV_SYM_MATRIX_HPP_
