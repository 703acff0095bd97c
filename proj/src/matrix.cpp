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
#include <cctype>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/SVD>

#include "dmarkov/errors.hpp"
#include "dmarkov/rational.hpp"
#include "dmarkov/sym_matrix.hpp"

namespace dmarkov {

namespace {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

// cpp_int reads a leading zero as an octal prefix.
Integer decimal(std::string_view digits) {
  const std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer(std::string{digits.substr(first)});
}

Integer power_of_ten(long e) {
  Integer out = 1;
  for (long i = 0; i < e; ++i) out *= 10;
  return out;
}

[[noreturn]] void bad_number(std::string_view token) {
  throw ArgumentError("malformed number '" + std::string(token) + "'");
}

}  // namespace

Rational parse_rational(std::string_view token) {
  std::string_view s = token;
  if (s.empty()) bad_number(token);

  const std::size_t slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
      negative = num[0] == '-';
      num.remove_prefix(1);
    }
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) bad_number(token);
    const Integer d(decimal(den));
    if (d == 0) throw ArgumentError("zero denominator in '" + std::string(token) + "'");
    Rational out(decimal(num), d);
    return negative ? Rational(-out) : out;
  }

  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  const std::size_t e = s.find_first_of("eE");
  if (e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp.empty() && (exp[0] == '-' || exp[0] == '+')) {
      exp_negative = exp[0] == '-';
      exp.remove_prefix(1);
    }
    if (exp.empty() || exp.size() > 6 || !all_digits(exp)) bad_number(token);
    exponent = std::stol(std::string{exp});
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  const std::size_t dot = s.find('.');
  if (dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac)) {
      bad_number(token);
    }
    digits = std::string{whole} + std::string{frac};
    exponent -= static_cast<long>(frac.size());
  } else {
    if (s.empty() || !all_digits(s)) bad_number(token);
    digits = std::string{s};
  }
  Integer mantissa = decimal(digits);
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return Rational(mantissa * power_of_ten(exponent));
  return Rational(mantissa, power_of_ten(-exponent));
}

std::string to_string(const Rational& x) { return x.str(); }

double to_double(const Rational& x) { return x.convert_to<double>(); }

PdDiagnostic pd_diagnostic(const SymMatrix<double>& s, double pivot_tol) {
  const int n = s.size();
  double scale = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) scale = std::max(scale, std::abs(s(i, j)));
  const double threshold = pivot_tol * scale;

  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double pivot = s(j, j) - l.row(j).head(j).squaredNorm();
    if (!(pivot > threshold)) return {false, j};
    l(j, j) = std::sqrt(pivot);
    for (int i = j + 1; i < n; ++i) {
      l(i, j) = (s(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / l(j, j);
    }
  }
  return {true, -1};
}

PdDiagnostic pd_diagnostic(const RationalSymMatrix& s) {
  for (int k = 1; k <= s.size(); ++k) {
    if (principal_minor(s, full_set(k)) <= 0) return {false, k - 1};
  }
  return {true, -1};
}

namespace {

template <typename Test>
Relation collect_statements(int n, Test&& holds) {
  Relation r(n);
  for (std::size_t index = 0; index < r.capacity(); ++index) {
    const Statement st = statement_at(index, n);
    if (holds(st)) r.set(index);
  }
  return r;
}

std::vector<int> with_first(int first, VertexSet k) {
  std::vector<int> out{first};
  for (int v : members(k)) out.push_back(v);
  return out;
}

}  // namespace

Relation relation_of_matrix(const SymMatrix<double>& s, double tol) {
  if (!is_pd(s)) throw DomainError("relation_of_matrix needs a positive definite matrix");
  return collect_statements(s.size(), [&](const Statement& st) {
    const Eigen::MatrixXd a = submatrix(s, with_first(st.i, st.k), with_first(st.j, st.k));
    double scale = std::sqrt(s(st.i, st.i) * s(st.j, st.j));
    for (int v : members(st.k)) scale *= s(v, v);
    return std::abs(determinant(a)) <= tol * scale;
  });
}

Relation relation_of_matrix(const RationalSymMatrix& s) {
  if (!is_pd(s)) throw DomainError("relation_of_matrix needs a positive definite matrix");
  return collect_statements(s.size(), [&](const Statement& st) {
    return almost_principal_minor(s, st.i, st.j, st.k) == 0;
  });
}

SymMatrix<double> inverse(const SymMatrix<double>& s) {
  if (!is_pd(s)) throw DomainError("inverse needs a positive definite matrix");
  const Eigen::MatrixXd a = s.dense();
  const Eigen::MatrixXd inv = a.llt().solve(Eigen::MatrixXd::Identity(s.size(), s.size()));
  return SymMatrix<double>::symmetrize(inv);
}

RationalSymMatrix inverse(const RationalSymMatrix& s) {
  if (!is_pd(s)) throw DomainError("inverse needs a positive definite matrix");
  const int n = s.size();
  DenseMatrix<Rational> a = s.dense();
  DenseMatrix<Rational> inv = DenseMatrix<Rational>::Identity(n, n);
  // Gauss-Jordan; leading principal minors are positive so no pivoting.
  for (int k = 0; k < n; ++k) {
    const Rational pivot = a(k, k);
    a.row(k) /= pivot;
    inv.row(k) /= pivot;
    for (int i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational factor = a(i, k);
      a.row(i) -= factor * a.row(k);
      inv.row(i) -= factor * inv.row(k);
    }
  }
  return RationalSymMatrix::from_dense(inv);
}

Correlation to_correlation(const SymMatrix<double>& s) {
  const int n = s.size();
  Correlation out{Eigen::VectorXd(n), SymMatrix<double>(n)};
  for (int i = 0; i < n; ++i) {
    if (!(s(i, i) > 0)) throw DomainError("to_correlation needs a positive diagonal");
    out.scale(i) = std::sqrt(s(i, i));
  }
  for (int i = 0; i < n; ++i) {
    out.r.set(i, i, 1.0);
    for (int j = i + 1; j < n; ++j) out.r.set(i, j, s(i, j) / (out.scale(i) * out.scale(j)));
  }
  return out;
}

double max_residual(const SymMatrix<double>& s, const Graph& g, const Graph& h) {
  const Eigen::VectorXd r = membership_residual(s, g, h);
  return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
}

int numerical_rank(const Eigen::MatrixXd& a, double rel_tol) {
  if (a.size() == 0) return 0;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return static_cast<int>((sv.array() > rel_tol * sv(0)).count());
}

}  // namespace dmarkov
