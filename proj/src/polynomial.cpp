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

#include "dmarkov/polynomial.hpp"

#include <cmath>

#include "dmarkov/errors.hpp"

namespace dmarkov {

SparsePolynomial SparsePolynomial::constant(int n, const Rational& c) {
  SparsePolynomial p(n);
  p.add_term(Exponents(static_cast<std::size_t>(pair_count(n)), 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(int n, int i, int j) {
  if (i == j) throw ArgumentError("variable needs two distinct indices");
  if (i > j) std::swap(i, j);
  Exponents e(static_cast<std::size_t>(pair_count(n)), 0);
  e[pair_rank(i, j, n)] = 1;
  SparsePolynomial p(n);
  p.add_term(e, 1);
  return p;
}

void SparsePolynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  if (n_ == 0) n_ = other.n_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  if (n_ == 0) n_ = other.n_;
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out(a.n_ != 0 ? a.n_ : b.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      SparsePolynomial::Exponents e = ea;
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::uint8_t>(e[v] + eb[v]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

double SparsePolynomial::evaluate(const SymMatrix<double>& s) const {
  if (s.size() != n_) throw ArgumentError("evaluate: size mismatch");
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = to_double(c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      const Edge pair = pair_unrank(static_cast<int>(v), n_);
      term *= std::pow(s(pair.i, pair.j), e[v]);
    }
    total += term;
  }
  return total;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string monomial;
    for (std::size_t v = 0; v < e.size(); ++v) {
      const Edge pair = pair_unrank(static_cast<int>(v), n_);
      for (int p = 0; p < e[v]; ++p) {
        if (!monomial.empty()) monomial += "*";
        monomial += "s" + std::to_string(pair.i + 1) + std::to_string(pair.j + 1);
      }
    }
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    std::string term;
    if (monomial.empty()) {
      term = dmarkov::to_string(magnitude);
    } else if (magnitude == 1) {
      term = monomial;
    } else {
      term = dmarkov::to_string(magnitude) + "*" + monomial;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

namespace {

PolynomialMatrix drop(const PolynomialMatrix& a, std::size_t row, std::size_t col) {
  PolynomialMatrix out;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r == row) continue;
    std::vector<SparsePolynomial> line;
    for (std::size_t c = 0; c < a[r].size(); ++c)
      if (c != col) line.push_back(a[r][c]);
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

SparsePolynomial polynomial_determinant(const PolynomialMatrix& a, int n) {
  const std::size_t m = a.size();
  if (m == 0) return SparsePolynomial::constant(n, 1);
  if (m == 1) return a[0][0];

  // Pick the line (row or column) with the fewest nonzero entries.
  std::size_t best_line = 0;
  bool best_is_row = true;
  std::size_t best_count = m + 1;
  for (std::size_t line = 0; line < m; ++line) {
    std::size_t row_count = 0, col_count = 0;
    for (std::size_t x = 0; x < m; ++x) {
      row_count += a[line][x].is_zero() ? 0 : 1;
      col_count += a[x][line].is_zero() ? 0 : 1;
    }
    if (row_count < best_count) {
      best_count = row_count;
      best_line = line;
      best_is_row = true;
    }
    if (col_count < best_count) {
      best_count = col_count;
      best_line = line;
      best_is_row = false;
    }
  }
  SparsePolynomial det(n);
  for (std::size_t x = 0; x < m; ++x) {
    const std::size_t r = best_is_row ? best_line : x;
    const std::size_t c = best_is_row ? x : best_line;
    if (a[r][c].is_zero()) continue;
    SparsePolynomial term = a[r][c] * polynomial_determinant(drop(a, r, c), n);
    if ((r + c) % 2 == 1) term *= Rational(-1);
    det += term;
  }
  return det;
}

}  // namespace dmarkov
