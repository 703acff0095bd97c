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

#ifndef DMARKOV_POLYNOMIAL_HPP_
#define DMARKOV_POLYNOMIAL_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dmarkov/graph.hpp"
#include "dmarkov/rational.hpp"
#include "dmarkov/sym_matrix.hpp"

namespace dmarkov {

// Polynomial with exact rational coefficients in the variables s_ij, i < j,
// of a ground set of size n. Variable order is pair_rank order.
class SparsePolynomial {
 public:
  using Exponents = std::vector<std::uint8_t>;  // indexed by pair_rank

  SparsePolynomial() = default;
  explicit SparsePolynomial(int n) : n_(n) {}

  static SparsePolynomial constant(int n, const Rational& c);
  static SparsePolynomial variable(int n, int i, int j);

  int ground_size() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Rational& c);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
    return a += b;
  }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
    return a -= b;
  }
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  // Value with s_ij replaced by the ij entry of s.
  double evaluate(const SymMatrix<double>& s) const;

  // "s12*s23 - s13", terms in descending exponent order; "0" if zero.
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  int n_ = 0;
  std::map<Exponents, Rational> terms_;
};

using PolynomialMatrix = std::vector<std::vector<SparsePolynomial>>;

// Determinant by cofactor expansion along the row or column with the fewest
// nonzero entries. The empty matrix has determinant 1.
SparsePolynomial polynomial_determinant(const PolynomialMatrix& a, int n);

}  // namespace dmarkov

#endif  // DMARKOV_POLYNOMIAL_HPP_
