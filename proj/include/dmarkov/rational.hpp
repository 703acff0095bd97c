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

#ifndef DMARKOV_RATIONAL_HPP_
#define DMARKOV_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace dmarkov {

// Exact rational numbers. Expression templates are off so that values mix
// freely with Eigen and auto.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

// Accepts integers, decimals with optional exponent ("1.25e-3") and "p/q".
// Throws ArgumentError on anything else.
Rational parse_rational(std::string_view token);

// "p/q", or "p" for integers.
std::string to_string(const Rational& x);

double to_double(const Rational& x);

}  // namespace dmarkov

namespace Eigen {

template <>
struct NumTraits<dmarkov::Rational> : GenericNumTraits<dmarkov::Rational> {
  using Real = dmarkov::Rational;
  using NonInteger = dmarkov::Rational;
  using Literal = dmarkov::Rational;
  using Nested = dmarkov::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // DMARKOV_RATIONAL_HPP_
