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

#ifndef DMARKOV_ERRORS_HPP_
#define DMARKOV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dmarkov {

// Invalid vertex, mismatched ground sets, malformed statement.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation (non-PD matrix,
// point off the model, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Ground set or matrix too large for the requested operation.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A configured resource cap (path count, iteration budget) was exhausted.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input lies outside the class of inputs an operation can answer
// correctly; raised instead of returning a wrong answer.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace dmarkov

#endif  // DMARKOV_ERRORS_HPP_
