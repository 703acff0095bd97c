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

#ifndef DMARKOV_AXIOMS_HPP_
#define DMARKOV_AXIOMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmarkov/graph.hpp"
#include "dmarkov/relation.hpp"

namespace dmarkov {

enum class Rule : std::uint8_t {
  kSemigraphoid = 0,
  kIntersection = 1,
  kComposition = 2,
  kWeakTransitivity = 3,
  kRule17 = 4,
};

inline constexpr int kRuleCount = 5;

std::string_view rule_name(Rule rule);

// Accepts "semigraphoid", "intersection", "composition",
// "weak-transitivity", "rule17". Throws ArgumentError otherwise.
Rule parse_rule(std::string_view name);

// A subset of the rules, one bit per Rule value.
class RuleSet {
 public:
  constexpr RuleSet() = default;
  constexpr RuleSet(std::initializer_list<Rule> rules) {
    for (Rule r : rules) bits_ |= bit(r);
  }

  // Every Horn rule: semigraphoid, intersection, composition, rule17.
  static constexpr RuleSet horn() {
    return {Rule::kSemigraphoid, Rule::kIntersection, Rule::kComposition, Rule::kRule17};
  }

  // Comma separated rule names; "all" means horn().
  static RuleSet parse(std::string_view list);

  constexpr bool contains(Rule r) const { return (bits_ & bit(r)) != 0; }
  constexpr RuleSet& add(Rule r) {
    bits_ |= bit(r);
    return *this;
  }
  constexpr bool empty() const { return bits_ == 0; }

 private:
  static constexpr std::uint8_t bit(Rule r) {
    return static_cast<std::uint8_t>(1u << static_cast<int>(r));
  }
  std::uint8_t bits_ = 0;
};

// One failed instance of an axiom: all antecedents hold and the listed
// conclusions are absent. For weak transitivity both disjuncts are listed.
struct Violation {
  Rule rule;
  std::vector<Statement> antecedents;
  std::vector<Statement> missing;

  std::string to_string() const;
};

// Instances of the semigraphoid, intersection, composition and weak
// transitivity axioms violated by r. Empty iff r is a gaussoid.
std::vector<Violation> check_axioms(const Relation& r);

bool is_gaussoid(const Relation& r);

struct RuleFiring {
  Rule rule;
  std::size_t derived;  // statements first produced by this rule
};

struct ClosureResult {
  Relation relation;
  std::vector<RuleFiring> fired;  // rules that derived something, in Rule order
  int rounds = 0;
};

// Least superset of r closed under the selected rules. Weak transitivity is
// disjunctive and cannot be used here; passing it throws ArgumentError.
//
// Rule 17 is (ab|) & (cd|) & (ac|bd) & (bd|ac) => (ac|) over all ordered
// quadruples of distinct vertices, with no further conditioning vertices.
ClosureResult closure(const Relation& r, RuleSet rules);

// The graph G with <G> = r, if r is an upward-stable gaussoid of that form.
std::optional<Graph> recognize_markov(const Relation& r);

}  // namespace dmarkov

#endif  // DMARKOV_AXIOMS_HPP_
