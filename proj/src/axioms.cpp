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

#include "dmarkov/axioms.hpp"

#include <array>

#include "dmarkov/errors.hpp"

namespace dmarkov {

namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "semigraphoid", "intersection", "composition", "weak-transitivity", "rule17"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Statement st(int i, int j, VertexSet k) { return Statement::make(i, j, k); }

// Calls f(i, j, k, K) for every ordered triple of distinct vertices and every
// K in the complement of {i, j, k}.
template <typename F>
void for_each_triple(int n, F&& f) {
  const VertexSet all = full_set(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const VertexSet rest = all & ~(singleton(i) | singleton(j) | singleton(k));
        // Enumerate subsets of rest, including the empty set.
        VertexSet sub = 0;
        do {
          f(i, j, k, sub);
          sub = (sub - rest) & rest;
        } while (sub != 0);
      }
    }
  }
}

}  // namespace

std::string_view rule_name(Rule rule) { return kRuleNames[static_cast<int>(rule)]; }

Rule parse_rule(std::string_view name) {
  name = trim(name);
  for (int r = 0; r < kRuleCount; ++r) {
    if (kRuleNames[r] == name) return static_cast<Rule>(r);
  }
  throw ArgumentError("unknown rule '" + std::string(name) + "'");
}

RuleSet RuleSet::parse(std::string_view list) {
  RuleSet out;
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    const std::string_view item = trim(list.substr(0, comma));
    if (item == "all") {
      out = horn();
    } else if (!item.empty()) {
      out.add(parse_rule(item));
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

std::string Violation::to_string() const {
  std::string out(rule_name(rule));
  out += ": ";
  for (std::size_t a = 0; a < antecedents.size(); ++a) {
    if (a > 0) out += " & ";
    out += antecedents[a].to_string();
  }
  out += " without ";
  const char* join = rule == Rule::kWeakTransitivity ? " or " : " & ";
  for (std::size_t m = 0; m < missing.size(); ++m) {
    if (m > 0) out += join;
    out += missing[m].to_string();
  }
  return out;
}

std::vector<Violation> check_axioms(const Relation& r) {
  std::vector<Violation> out;
  const int n = r.ground_size();
  if (n < 3) return out;
  for_each_triple(n, [&](int i, int j, int k, VertexSet K) {
    const VertexSet jK = K | singleton(j);
    const VertexSet kK = K | singleton(k);
    const Statement ij_K = st(i, j, K), ik_K = st(i, k, K);
    const Statement ij_kK = st(i, j, kK), ik_jK = st(i, k, jK);
    const bool has_ij_K = r.contains(ij_K), has_ik_K = r.contains(ik_K);
    const bool has_ij_kK = r.contains(ij_kK), has_ik_jK = r.contains(ik_jK);

    auto report = [&](Rule rule, std::vector<Statement> antecedents,
                      std::vector<std::pair<Statement, bool>> conclusions) {
      Violation v{rule, std::move(antecedents), {}};
      for (const auto& [s, present] : conclusions) {
        if (!present) v.missing.push_back(s);
      }
      if (!v.missing.empty()) out.push_back(std::move(v));
    };

    if (has_ij_K && has_ik_jK) {
      report(Rule::kSemigraphoid, {ij_K, ik_jK}, {{ik_K, has_ik_K}, {ij_kK, has_ij_kK}});
    }
    // Intersection and composition are symmetric in j, k; WT in i, j.
    if (j < k && has_ij_kK && has_ik_jK) {
      report(Rule::kIntersection, {ij_kK, ik_jK}, {{ij_K, has_ij_K}, {ik_K, has_ik_K}});
    }
    if (j < k && has_ij_K && has_ik_K) {
      report(Rule::kComposition, {ij_K, ik_K}, {{ij_kK, has_ij_kK}, {ik_jK, has_ik_jK}});
    }
    if (i < j && has_ij_K && has_ij_kK) {
      const Statement jk_K = st(j, k, K);
      if (!has_ik_K && !r.contains(jk_K)) {
        out.push_back({Rule::kWeakTransitivity, {ij_K, ij_kK}, {ik_K, jk_K}});
      }
    }
  });
  return out;
}

bool is_gaussoid(const Relation& r) { return check_axioms(r).empty(); }

ClosureResult closure(const Relation& r, RuleSet rules) {
  if (rules.contains(Rule::kWeakTransitivity)) {
    throw ArgumentError("weak transitivity has a disjunctive conclusion and cannot be used in closure");
  }
  ClosureResult result{r, {}, 0};
  Relation& cur = result.relation;
  const int n = cur.ground_size();
  std::array<std::size_t, kRuleCount> derived{};

  auto add = [&](const Statement& s, Rule rule, bool& changed) {
    const std::size_t index = statement_index(s, n);
    if (!cur.test(index)) {
      cur.set(index);
      ++derived[static_cast<int>(rule)];
      changed = true;
    }
  };

  bool changed = true;
  while (changed && n >= 3) {
    changed = false;
    ++result.rounds;
    for_each_triple(n, [&](int i, int j, int k, VertexSet K) {
      const VertexSet jK = K | singleton(j);
      const VertexSet kK = K | singleton(k);
      const Statement ij_K = st(i, j, K), ik_K = st(i, k, K);
      const Statement ij_kK = st(i, j, kK), ik_jK = st(i, k, jK);
      if (rules.contains(Rule::kSemigraphoid) && cur.contains(ij_K) && cur.contains(ik_jK)) {
        add(ik_K, Rule::kSemigraphoid, changed);
        add(ij_kK, Rule::kSemigraphoid, changed);
      }
      if (rules.contains(Rule::kIntersection) && cur.contains(ij_kK) && cur.contains(ik_jK)) {
        add(ij_K, Rule::kIntersection, changed);
        add(ik_K, Rule::kIntersection, changed);
      }
      if (rules.contains(Rule::kComposition) && cur.contains(ij_K) && cur.contains(ik_K)) {
        add(ij_kK, Rule::kComposition, changed);
        add(ik_jK, Rule::kComposition, changed);
      }
    });
    if (rules.contains(Rule::kRule17) && n >= 4) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (b == a) continue;
          if (!cur.contains(st(a, b, 0))) continue;
          for (int c = 0; c < n; ++c) {
            if (c == a || c == b) continue;
            for (int d = 0; d < n; ++d) {
              if (d == a || d == b || d == c) continue;
              if (cur.contains(st(c, d, 0)) &&
                  cur.contains(st(a, c, singleton(b) | singleton(d))) &&
                  cur.contains(st(b, d, singleton(a) | singleton(c)))) {
                add(st(a, c, 0), Rule::kRule17, changed);
              }
            }
          }
        }
      }
    }
  }
  for (int rule = 0; rule < kRuleCount; ++rule) {
    if (derived[rule] > 0) result.fired.push_back({static_cast<Rule>(rule), derived[rule]});
  }
  return result;
}

std::optional<Graph> recognize_markov(const Relation& r) {
  if (!is_upward_stable(r) || !is_gaussoid(r)) return std::nullopt;
  const int n = r.ground_size();
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const VertexSet rest = full_set(n) & ~(singleton(i) | singleton(j));
      if (!r.contains({i, j, rest})) g.add_edge(i, j);
    }
  }
  if (relation_of_graph(g) != r) return std::nullopt;
  return g;
}

}  // namespace dmarkov
