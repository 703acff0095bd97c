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
#include <future>
#include <map>
#include <thread>

#include "dmarkov/canonical.hpp"
#include "dmarkov/classify.hpp"
#include "dmarkov/errors.hpp"
#include "dmarkov/relation.hpp"

namespace dmarkov {

namespace {

struct Candidate {
  std::uint64_t g_code;
  std::uint64_t h_code;
  std::size_t g_index;
  std::size_t h_index;

  bool operator<(const Candidate& other) const {
    return std::pair{g_code, h_code} < std::pair{other.g_code, other.h_code};
  }
};

using Orbits = std::map<std::vector<std::uint8_t>, Candidate>;

void keep_least(Orbits& orbits, std::vector<std::uint8_t> key, const Candidate& c) {
  auto [it, inserted] = orbits.emplace(std::move(key), c);
  if (!inserted && c < it->second) it->second = c;
}

}  // namespace

std::vector<Graph> labeled_graphs(int n, bool connected_only) {
  if (n < 1 || pair_count(n) > 30) throw SizeError("labeled_graphs needs C(n,2) <= 30");
  std::vector<Graph> out;
  const std::uint64_t limit = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < limit; ++code) {
    Graph g = Graph::from_edge_code(n, code);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

EnumerationResult enumerate_pairs(const std::vector<Graph>& graphs, std::size_t chunks) {
  EnumerationResult result;
  if (graphs.empty()) return result;
  const int n = graphs.front().size();
  for (const Graph& g : graphs) {
    if (g.size() != n) throw ArgumentError("enumerate_pairs: graphs of different sizes");
  }

  std::vector<Relation> markov;
  std::vector<Relation> dual_markov;
  std::vector<std::uint64_t> codes;
  for (const Graph& g : graphs) {
    markov.push_back(relation_of_graph(g));
    dual_markov.push_back(dual(markov.back()));
    codes.push_back(g.edge_code());
  }

  if (chunks == 0) chunks = std::max(1u, std::thread::hardware_concurrency());
  chunks = std::min(chunks, graphs.size());
  auto work = [&](std::size_t chunk) {
    Orbits orbits;
    for (std::size_t gi = chunk; gi < graphs.size(); gi += chunks) {
      for (std::size_t hi = 0; hi < graphs.size(); ++hi) {
        const Relation r = markov[gi] | dual_markov[hi];
        keep_least(orbits, canonical_form(r, true), {codes[gi], codes[hi], gi, hi});
      }
    }
    return orbits;
  };

  std::vector<std::future<Orbits>> pending;
  for (std::size_t c = 1; c < chunks; ++c) pending.push_back(std::async(std::launch::async, work, c));
  Orbits merged = work(0);
  for (auto& f : pending) {
    for (auto& [key, cand] : f.get()) keep_least(merged, key, cand);
  }

  result.count = merged.size();
  for (auto& [key, cand] : merged) {
    result.representatives.push_back({key, graphs[cand.g_index], graphs[cand.h_index]});
  }
  return result;
}

EnumerationResult enumerate_inequivalent(int n, bool connected_only, std::size_t chunks) {
  if (n < 3 || n > 6) throw ArgumentError("enumeration needs 3 <= n <= 6, got " + std::to_string(n));
  return enumerate_pairs(labeled_graphs(n, connected_only), chunks);
}

}  // namespace dmarkov
