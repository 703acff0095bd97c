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

#ifndef DMARKOV_REPORT_HPP_
#define DMARKOV_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmarkov/classify.hpp"
#include "dmarkov/geometry.hpp"
#include "dmarkov/graph.hpp"

namespace dmarkov {

struct AnalyzeOptions {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  bool point = false;
  std::size_t path_cap = kDefaultPathCap;
  ModelPointOptions point_options;
};

struct PointSummary {
  std::uint64_t seed = 0;
  ModelPointResult result;
  std::optional<int> local_tangent_dimension;  // correlation mode, if converged
};

// Classification of one nontrivial block of G & H, in the block's own
// labels (vertices[p] is the caller's vertex for label p).
struct BlockClassification {
  std::vector<int> vertices;
  ModelDescription description;
};

struct ModelReport {
  Graph g;
  Graph h;
  DecompositionResult decomposition;
  DimensionBound bound{};
  bool union_complete = false;
  bool transverse_at_identity = false;
  ConnectednessCertificate certificate;
  std::size_t max_h_paths = 0;  // over the G-non-edges
  std::size_t relation_size = 0;
  std::vector<std::string> violations;
  std::optional<std::vector<std::string>> generators;
  std::optional<std::optional<Graph>> inverse_graphical;  // set when unique-path holds
  std::optional<std::vector<BlockClassification>> classification;
  std::optional<PointSummary> point;
};

// Runs the analyses in order: decomposition, bounds, transversality at the
// identity, certificate, CI structure, ideal generators (unique-path case),
// classification (|E_G & E_H| <= 3, per nontrivial block) and, on request, a
// numerical model point. Throws ResourceError if more than opts.path_cap
// H-paths join some G-non-edge.
ModelReport analyze(const Graph& g, const Graph& h, const AnalyzeOptions& opts = {});

// Pretty-printed JSON (2-space indent, fixed key order) followed by a newline.
std::string report_json(const ModelReport& report);

std::string report_text(const ModelReport& report);

}  // namespace dmarkov

#endif  // DMARKOV_REPORT_HPP_
