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

#include "dmarkov/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dmarkov/axioms.hpp"
#include "dmarkov/errors.hpp"
#include "dmarkov/ideal.hpp"
#include "dmarkov/relation.hpp"

namespace dmarkov {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kListedViolations = 20;

Json edge_list(const Graph& g) {
  Json out = Json::array();
  for (const Edge& e : g.edges()) out.push_back(std::to_string(e.i + 1) + "-" + std::to_string(e.j + 1));
  return out;
}

Json one_based(const std::vector<int>& vertices) {
  Json out = Json::array();
  for (int v : vertices) out.push_back(v + 1);
  return out;
}

Json family_json(const Family& f) {
  return Json{{"name", f.name},
              {"params", f.params},
              {"entries", f.entries},
              {"domain", f.domain},
              {"dimension", f.dimension()}};
}

Json classification_json(const BlockClassification& block) {
  const ModelDescription& d = block.description;
  std::vector<int> support;
  for (int p : d.normalization.support) support.push_back(block.vertices[p]);
  Json families = Json::array();
  for (const Family& f : d.families) families.push_back(family_json(f));
  return Json{{"block", one_based(block.vertices)},
              {"case", d.case_tag},
              {"support", one_based(support)},
              {"swapped", d.normalization.swapped},
              {"reversed", d.normalization.reversed},
              {"component_count", d.component_count},
              {"dimension", d.dimension},
              {"connected", d.connected},
              {"families", families}};
}

}  // namespace

ModelReport analyze(const Graph& g, const Graph& h, const AnalyzeOptions& opts) {
  if (g.size() != h.size()) throw ArgumentError("graph sizes differ");
  const int n = g.size();
  ModelReport r;
  r.g = g;
  r.h = h;
  r.decomposition = decompose(g, h);
  r.bound = dimension_bound(g, h);
  r.union_complete = edge_union(g, h) == Graph::complete(n);
  r.transverse_at_identity = is_transverse_at(SymMatrix<double>::identity(n), g, h, opts.tol);
  r.certificate = connectedness_certificate(g, h);

  for (const Edge& e : g.non_edges()) {
    const std::size_t count = count_paths(h, e.i, e.j, opts.path_cap + 1);
    if (count > opts.path_cap) {
      throw ResourceError("more than " + std::to_string(opts.path_cap) + " paths in H join " +
                          std::to_string(e.i + 1) + " and " + std::to_string(e.j + 1));
    }
    r.max_h_paths = std::max(r.max_h_paths, count);
  }

  const Relation rel = double_markov_relation(g, h);
  r.relation_size = rel.size();
  for (const Violation& v : check_axioms(rel)) r.violations.push_back(v.to_string());

  if (unique_path_hypothesis(g, h)) {
    r.generators = sci_monomial_generators(g, h).to_strings();
    r.inverse_graphical = inverse_graphical_recognition(g, h);
  }

  if (r.bound.correlation <= 3) {
    std::vector<BlockClassification> blocks;
    for (const Block& b : r.decomposition.blocks) {
      if (b.vertices.size() > 1) blocks.push_back({b.vertices, classify_small_intersection(b.g, b.h)});
    }
    if (blocks.empty()) {
      std::vector<int> all(n);
      for (int v = 0; v < n; ++v) all[v] = v;
      blocks.push_back({all, classify_small_intersection(g, h)});
    }
    r.classification = std::move(blocks);
  }

  if (opts.point) {
    PointSummary p;
    p.seed = opts.seed;
    p.result = find_model_point(g, h, opts.seed, opts.point_options);
    if (p.result.converged) {
      p.local_tangent_dimension = local_tangent_dimension(p.result.point, g, h, true, opts.tol);
    }
    r.point = std::move(p);
  }
  return r;
}

std::string report_json(const ModelReport& r) {
  Json j;
  j["input"] = Json{{"n", r.g.size()}, {"G", edge_list(r.g)}, {"H", edge_list(r.h)}};
  Json blocks = Json::array();
  for (const Block& b : r.decomposition.blocks) blocks.push_back(one_based(b.vertices));
  j["blocks"] = blocks;
  j["dimension_bound"] = Json{{"model", r.bound.model}, {"correlation", r.bound.correlation}};
  j["certificate"] = Json{
      {"kind", std::string(certificate_name(r.certificate.kind))},
      {"hub", r.certificate.hub >= 0 ? Json(r.certificate.hub + 1) : Json(nullptr)},
      {"intersection_size", r.certificate.intersection_size}};
  j["union_complete"] = r.union_complete;
  j["transverse_at_identity"] = r.transverse_at_identity;

  Json listed = Json::array();
  for (std::size_t v = 0; v < std::min(r.violations.size(), kListedViolations); ++v) {
    listed.push_back(r.violations[v]);
  }
  j["ci_structure"] = Json{{"size", r.relation_size},
                           {"gaussoid", r.violations.empty()},
                           {"violation_count", r.violations.size()},
                           {"violations", listed}};
  j["max_h_paths"] = r.max_h_paths;

  if (r.generators) {
    Json inverse = nullptr;
    if (r.inverse_graphical && *r.inverse_graphical) inverse = edge_list(**r.inverse_graphical);
    j["ideal"] = Json{{"unique_path", true}, {"generators", *r.generators}, {"inverse_graphical", inverse}};
  } else {
    j["ideal"] = Json{{"unique_path", false}, {"generators", nullptr}, {"inverse_graphical", nullptr}};
  }

  if (r.classification) {
    Json cls = Json::array();
    for (const BlockClassification& b : *r.classification) cls.push_back(classification_json(b));
    j["classification"] = cls;
  } else {
    j["classification"] = nullptr;
  }

  if (r.point) {
    const ModelPointResult& res = r.point->result;
    Json matrix = Json::array();
    for (int a = 0; a < res.point.size(); ++a) {
      Json row = Json::array();
      for (int b = 0; b < res.point.size(); ++b) row.push_back(res.point(a, b));
      matrix.push_back(row);
    }
    j["point"] = Json{{"seed", r.point->seed},
                      {"converged", res.converged},
                      {"residual", res.residual},
                      {"restart", res.restart},
                      {"iterations", res.iterations},
                      {"local_tangent_dimension", r.point->local_tangent_dimension
                                                      ? Json(*r.point->local_tangent_dimension)
                                                      : Json(nullptr)},
                      {"matrix", matrix}};
  } else {
    j["point"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string report_text(const ModelReport& r) {
  std::ostringstream out;
  const int n = r.g.size();
  out << "n = " << n << "\n";
  out << "G: " << r.g.to_string() << "\n";
  out << "H: " << r.h.to_string() << "\n";
  out << "blocks:";
  for (const Block& b : r.decomposition.blocks) {
    out << " {";
    for (std::size_t v = 0; v < b.vertices.size(); ++v) out << (v ? "," : "") << b.vertices[v] + 1;
    out << "}";
  }
  out << "\n";
  out << "dimension bound: " << r.bound.model << " (model), " << r.bound.correlation
      << " (correlation)\n";
  out << "certificate: " << certificate_name(r.certificate.kind);
  if (r.certificate.hub >= 0) out << "(" << r.certificate.hub + 1 << ")";
  out << "\n";
  out << "union complete: " << (r.union_complete ? "yes" : "no") << "\n";
  out << "transverse at identity: " << (r.transverse_at_identity ? "yes" : "no") << "\n";
  if (r.generators) {
    out << "ideal generators:";
    for (const std::string& gen : *r.generators) out << " " << gen;
    out << "\n";
    if (r.inverse_graphical && *r.inverse_graphical) {
      out << "inverse graphical, certificate graph: " << (*r.inverse_graphical)->to_string() << "\n";
    }
  } else {
    out << "ideal generators: n/a (some G-non-edge has several H-paths)\n";
  }
  if (r.classification) {
    for (const BlockClassification& b : *r.classification) {
      const ModelDescription& d = b.description;
      out << "classification:";
      for (int v : b.vertices) out << " " << v + 1;
      out << " -> " << d.case_tag << ", " << d.component_count << " families, dimension "
          << d.dimension << (d.normalization.swapped ? ", G and H swapped" : "") << "\n";
      for (const Family& f : d.families) {
        out << "  " << f.name << "; params";
        for (const std::string& p : f.params) out << " " << p;
        out << "; " << f.domain << "\n";
      }
    }
  }
  if (r.point) {
    const ModelPointResult& res = r.point->result;
    out << "model point: " << (res.converged ? "converged" : "not converged") << ", residual "
        << res.residual << ", restart " << res.restart << "\n";
    if (r.point->local_tangent_dimension) {
      out << "local tangent dimension: " << *r.point->local_tangent_dimension << "\n";
    }
  }
  out << "CI structure: " << r.relation_size << " statements, " << r.violations.size()
      << " axiom violations\n";
  for (std::size_t v = 0; v < std::min(r.violations.size(), kListedViolations); ++v) {
    out << "  " << r.violations[v] << "\n";
  }
  out << "max H-paths per G-non-edge: " << r.max_h_paths << "\n";
  return out.str();
}

}  // namespace dmarkov
