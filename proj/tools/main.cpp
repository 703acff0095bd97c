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

// dmarkov: analyze double Markovian models M(G,H) from the command line.
//
//   dmarkov analyze PAIR_FILE [--json PATH] [--point] [--seed U64] [--tol F] [--cap N]
//   dmarkov enumerate N [--connected] [--out CSV]
//   dmarkov verify MATRIX_FILE PAIR_FILE [--tol F]
//   dmarkov closure RELATION_FILE [--rules LIST]
//
// Exit codes: 0 success or member, 1 not a member, 2 usage or input error,
// 3 resource limit exceeded.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dmarkov/axioms.hpp"
#include "dmarkov/classify.hpp"
#include "dmarkov/errors.hpp"
#include "dmarkov/io.hpp"
#include "dmarkov/report.hpp"
#include "dmarkov/sym_matrix.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotMember = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

int run_analyze(const std::string& pair_file, const std::string& json_path,
                const dmarkov::AnalyzeOptions& opts) {
  const dmarkov::GraphPair pair = dmarkov::parse_graph_pair(dmarkov::read_file(pair_file));
  const dmarkov::ModelReport report = dmarkov::analyze(pair.g, pair.h, opts);
  std::cout << dmarkov::report_text(report);
  if (!json_path.empty()) write_file(json_path, dmarkov::report_json(report));
  return kExitOk;
}

int run_enumerate(int n, bool connected, const std::string& out_path) {
  const dmarkov::EnumerationResult result = dmarkov::enumerate_inequivalent(n, connected);
  if (!out_path.empty()) {
    std::string csv = "canonical_hex,n,rep_G_edges,rep_H_edges\n";
    for (const auto& entry : result.representatives) {
      dmarkov::Relation r = dmarkov::Relation::from_bytes(n, entry.canonical);
      csv += r.to_hex() + "," + std::to_string(n) + "," + entry.g.to_string() + "," +
             entry.h.to_string() + "\n";
    }
    write_file(out_path, csv);
  }
  std::cout << "count=" << result.count << "\n";
  return kExitOk;
}

int run_verify(const std::string& matrix_file, const std::string& pair_file, double tol) {
  const dmarkov::RationalSymMatrix exact = dmarkov::parse_matrix(dmarkov::read_file(matrix_file));
  const dmarkov::GraphPair pair = dmarkov::parse_graph_pair(dmarkov::read_file(pair_file));
  if (pair.g.size() != exact.size()) {
    std::cerr << "error: matrix is " << exact.size() << " x " << exact.size()
              << " but the graphs have " << pair.g.size() << " vertices\n";
    return kExitUsage;
  }
  const dmarkov::SymMatrix<double> s = exact.cast<double>();
  const int n = s.size();
  const dmarkov::PdDiagnostic pd = dmarkov::pd_diagnostic(s);
  if (!pd.positive_definite) {
    std::cout << "not positive definite: leading principal minor of order "
              << pd.failing_index + 1 << " fails\n";
    std::cout << "determinant: " << std::setprecision(15)
              << dmarkov::principal_minor(s, dmarkov::full_set(n)) << std::setprecision(6) << "\n";
    if (n <= 12) {
      int proper = 0, nonzero = 0;
      for (dmarkov::VertexSet k = 1; k < dmarkov::full_set(n); ++k) {
        ++proper;
        if (std::abs(dmarkov::principal_minor(s, k)) > tol) ++nonzero;
      }
      std::cout << "proper principal minors: " << nonzero << " of " << proper << " nonzero\n";
    }
    std::cout << "verdict: not a member\n";
    return kExitNotMember;
  }
  const double residual = dmarkov::max_residual(s, pair.g, pair.h);
  const bool member = residual <= tol;
  std::cout << "max residual: " << residual << "\n";
  std::cout << "verdict: " << (member ? "member" : "not a member") << "\n";
  return member ? kExitOk : kExitNotMember;
}

int run_closure(const std::string& relation_file, const std::string& rules) {
  const dmarkov::Relation r = dmarkov::parse_relation(dmarkov::read_file(relation_file));
  const dmarkov::ClosureResult result = dmarkov::closure(r, dmarkov::RuleSet::parse(rules));
  std::cout << dmarkov::format_relation_list(result.relation);
  std::cout << "# " << result.relation.size() << " statements\n";
  for (const dmarkov::RuleFiring& f : result.fired) {
    std::cout << "# fired " << dmarkov::rule_name(f.rule) << ": " << f.derived << " derived\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze Gaussian double Markovian models M(G,H)", "dmarkov"};
  app.require_subcommand(1);

  std::string pair_file, json_path, matrix_file, relation_file, out_path;
  std::string rules = "all";
  dmarkov::AnalyzeOptions opts;
  double tol = dmarkov::kDefaultTol;
  int n = 0;
  bool connected = false;

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze the model of a graph pair");
  analyze->add_option("pair", pair_file, "Graph pair file")->required();
  analyze->add_option("--json", json_path, "Write the report as JSON to PATH");
  analyze->add_option("--seed", opts.seed, "Seed for the model point search")->capture_default_str();
  analyze->add_option("--tol", opts.tol, "Membership tolerance")->capture_default_str();
  analyze->add_flag("--point", opts.point, "Search for a numerical model point");
  analyze->add_option("--cap", opts.path_cap, "Maximum number of H-paths per G-non-edge")
      ->capture_default_str();

  CLI::App* enumerate = app.add_subcommand("enumerate", "Count inequivalent double Markov relations");
  enumerate->add_option("n", n, "Number of vertices (3 to 6)")->required();
  enumerate->add_flag("--connected", connected, "Only pairs of connected graphs");
  enumerate->add_option("--out", out_path, "Write representatives as CSV to PATH");

  CLI::App* verify = app.add_subcommand("verify", "Check whether a matrix lies in M(G,H)");
  verify->add_option("matrix", matrix_file, "Matrix file")->required();
  verify->add_option("pair", pair_file, "Graph pair file")->required();
  verify->add_option("--tol", tol, "Membership tolerance")->capture_default_str();

  CLI::App* closure = app.add_subcommand("closure", "Close a CI relation under inference rules");
  closure->add_option("relation", relation_file, "Relation file")->required();
  closure->add_option("--rules", rules,
                      "Comma separated rules: semigraphoid, intersection, composition, rule17, all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(pair_file, json_path, opts);
    if (enumerate->parsed()) return run_enumerate(n, connected, out_path);
    if (verify->parsed()) return run_verify(matrix_file, pair_file, tol);
    if (closure->parsed()) return run_closure(relation_file, rules);
  } catch (const dmarkov::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
