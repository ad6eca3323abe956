// Copyright 2026 The Authors.
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

#include "isfkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isfkit/arrangement.hpp"
#include "isfkit/errors.hpp"
#include "isfkit/graph.hpp"
#include "isfkit/json_io.hpp"
#include "isfkit/patterns.hpp"
#include "isfkit/random.hpp"
#include "isfkit/simplicial.hpp"

namespace isfkit::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string kind;
  std::string action;
  std::string input;
  std::string ordering;
  int budget = Budget{}.subset_edges;
  std::uint64_t seed = 0;
  int n = 6;
  int d = 2;
  int s = 3;
  int max_edges = 7;
  bool weighted = false;
};

// What a command produced: the JSON document, an optional report whose
// verdict sets the exit code, and a line for stderr.
struct Outcome {
  json document;
  const Report* report = nullptr;
  std::string summary;
};

json read_input(const std::string& path) {
  if (path.empty()) throw InputError("missing input file");
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Budget budget_of(const Options& o) {
  Budget b;
  if (o.budget <= 0) throw InputError("budget must be positive");
  b.subset_edges = o.budget;
  b.orientation_edges = std::min(b.orientation_edges, o.budget);
  return b;
}

std::vector<int> ordering_of(const Options& o, int n) {
  if (o.ordering.empty()) return natural_ordering(n);
  try {
    return ordering_from_json(json::parse(o.ordering), n);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed --ordering: ") + e.what());
  }
}

[[noreturn]] void unknown_action(const Options& o) {
  throw InputError("unknown action \"" + o.action + "\" for " + o.kind);
}

json edges_json(const Graph& g) {
  auto edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

Outcome run_graph(const Options& o, Report& report) {
  const Graph input = graph_from_json(read_input(o.input));
  const Graph g = relabel(input, ordering_of(o, input.n()));
  const Budget budget = budget_of(o);
  if (o.action == "isf") {
    if (o.weighted) {
      const WeightedGF w = isf_weighted(g);
      auto name = [&g](int i) { return edge_variable_name(g, i); };
      return {w.to_json(name), nullptr, w.to_string(name)};
    }
    const IntPolynomial p = isf_polynomial(g);
    return {poly_to_json(p), nullptr, to_string(p)};
  }
  if (o.action == "chromatic") {
    const IntPolynomial p = chromatic_polynomial(g);
    return {poly_to_json(p), nullptr, to_string(p)};
  }
  if (o.action == "nbc") {
    const auto nbc = nbc_sets(g, EdgeOrder::lexicographic(g), budget);
    auto counts = json::array();
    for (const auto& c : nbc.counts) counts.push_back(c.str());
    const IntPolynomial w = whitney_polynomial(nbc.counts, g.n());
    return {json{{"counts", counts}, {"whitney_polynomial", poly_to_json(w)}}, nullptr, to_string(w)};
  }
  if (o.action == "peo") {
    const auto natural = natural_ordering(g.n());
    const auto violation = peo_violation(g, natural);
    const auto found = find_peo(g);
    json doc{{"is_peo", !violation}, {"chordal", found.has_value()}};
    if (violation) doc["violation"] = *violation;
    if (found) doc["peo"] = *found;
    return {doc, nullptr, violation ? "not a PEO" : "PEO"};
  }
  if (o.action == "verify") {
    GraphVerifyOptions options;
    options.budget = budget;
    options.seed = o.seed;
    report = verify_isf_nbc(g, options);
    return {report.to_json(), &report, report.summary()};
  }
  unknown_action(o);
}

Outcome run_complex(const Options& o, Report& report) {
  const PureComplex input = complex_from_json(read_input(o.input));
  const PureComplex c = relabel(input, ordering_of(o, input.n()));
  const Budget budget = budget_of(o);
  if (o.action == "cf") {
    if (o.weighted) {
      const WeightedGF w = cf_weighted(c);
      auto name = [&c](int i) { return facet_variable_name(c, i); };
      return {w.to_json(name), nullptr, w.to_string(name)};
    }
    const IntPolynomial p = cf_polynomial(c);
    return {poly_to_json(p), nullptr, to_string(p)};
  }
  if (o.action == "links") {
    json links = json::object();
    for (const auto& [sigma, g] : effective_upper_links(c)) links[to_string(sigma)] = edges_json(g);
    return {json{{"upper_links", links}, {"N", phi_partition(c).N()}}, nullptr,
            std::to_string(links.size()) + " effective peaks"};
  }
  if (o.action == "peo") {
    const bool peo = is_simplicial_peo(c);
    return {json{{"is_peo", peo}, {"is_peo_by_links", is_simplicial_peo_by_links(c)}, {"shifted", is_shifted(c)}},
            nullptr, peo ? "PEO" : "not a PEO"};
  }
  if (o.action == "verify") {
    report = verify_product_formula(c, budget);
    report.merge("structure.", structure_report(c, c.full_mask()));
    return {report.to_json(), &report, report.summary()};
  }
  unknown_action(o);
}

Outcome run_multigraph(const Options& o, Report& report) {
  const LabeledMultigraph g = multigraph_from_json(read_input(o.input));
  MultigraphVerifyOptions options;
  options.budget = budget_of(o);
  options.seed = o.seed;
  options.max_signed_s = o.s;
  if (o.action == "chi") {
    const IntersectionLattice l(build_arrangement(g), options.lattice);
    const IntPolynomial chi = characteristic_polynomial(l);
    return {json{{"characteristic_polynomial", poly_to_json(chi)}, {"rank", l.rank()}, {"lattice_size", l.size()}},
            nullptr, to_string(chi)};
  }
  if (o.action == "isf") {
    const IntPolynomial p = multigraph_isf_polynomial(g);
    return {poly_to_json(p), nullptr, to_string(p)};
  }
  if (o.action == "perfect") {
    const auto p = perfect_labeling(g);
    json doc{{"perfect", p.perfect}};
    if (!p.perfect) {
      auto edges = json::array();
      for (const auto& e : p.edges) edges.push_back(to_string(e));
      doc["condition"] = p.condition;
      doc["vertices"] = p.vertices;
      doc["edges"] = edges;
      doc["detail"] = p.detail;
    }
    return {doc, nullptr, p.perfect ? "perfectly labeled" : "not perfectly labeled: " + p.detail};
  }
  if (o.action == "verify") {
    report = verify_isf_chi(g, options);
  } else if (o.action == "regions") {
    report = topology_report(g, options);
  } else if (o.action == "signed") {
    report = signed_report(g, options);
  } else {
    unknown_action(o);
  }
  return {report.to_json(), &report, report.summary()};
}

Outcome run_forest(const Options& o, Report& report) {
  const json input = read_input(o.input);
  const Budget budget = budget_of(o);
  if (input.is_object() && input.contains("labels")) {
    if (o.action != "verify") throw InputError("a parent-map forest supports only \"verify\"");
    const LabeledForest f = forest_from_json(input);
    const bool by_paths = forest_avoids(f, tight_patterns());
    const bool by_leaves = forest_avoids_by_leaves(f, tight_patterns());
    bool by_involution = true;
    for (const auto& p : f.root_paths()) by_involution = by_involution && is_tight_by_involution(p);
    const std::vector<Pattern> descent{{2, 1}};
    report.fact("tight", by_paths);
    report.fact("increasing", forest_avoids(f, descent));
    report.check("root_path_and_leaf_path_tests_agree", by_paths == by_leaves);
    report.check("pattern_and_involution_tests_agree", by_paths == by_involution);
    return {report.to_json(), &report, report.summary()};
  }
  const Graph input_graph = graph_from_json(input);
  const Graph g = relabel(input_graph, ordering_of(o, input_graph.n()));
  if (o.action == "tf") {
    const IntPolynomial p = tf_polynomial(g, budget);
    return {poly_to_json(p), nullptr, to_string(p)};
  }
  if (o.action == "qpo") {
    const auto paths = candidate_paths(g, budget);
    auto list = json::array();
    std::optional<CandidatePath> failing;
    for (const auto& p : paths) {
      list.push_back(p.vertices);
      if (!failing && !satisfies_qpo_condition(g, p)) failing = p;
    }
    json doc{{"qpo", !failing}, {"candidate_paths", list}};
    if (failing) doc["violation"] = failing->vertices;
    return {doc, nullptr, failing ? "not a QPO" : "QPO"};
  }
  if (o.action == "verify") {
    report = verify_tf_theorems(g, budget);
    return {report.to_json(), &report, report.summary()};
  }
  if (o.action == "roots") {
    report = tf_integer_roots_classification(g, nullptr, budget);
    return {report.to_json(), &report, report.summary()};
  }
  unknown_action(o);
}

Outcome run_gen(const Options& o) {
  Rng rng(o.seed);
  if (o.n < 1 || o.n > 62) throw InputError("--n must be in 1..62");
  if (o.action == "graph") return {to_json(random_graph(o.n, rng)), nullptr, "random graph"};
  if (o.action == "complex") return {to_json(random_pure_complex(o.n, o.d, rng)), nullptr, "random complex"};
  if (o.action == "multigraph") return {to_json(random_multigraph(o.n, o.max_edges, rng)), nullptr, "random multigraph"};
  unknown_action(o);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Increasing spanning forests, cage-free complexes, multigraph arrangements and tight forests"};
  app.set_help_all_flag("--help-all");
  Options o;
  app.add_option("kind", o.kind, "graph | complex | multigraph | forest | gen")->required();
  app.add_option("action", o.action, "action for the kind")->required();
  app.add_option("input", o.input, "input JSON file, or - for stdin");
  app.add_option("--ordering", o.ordering, "vertex ordering as a JSON array; vertex ordering[i] becomes i+1");
  app.add_option("--budget", o.budget, "largest edge or facet count for exhaustive subset sweeps");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--n", o.n, "vertex count for gen");
  app.add_option("--d", o.d, "dimension for gen complex");
  app.add_option("--s", o.s, "largest color bound for signed colorings");
  app.add_option("--max-edges", o.max_edges, "edge cap for gen multigraph");
  app.add_flag("--weighted", o.weighted, "weighted generating function for isf/cf");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    Report report;
    Outcome outcome;
    if (o.kind == "graph") {
      outcome = run_graph(o, report);
    } else if (o.kind == "complex") {
      outcome = run_complex(o, report);
    } else if (o.kind == "multigraph") {
      outcome = run_multigraph(o, report);
    } else if (o.kind == "forest") {
      outcome = run_forest(o, report);
    } else if (o.kind == "gen") {
      outcome = run_gen(o);
    } else {
      throw InputError("unknown kind \"" + o.kind + "\"");
    }
    out << outcome.document.dump() << "\n";
    err << outcome.summary << (outcome.summary.empty() || outcome.summary.back() == '\n' ? "" : "\n");
    return outcome.report && !outcome.report->passed() ? kExitAssertion : kExitOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitInput;
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace isfkit::cli
