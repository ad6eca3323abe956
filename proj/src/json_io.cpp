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

#include "isfkit/json_io.hpp"

#include <charconv>

#include "isfkit/errors.hpp"

namespace isfkit {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field \"") + name + "\"");
  return *it;
}

int as_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1'000'000 || v > 1'000'000) throw InputError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

const nlohmann::json& as_array(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError("rational must be a string like \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(std::string("bad rational: ") + e.what());
  }
}

}  // namespace

Graph graph_from_json(const nlohmann::json& j) {
  const int n = as_int(field(j, "n"), "n");
  std::vector<Edge> edges;
  for (const auto& e : as_array(field(j, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
    edges.push_back({as_int(e[0], "vertex"), as_int(e[1], "vertex")});
  }
  return Graph(n, std::move(edges));
}

nlohmann::json to_json(const Graph& g) {
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.n()}, {"edges", edges}};
}

PureComplex complex_from_json(const nlohmann::json& j) {
  const int n = as_int(field(j, "n"), "n");
  const int d = as_int(field(j, "d"), "d");
  std::vector<Simplex> facets;
  for (const auto& f : as_array(field(j, "facets"), "facets")) {
    Simplex s;
    for (const auto& v : as_array(f, "facet")) s.push_back(as_int(v, "vertex"));
    facets.push_back(std::move(s));
  }
  return PureComplex(n, d, std::move(facets));
}

nlohmann::json to_json(const PureComplex& c) {
  return {{"n", c.n()}, {"d", c.d()}, {"facets", c.facets()}};
}

GaussRational label_from_json(const nlohmann::json& j) {
  if (j.is_object()) {
    Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
    Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    return GaussRational(std::move(re), std::move(im));
  }
  return GaussRational(rational_from_json(j));
}

nlohmann::json to_json(const GaussRational& z) { return {{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

LabeledMultigraph multigraph_from_json(const nlohmann::json& j) {
  const int n = as_int(field(j, "n"), "n");
  std::vector<int> zero;
  if (j.contains("zero_edges"))
    for (const auto& k : as_array(j.at("zero_edges"), "zero_edges")) zero.push_back(as_int(k, "vertex"));
  std::vector<MultiEdge> labeled;
  if (j.contains("edges")) {
    for (const auto& e : as_array(j.at("edges"), "edges")) {
      if (!e.is_array() || e.size() != 3) throw InputError("labeled edge must be [i, j, label]");
      labeled.push_back({as_int(e[0], "vertex"), as_int(e[1], "vertex"), label_from_json(e[2])});
    }
  }
  return LabeledMultigraph(n, std::move(zero), std::move(labeled));
}

nlohmann::json to_json(const LabeledMultigraph& g) {
  auto edges = nlohmann::json::array();
  for (const auto& e : g.labeled_edges()) edges.push_back({e.i, e.j, to_json(e.label)});
  return {{"n", g.n()}, {"zero_edges", g.zero_edges()}, {"edges", edges}};
}

LabeledForest forest_from_json(const nlohmann::json& j) {
  std::map<int, std::optional<int>> parent;
  auto parse_label = [](const nlohmann::json& v) {
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      int out = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("bad forest label \"" + s + "\"");
      return out;
    }
    return as_int(v, "forest label");
  };
  for (const auto& v : as_array(field(j, "labels"), "labels")) {
    const int label = parse_label(v);
    if (!parent.emplace(label, std::nullopt).second) throw InputError("repeated forest label");
  }
  const auto& parents = field(j, "parents");
  if (!parents.is_object()) throw InputError("parents must be an object");
  for (const auto& [key, value] : parents.items()) {
    const int v = parse_label(key);
    auto it = parent.find(v);
    if (it == parent.end()) throw InputError("parent given for unknown label " + key);
    if (!value.is_null()) it->second = parse_label(value);
  }
  return LabeledForest(std::move(parent));
}

nlohmann::json to_json(const LabeledForest& f) {
  auto labels = nlohmann::json::array();
  nlohmann::json parents = nlohmann::json::object();
  for (const auto& [v, p] : f.parents()) {
    labels.push_back(v);
    parents[std::to_string(v)] = p ? nlohmann::json(std::to_string(*p)) : nlohmann::json(nullptr);
  }
  return {{"labels", labels}, {"parents", parents}};
}

std::vector<int> ordering_from_json(const nlohmann::json& j, int n) {
  std::vector<int> out;
  for (const auto& v : as_array(j, "ordering")) out.push_back(as_int(v, "vertex"));
  require_permutation(n, out);
  return out;
}

}  // namespace isfkit
