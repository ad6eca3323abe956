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

#ifndef ISFKIT_JSON_IO_HPP
#define ISFKIT_JSON_IO_HPP

#include <json.hpp>

#include "isfkit/arrangement.hpp"
#include "isfkit/graph.hpp"
#include "isfkit/patterns.hpp"
#include "isfkit/simplicial.hpp"

namespace isfkit {

// Every parser throws InputError on a schema violation.

/// {"n": int, "edges": [[i, j], ...]}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Graph& g);

/// {"n": int, "d": int, "facets": [[v, ...], ...]}
PureComplex complex_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PureComplex& c);

/// {"n": int, "zero_edges": [k, ...], "edges": [[i, j, {"re": "p/q", "im": "r/s"}], ...]}
/// A label may also be a bare rational string or integer.
LabeledMultigraph multigraph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LabeledMultigraph& g);
GaussRational label_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GaussRational& z);

/// {"labels": [...], "parents": {"v": parent or null}}
LabeledForest forest_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LabeledForest& f);

/// Array of n distinct vertices.
std::vector<int> ordering_from_json(const nlohmann::json& j, int n);

}  // namespace isfkit

#endif  // ISFKIT_JSON_IO_HPP
