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

#ifndef ISFKIT_RANDOM_HPP
#define ISFKIT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "isfkit/arrangement.hpp"
#include "isfkit/graph.hpp"
#include "isfkit/simplicial.hpp"

namespace isfkit {

/// Seeded generator. Only raw engine output is used (no std distributions),
/// so streams are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  bool coin() { return (engine_() >> 63) != 0; }
  /// Uniform on [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Erdos-Renyi graph on {1..n} with edge probability 1/2.
Graph random_graph(int n, Rng& rng);
/// Random graph with no 3-cycles: edges are offered in random order and kept
/// with probability 1/2 unless they would close a triangle.
Graph random_triangle_free_graph(int n, Rng& rng);
/// Random chordal graph, built by attaching each new vertex to a random clique.
Graph random_chordal_graph(int n, Rng& rng);

/// Pure d-complex on {1..n} keeping each (d+1)-subset with probability 1/2
/// (at least one facet is always kept).
PureComplex random_pure_complex(int n, int d, Rng& rng);
/// Shifted pure d-complex: random facets closed under replacing a vertex by a
/// smaller absent one.
PureComplex random_shifted_complex(int n, int d, Rng& rng);

/// Multigraph on {0..n} with at most max_edges edges; labels drawn from
/// {1,2,3,5,7}.
LabeledMultigraph random_multigraph(int n, int max_edges, Rng& rng);
/// Signed graph: labels +1/-1, at most two edges per pair, random 0-edges.
LabeledMultigraph random_signed_graph(int n, int max_edges, Rng& rng);
/// Adds edges demanded by the perfect-labeling rules until none is missing.
LabeledMultigraph perfect_closure(const LabeledMultigraph& g);

}  // namespace isfkit

#endif  // ISFKIT_RANDOM_HPP
