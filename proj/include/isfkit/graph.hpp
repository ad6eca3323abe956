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

#ifndef ISFKIT_GRAPH_HPP
#define ISFKIT_GRAPH_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isfkit/polynomial.hpp"
#include "isfkit/report.hpp"
#include "isfkit/weighted_gf.hpp"

namespace isfkit {

class Rng;

/// Undirected edge written with its smaller endpoint first.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Bit i selects edge i of the parent graph's lexicographic edge list.
using EdgeMask = std::uint64_t;

/// Largest edge count any exhaustive enumeration accepts, whatever the budget.
inline constexpr int kMaxMaskEdges = 62;

/// Size caps for the exponential paths.
struct Budget {
  int subset_edges = 25;          // 2^|E| subset sweeps
  std::size_t cycles = 1'000'000; // simple-cycle enumeration
  int orientation_edges = 20;     // 2^|E| orientation sweep
};

/**
 * Simple graph on the vertex set {1..n}.
 *
 * Edges are stored sorted lexicographically on (u, v) with u < v; an edge's
 * position in that list is its index, and EdgeMask bits refer to it.
 */
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on loops, duplicates, or endpoints outside {1..n}.
  /// Endpoints may be given in either order.
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int a, int b) const { return edge_index(a, b) >= 0; }
  /// -1 if absent.
  int edge_index(int a, int b) const;
  std::vector<int> neighbors(int v) const;
  EdgeMask full_mask() const;

  /// Spanning subgraph with the selected edges.
  Graph subgraph(EdgeMask subset) const;
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> index_;  // (n+1)^2 table of edge indices, -1 if absent
};

/// Vertex ordering[i] is renamed i + 1. Throws InputError unless ordering is a
/// permutation of {1..n}.
Graph relabel(const Graph& g, std::span<const int> ordering);
std::vector<int> natural_ordering(int n);
void require_permutation(int n, std::span<const int> ordering);

/// Total order on a graph's edges, stored as rank per edge index.
class EdgeOrder {
 public:
  static EdgeOrder lexicographic(const Graph& g);
  /// sequence lists every edge once, smallest first.
  static EdgeOrder from_sequence(const Graph& g, std::span<const Edge> sequence);
  static EdgeOrder random(const Graph& g, Rng& rng);

  int rank(int edge_index) const { return rank_[static_cast<std::size_t>(edge_index)]; }
  /// Edge index of the order-smallest edge in a nonempty mask.
  int smallest(EdgeMask mask) const;

 private:
  std::vector<int> rank_;
};

/// E_k = { jk : j < k } for k = 1..n; entry 0 is unused and empty.
std::vector<std::vector<Edge>> edge_partition(const Graph& g);

/// No vertex k carries two selected edges ik, jk with i, j < k.
bool is_increasing_forest(const Graph& g, EdgeMask subset);
inline bool is_increasing_forest(const Graph& f) { return is_increasing_forest(f, f.full_mask()); }
/// Same predicate checked from the definition: acyclic, and every path from
/// each component's minimum vertex increases.
bool is_increasing_forest_by_paths(const Graph& g, EdgeMask subset);
bool is_forest(const Graph& g, EdgeMask subset);

/// counts[m] = number of selected subsets with m edges; members lists them
/// when requested.
struct SubsetCounts {
  std::vector<BigInt> counts;
  std::vector<EdgeMask> members;
};

/// Throws BudgetExceeded if |E| exceeds the budget.
SubsetCounts enumerate_isf(const Graph& g, const Budget& budget = {}, bool list = false);
/// prod_k (t + |E_k|).
IntPolynomial isf_polynomial(const Graph& g);
/// prod_k (t + sum_{e in E_k} x_e); variable ids are edge indices.
WeightedGF isf_weighted(const Graph& g);
/// Sum over increasing spanning forests F of x_F t^{n-|F|}.
WeightedGF isf_weighted_by_enumeration(const Graph& g, const Budget& budget = {});
/// "x_{u,v}" naming for edge-indexed weight variables.
std::string edge_variable_name(const Graph& g, int edge_index);

/// Every simple cycle once, as an edge mask. Throws BudgetExceeded beyond
/// budget.cycles cycles.
std::vector<EdgeMask> simple_cycles(const Graph& g, const Budget& budget = {});
/// Cycles minus their order-smallest edge, deduplicated and sorted.
std::vector<EdgeMask> broken_circuits(const Graph& g, const EdgeOrder& order, const Budget& budget = {});
/// Edge subsets containing no broken circuit.
SubsetCounts nbc_sets(const Graph& g, const EdgeOrder& order, const Budget& budget = {}, bool list = false);
/// sum_m (-1)^m c_m t^{n-m}.
IntPolynomial whitney_polynomial(std::span<const BigInt> nbc_counts, int n);

/// Largest n for which colorings are counted one by one.
inline constexpr int kColoringMaxVertices = 8;

/// Chromatic polynomial by deletion-contraction. For n <= kColoringMaxVertices
/// it is also interpolated from brute-force coloring counts; throws
/// InternalError if the two disagree.
IntPolynomial chromatic_polynomial(const Graph& g);
IntPolynomial chromatic_by_deletion_contraction(const Graph& g);
/// Throws BudgetExceeded for n > kColoringMaxVertices.
IntPolynomial chromatic_by_interpolation(const Graph& g);
/// Proper colorings with colors {1..t}.
BigInt count_proper_colorings(const Graph& g, int t);

/// ordering lists v_1..v_n; checks that for i<j<k, v_i v_k and v_j v_k in E
/// imply v_i v_j in E.
bool is_peo(const Graph& g, std::span<const int> ordering);
/// First (v_i, v_j, v_k) violating the PEO condition.
std::optional<std::array<int, 3>> peo_violation(const Graph& g, std::span<const int> ordering);
/// Visit order of maximum cardinality search (ties to the smallest label).
std::vector<int> maximum_cardinality_search(const Graph& g);
/// A PEO if the graph is chordal.
std::optional<std::vector<int>> find_peo(const Graph& g);

/// (-1)^n P(G,-1), cross-checked against an orientation sweep when |E| is
/// within budget.orientation_edges; throws InternalError on disagreement.
BigInt acyclic_orientation_count(const Graph& g, const Budget& budget = {});
/// std::nullopt when over budget.
std::optional<BigInt> count_acyclic_orientations_by_enumeration(const Graph& g, const Budget& budget = {});

struct GraphVerifyOptions {
  Budget budget;
  int random_orders = 5;  // extra edge orders for the order-independence check
  std::uint64_t seed = 0;
};

/// Containment and equality relations between increasing spanning forests,
/// NBC sets, PEOs, chromatic polynomial and acyclic orientations.
Report verify_isf_nbc(const Graph& g, const GraphVerifyOptions& options = {});

}  // namespace isfkit

#endif  // ISFKIT_GRAPH_HPP
