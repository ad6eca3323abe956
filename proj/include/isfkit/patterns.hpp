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

#ifndef ISFKIT_PATTERNS_HPP
#define ISFKIT_PATTERNS_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "isfkit/graph.hpp"
#include "isfkit/polynomial.hpp"
#include "isfkit/report.hpp"

namespace isfkit {

/// A permutation of {1..k}, written in one-line notation.
using Pattern = std::vector<int>;

/// {231, 312, 321}.
const std::vector<Pattern>& tight_patterns();

/// Throws InputError unless p is a permutation of {1..k}.
void require_pattern(std::span<const int> p);
/// The permutation of {1..k} order-isomorphic to seq. Throws InputError on
/// repeated entries.
Pattern standardize(std::span<const int> seq);

/// Some subsequence of seq is order-isomorphic to pattern.
bool contains_pattern(std::span<const int> seq, std::span<const int> pattern);
bool avoids_all(std::span<const int> seq, std::span<const Pattern> patterns);

/// Avoids 231, 312 and 321.
bool is_tight_sequence(std::span<const int> seq);
/// The standardization is an involution whose 2-cycles all swap i and i+1.
bool is_tight_by_involution(std::span<const int> seq);

/**
 * Forest on distinct positive labels given by parent pointers; each tree is
 * rooted at its minimum label.
 */
class LabeledForest {
 public:
  LabeledForest() = default;
  /// parent maps every label to its parent, or nullopt for a root. Throws
  /// InputError on cycles, unknown parents, or a root that is not the
  /// minimum of its tree.
  explicit LabeledForest(std::map<int, std::optional<int>> parent);
  /// Spanning forest of g selected by mask; throws InputError if it has a cycle.
  static LabeledForest from_edges(const Graph& g, EdgeMask subset);

  const std::map<int, std::optional<int>>& parents() const { return parent_; }
  /// Root-to-v path for every label v.
  std::vector<std::vector<int>> root_paths() const;
  /// Root-to-leaf paths only.
  std::vector<std::vector<int>> root_to_leaf_paths() const;

 private:
  std::map<int, std::optional<int>> parent_;
};

/// Every root-originating path avoids all patterns.
bool forest_avoids(const LabeledForest& f, std::span<const Pattern> patterns);
/// Same test restricted to root-to-leaf paths.
bool forest_avoids_by_leaves(const LabeledForest& f, std::span<const Pattern> patterns);
bool is_tight_forest(const LabeledForest& f);
/// Edge subset of g forming a tight forest (false for subsets with a cycle).
bool is_tight_forest(const Graph& g, EdgeMask subset);

/// Tight spanning forests by size. Throws BudgetExceeded beyond the budget.
SubsetCounts enumerate_tight_forests(const Graph& g, const Budget& budget = {}, bool list = false);
/// sum_m tf_m t^{n-m}.
IntPolynomial tf_polynomial(const Graph& g, const Budget& budget = {});

/// Path a, c, b, v_1, ..., v_m = d with a < b < c, m >= 1, and v_m the only
/// v_i below c.
struct CandidatePath {
  std::vector<int> vertices;
  int a() const { return vertices[0]; }
  int c() const { return vertices[1]; }
  int b() const { return vertices[2]; }
  int d() const { return vertices.back(); }
};

/// Largest vertex count for candidate path search.
inline constexpr int kCandidatePathMaxVertices = 12;

/// Throws BudgetExceeded above kCandidatePathMaxVertices vertices or beyond
/// budget.cycles paths.
std::vector<CandidatePath> candidate_paths(const Graph& g, const Budget& budget = {});
/// ad in E, or d < b and cd in E.
bool satisfies_qpo_condition(const Graph& g, const CandidatePath& p);
/// First candidate path failing the condition, if any.
std::optional<CandidatePath> qpo_violation(const Graph& g, const Budget& budget = {});
inline bool is_qpo(const Graph& g, const Budget& budget = {}) { return !qpo_violation(g, budget).has_value(); }

bool has_triangle(const Graph& g);
bool is_bipartite(const Graph& g);
/// Every cycle of length at least 5 has a chord.
bool long_cycles_have_chords(const Graph& g, const Budget& budget = {});

/// Permutations of {1..k} avoiding 231, 312 and 321, by depth-first search
/// with prefix pruning. Throws InputError outside 0..15.
BigInt tight_permutation_count(int k);

/// Containments between tight forests and NBC sets, the QPO equivalence on
/// triangle-free graphs, and the structural consequences of a QPO.
Report verify_tf_theorems(const Graph& g, const Budget& budget = {});

/// Caches TF polynomials by labeled graph.
class TfCache {
 public:
  const IntPolynomial& get(const Graph& g, const Budget& budget = {});

 private:
  std::map<std::pair<int, std::vector<Edge>>, IntPolynomial> cache_;
};

/// Tries every vertex ordering (n <= 6): some ordering gives a TF polynomial
/// with only integer roots iff g is a forest.
Report tf_integer_roots_classification(const Graph& g, TfCache* cache = nullptr, const Budget& budget = {});

}  // namespace isfkit

#endif  // ISFKIT_PATTERNS_HPP
