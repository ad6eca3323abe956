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

#include "isfkit/patterns.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "isfkit/errors.hpp"

namespace isfkit {

const std::vector<Pattern>& tight_patterns() {
  static const std::vector<Pattern> patterns{{2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  return patterns;
}

void require_pattern(std::span<const int> p) {
  std::vector<int> sorted(p.begin(), p.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) throw InputError("pattern is not a permutation of {1..k}");
}

Pattern standardize(std::span<const int> seq) {
  std::vector<int> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("sequence repeats an entry");
  Pattern out;
  for (int x : seq) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
  return out;
}

bool contains_pattern(std::span<const int> seq, std::span<const int> pattern) {
  require_pattern(pattern);
  standardize(seq);
  const std::size_t k = pattern.size();
  if (k > seq.size()) return false;
  if (k == 0) return true;
  std::vector<std::size_t> pos(k);
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<int> sub(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) sub[i] = seq[pos[i]];
    const Pattern st = standardize(sub);
    if (std::equal(st.begin(), st.end(), pattern.begin())) return true;
    // Next k-combination of positions.
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == seq.size() - k + i - 1) --i;
    if (i == 0) return false;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

bool avoids_all(std::span<const int> seq, std::span<const Pattern> patterns) {
  return std::none_of(patterns.begin(), patterns.end(), [&](const Pattern& p) { return contains_pattern(seq, p); });
}

namespace {

// (x, y, z) forms 231, 312 or 321: z is below x and the triple is not 213.
bool bad_triple(int x, int y, int z) { return (z < x && z < y) || (x > y && y > z) || (x > z && z > y); }

}  // namespace

bool is_tight_sequence(std::span<const int> seq) {
  standardize(seq);
  for (std::size_t k = 2; k < seq.size(); ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (bad_triple(seq[i], seq[j], seq[k])) return false;
  return true;
}

bool is_tight_by_involution(std::span<const int> seq) {
  const Pattern p = standardize(seq);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int image = p[i];
    const int self = static_cast<int>(i) + 1;
    if (p[static_cast<std::size_t>(image - 1)] != self) return false;
    if (std::abs(image - self) > 1) return false;
  }
  return true;
}

LabeledForest::LabeledForest(std::map<int, std::optional<int>> parent) : parent_(std::move(parent)) {
  for (const auto& [v, p] : parent_) {
    if (v < 1) throw InputError("forest labels must be positive");
    if (p && !parent_.contains(*p)) throw InputError("unknown parent " + std::to_string(*p));
  }
  for (const auto& [v, p] : parent_) {
    int x = v;
    std::size_t steps = 0;
    while (parent_.at(x)) {
      x = *parent_.at(x);
      if (++steps > parent_.size()) throw InputError("parent map has a cycle");
    }
    if (x > v) throw InputError("root " + std::to_string(x) + " is not the minimum of its tree");
  }
}

LabeledForest LabeledForest::from_edges(const Graph& g, EdgeMask subset) {
  if (!is_forest(g, subset)) throw InputError("edge set has a cycle");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n() + 1));
  for (EdgeMask m = subset; m != 0; m &= m - 1) {
    const auto& e = g.edges()[static_cast<std::size_t>(std::countr_zero(m))];
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::map<int, std::optional<int>> parent;
  for (int root = 1; root <= g.n(); ++root) {
    if (parent.contains(root)) continue;
    parent[root] = std::nullopt;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (parent.contains(w)) continue;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return LabeledForest(std::move(parent));
}

std::vector<std::vector<int>> LabeledForest::root_paths() const {
  std::vector<std::vector<int>> out;
  for (const auto& [v, p] : parent_) {
    std::vector<int> path{v};
    for (auto q = p; q; q = parent_.at(*q)) path.push_back(*q);
    std::reverse(path.begin(), path.end());
    out.push_back(std::move(path));
  }
  return out;
}

std::vector<std::vector<int>> LabeledForest::root_to_leaf_paths() const {
  std::set<int> internal;
  for (const auto& [v, p] : parent_)
    if (p) internal.insert(*p);
  std::vector<std::vector<int>> out;
  for (auto& path : root_paths())
    if (!internal.contains(path.back())) out.push_back(std::move(path));
  return out;
}

bool forest_avoids(const LabeledForest& f, std::span<const Pattern> patterns) {
  const auto paths = f.root_paths();
  return std::all_of(paths.begin(), paths.end(), [&](const std::vector<int>& p) { return avoids_all(p, patterns); });
}

bool forest_avoids_by_leaves(const LabeledForest& f, std::span<const Pattern> patterns) {
  const auto paths = f.root_to_leaf_paths();
  return std::all_of(paths.begin(), paths.end(), [&](const std::vector<int>& p) { return avoids_all(p, patterns); });
}

bool is_tight_forest(const LabeledForest& f) {
  const auto paths = f.root_paths();
  return std::all_of(paths.begin(), paths.end(), [](const std::vector<int>& p) { return is_tight_sequence(p); });
}

bool is_tight_forest(const Graph& g, EdgeMask subset) {
  if (!is_forest(g, subset)) return false;
  const int n = g.n();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + 1));
  for (EdgeMask m = subset; m != 0; m &= m - 1) {
    const auto& e = g.edges()[static_cast<std::size_t>(std::countr_zero(m))];
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  // Depth-first from each component minimum, carrying the current root path;
  // only triples ending at the newest vertex need checking.
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  std::vector<int> path;
  bool tight = true;
  auto dfs = [&](auto&& self, int v) -> void {
    for (std::size_t j = 1; j < path.size() && tight; ++j)
      for (std::size_t i = 0; i < j && tight; ++i)
        if (bad_triple(path[i], path[j], v)) tight = false;
    if (!tight) return;
    path.push_back(v);
    seen[static_cast<std::size_t>(v)] = true;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) self(self, w);
    path.pop_back();
  };
  for (int root = 1; root <= n && tight; ++root)
    if (!seen[static_cast<std::size_t>(root)]) dfs(dfs, root);
  return tight;
}

SubsetCounts enumerate_tight_forests(const Graph& g, const Budget& budget, bool list) {
  if (g.num_edges() > std::min(budget.subset_edges, kMaxMaskEdges))
    throw BudgetExceeded("graph has too many edges for subset enumeration");
  SubsetCounts out;
  out.counts.assign(static_cast<std::size_t>(g.n() + 1), BigInt(0));
  const EdgeMask full = g.full_mask();
  for (EdgeMask s = 0;; ++s) {
    if (is_tight_forest(g, s)) {
      out.counts[static_cast<std::size_t>(std::popcount(s))] += 1;
      if (list) out.members.push_back(s);
    }
    if (s == full) break;
  }
  while (out.counts.size() > 1 && out.counts.back() == 0) out.counts.pop_back();
  return out;
}

IntPolynomial tf_polynomial(const Graph& g, const Budget& budget) {
  return poly_from_counts(enumerate_tight_forests(g, budget).counts, static_cast<std::size_t>(g.n()));
}

std::vector<CandidatePath> candidate_paths(const Graph& g, const Budget& budget) {
  if (g.n() > kCandidatePathMaxVertices)
    throw BudgetExceeded("candidate path search supports at most " + std::to_string(kCandidatePathMaxVertices) + " vertices");
  std::vector<CandidatePath> out;
  std::vector<bool> on_path(static_cast<std::size_t>(g.n() + 1), false);
  std::vector<int> path;
  auto extend = [&](auto&& self, int c) -> void {
    for (int w : g.neighbors(path.back())) {
      if (on_path[static_cast<std::size_t>(w)]) continue;
      path.push_back(w);
      if (w < c) {
        out.push_back({path});
        if (out.size() > budget.cycles) throw BudgetExceeded("candidate path budget exceeded");
      } else {
        on_path[static_cast<std::size_t>(w)] = true;
        self(self, c);
        on_path[static_cast<std::size_t>(w)] = false;
      }
      path.pop_back();
    }
  };
  for (int c = 1; c <= g.n(); ++c) {
    const auto nbrs = g.neighbors(c);
    for (int a : nbrs) {
      for (int b : nbrs) {
        if (!(a < b && b < c)) continue;
        path = {a, c, b};
        for (int v : path) on_path[static_cast<std::size_t>(v)] = true;
        extend(extend, c);
        for (int v : path) on_path[static_cast<std::size_t>(v)] = false;
      }
    }
  }
  return out;
}

bool satisfies_qpo_condition(const Graph& g, const CandidatePath& p) {
  return g.has_edge(p.a(), p.d()) || (p.d() < p.b() && g.has_edge(p.c(), p.d()));
}

std::optional<CandidatePath> qpo_violation(const Graph& g, const Budget& budget) {
  for (const auto& p : candidate_paths(g, budget))
    if (!satisfies_qpo_condition(g, p)) return p;
  return std::nullopt;
}

bool has_triangle(const Graph& g) {
  for (const auto& e : g.edges())
    for (int w = e.v + 1; w <= g.n(); ++w)
      if (g.has_edge(e.u, w) && g.has_edge(e.v, w)) return true;
  return false;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.n() + 1), -1);
  for (int s = 1; s <= g.n(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[static_cast<std::size_t>(w)] < 0) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool long_cycles_have_chords(const Graph& g, const Budget& budget) {
  for (EdgeMask c : simple_cycles(g, budget)) {
    if (std::popcount(c) < 5) continue;
    std::vector<bool> on(static_cast<std::size_t>(g.n() + 1), false);
    for (EdgeMask m = c; m != 0; m &= m - 1) {
      const auto& e = g.edges()[static_cast<std::size_t>(std::countr_zero(m))];
      on[static_cast<std::size_t>(e.u)] = on[static_cast<std::size_t>(e.v)] = true;
    }
    bool chord = false;
    for (int i = 0; i < g.num_edges() && !chord; ++i) {
      const auto& e = g.edges()[static_cast<std::size_t>(i)];
      chord = !(c >> i & 1U) && on[static_cast<std::size_t>(e.u)] && on[static_cast<std::size_t>(e.v)];
    }
    if (!chord) return false;
  }
  return true;
}

BigInt tight_permutation_count(int k) {
  if (k < 0 || k > 15) throw InputError("tight permutation count supports 0 <= k <= 15");
  std::vector<int> perm;
  std::vector<bool> used(static_cast<std::size_t>(k + 1), false);
  BigInt total(0);
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(perm.size()) == k) {
      total += 1;
      return;
    }
    for (int z = 1; z <= k; ++z) {
      if (used[static_cast<std::size_t>(z)]) continue;
      bool ok = true;
      for (std::size_t j = 1; j < perm.size() && ok; ++j)
        for (std::size_t i = 0; i < j && ok; ++i)
          if (bad_triple(perm[i], perm[j], z)) ok = false;
      if (!ok) continue;
      used[static_cast<std::size_t>(z)] = true;
      perm.push_back(z);
      self(self);
      perm.pop_back();
      used[static_cast<std::size_t>(z)] = false;
    }
  };
  dfs(dfs);
  return total;
}

namespace {

nlohmann::json counts_json(const std::vector<BigInt>& c) {
  auto j = nlohmann::json::array();
  for (const auto& x : c) j.push_back(x.str());
  return j;
}

std::vector<BigInt> padded(std::vector<BigInt> c, std::size_t size) {
  c.resize(std::max(c.size(), size), BigInt(0));
  return c;
}

nlohmann::json mask_json(const Graph& g, EdgeMask s) {
  auto j = nlohmann::json::array();
  for (EdgeMask m = s; m != 0; m &= m - 1) {
    const auto& e = g.edges()[static_cast<std::size_t>(std::countr_zero(m))];
    j.push_back({e.u, e.v});
  }
  return j;
}

}  // namespace

Report verify_tf_theorems(const Graph& g, const Budget& budget) {
  Report r;
  const int n = g.n();
  const auto width = static_cast<std::size_t>(n + 1);
  const auto tf = enumerate_tight_forests(g, budget, true);
  const auto nbc = nbc_sets(g, EdgeOrder::lexicographic(g), budget, true);
  std::vector<EdgeMask> tf_sorted = tf.members, nbc_sorted = nbc.members;
  std::sort(tf_sorted.begin(), tf_sorted.end());
  std::sort(nbc_sorted.begin(), nbc_sorted.end());
  auto in = [](const std::vector<EdgeMask>& set, EdgeMask s) { return std::binary_search(set.begin(), set.end(), s); };

  const bool triangle = has_triangle(g);
  r.fact("has_triangle", triangle);
  const bool tf_in_nbc = std::all_of(tf_sorted.begin(), tf_sorted.end(), [&](EdgeMask s) { return in(nbc_sorted, s); });
  const bool nbc_in_tf = std::all_of(nbc_sorted.begin(), nbc_sorted.end(), [&](EdgeMask s) { return in(tf_sorted, s); });
  r.fact("tf_contained_in_nbc", tf_in_nbc);
  if (!triangle) r.check("triangle_free_tf_contained_in_nbc", tf_in_nbc);
  if (!tf_in_nbc) {
    for (EdgeMask s : tf_sorted) {
      if (!in(nbc_sorted, s)) {
        r.witness("tight_forest_not_nbc", mask_json(g, s));
        break;
      }
    }
  }

  // Two-edge sets: every NBC pair is a tight forest; a triangle adds a
  // tight pair that is a broken circuit.
  const auto tf_counts = padded(tf.counts, std::max<std::size_t>(width, 3));
  const auto nbc_counts = padded(nbc.counts, std::max<std::size_t>(width, 3));
  bool nbc2_in_tf2 = true;
  for (EdgeMask s : nbc_sorted)
    if (std::popcount(s) == 2 && !in(tf_sorted, s)) nbc2_in_tf2 = false;
  const bool tf2_strictly_larger = nbc2_in_tf2 && tf_counts[2] > nbc_counts[2];
  r.value("tf_2", tf_counts[2].str());
  r.value("nbc_2", nbc_counts[2].str());
  r.check("triangle_iff_tf2_strictly_contains_nbc2", triangle == tf2_strictly_larger);

  const IntPolynomial tf_poly = poly_from_counts(tf.counts, static_cast<std::size_t>(n));
  const IntPolynomial p = chromatic_polynomial(g);
  const bool signed_eq = r.identity("tf_vs_signed_chromatic", tf_poly, signed_reflect(p, n));
  r.fact("tf_equals_signed_chromatic", signed_eq);
  if (triangle) r.check("triangle_breaks_tf_chromatic_identity", !signed_eq);

  const bool sets_equal = tf_in_nbc && nbc_in_tf;
  r.fact("nbc_equals_tf", sets_equal);
  if (n <= kCandidatePathMaxVertices) {
    const auto violation = qpo_violation(g, budget);
    const bool qpo = !violation;
    r.fact("qpo", qpo);
    if (violation) r.witness("qpo_violation", violation->vertices);
    if (!triangle) r.check("triangle_free_qpo_nbc_tf_equivalence", qpo == sets_equal && sets_equal == signed_eq);
    if (qpo) {
      r.check("qpo_long_cycles_have_chords", long_cycles_have_chords(g, budget));
      if (!triangle) r.check("qpo_triangle_free_is_bipartite", is_bipartite(g));
    }
  }

  std::size_t closure_failures = 0;
  for (EdgeMask s : tf_sorted)
    for (EdgeMask m = s; m != 0; m &= m - 1)
      if (!in(tf_sorted, s & ~(m & -m))) ++closure_failures;
  r.check("tight_forests_closed_under_subforests", closure_failures == 0);

  // Increasing forests are exactly those whose root paths avoid 21.
  const std::vector<Pattern> descent{{2, 1}};
  std::size_t increasing_mismatch = 0;
  const EdgeMask full = g.full_mask();
  for (EdgeMask s = 0;; ++s) {
    if (is_forest(g, s) && forest_avoids(LabeledForest::from_edges(g, s), descent) != is_increasing_forest(g, s))
      ++increasing_mismatch;
    if (s == full) break;
  }
  r.check("increasing_iff_avoids_21", increasing_mismatch == 0);

  r.value("tf_counts", counts_json(tf.counts));
  r.value("nbc_counts", counts_json(nbc.counts));
  r.value("tf_polynomial", poly_to_json(tf_poly));
  return r;
}

const IntPolynomial& TfCache::get(const Graph& g, const Budget& budget) {
  auto key = std::make_pair(g.n(), g.edges());
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(std::move(key), tf_polynomial(g, budget)).first;
  return it->second;
}

Report tf_integer_roots_classification(const Graph& g, TfCache* cache, const Budget& budget) {
  if (g.n() > 6) throw BudgetExceeded("integer-root classification tries all orderings; n <= 6");
  TfCache local;
  TfCache& tfs = cache ? *cache : local;
  Report r;
  std::vector<int> ordering = natural_ordering(g.n());
  std::optional<std::vector<int>> found;
  do {
    const IntPolynomial& tf = tfs.get(relabel(g, ordering), budget);
    if (poly_integer_roots(tf)) {
      found = ordering;
      break;
    }
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  const bool forest = is_forest(g, g.full_mask());
  r.fact("some_ordering_has_integer_roots", found.has_value());
  r.fact("forest", forest);
  r.check("integer_roots_iff_forest", found.has_value() == forest);
  if (found) {
    r.witness("ordering", *found);
    r.value("tf_polynomial", poly_to_json(tfs.get(relabel(g, *found), budget)));
  }
  return r;
}

}  // namespace isfkit
