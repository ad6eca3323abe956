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

#include "isfkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ranges>
#include <set>

#include "isfkit/errors.hpp"
#include "isfkit/random.hpp"

namespace isfkit {

std::string to_string(const Edge& e) {
  if (e.u < 10 && e.v < 10) return std::to_string(e.u) + std::to_string(e.v);
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v > n) throw InputError("edge " + to_string(e) + " outside {1.." + std::to_string(n) + "}");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InputError("duplicate edge");
  edges_ = std::move(edges);
  const auto side = static_cast<std::size_t>(n + 1);
  index_.assign(side * side, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    index_[static_cast<std::size_t>(u) * side + static_cast<std::size_t>(v)] = static_cast<int>(i);
    index_[static_cast<std::size_t>(v) * side + static_cast<std::size_t>(u)] = static_cast<int>(i);
  }
}

int Graph::edge_index(int a, int b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_) return -1;
  const auto side = static_cast<std::size_t>(n_ + 1);
  return index_[static_cast<std::size_t>(a) * side + static_cast<std::size_t>(b)];
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 1; w <= n_; ++w)
    if (has_edge(v, w)) out.push_back(w);
  return out;
}

EdgeMask Graph::full_mask() const {
  if (num_edges() > kMaxMaskEdges) throw BudgetExceeded("too many edges for a subset mask");
  return num_edges() == 0 ? 0 : (EdgeMask{1} << num_edges()) - 1;
}

Graph Graph::subgraph(EdgeMask subset) const {
  std::vector<Edge> kept;
  for (int i = 0; i < num_edges(); ++i)
    if (subset >> i & 1U) kept.push_back(edges_[static_cast<std::size_t>(i)]);
  return Graph(n_, std::move(kept));
}

void require_permutation(int n, std::span<const int> ordering) {
  if (static_cast<int>(ordering.size()) != n) throw InputError("ordering has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int v : ordering) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw InputError("ordering is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Graph relabel(const Graph& g, std::span<const int> ordering) {
  require_permutation(g.n(), ordering);
  std::vector<int> label(static_cast<std::size_t>(g.n() + 1));
  for (std::size_t i = 0; i < ordering.size(); ++i) label[static_cast<std::size_t>(ordering[i])] = static_cast<int>(i) + 1;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]});
  return Graph(g.n(), std::move(edges));
}

std::vector<int> natural_ordering(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

EdgeOrder EdgeOrder::lexicographic(const Graph& g) {
  EdgeOrder o;
  o.rank_.resize(static_cast<std::size_t>(g.num_edges()));
  std::iota(o.rank_.begin(), o.rank_.end(), 0);
  return o;
}

EdgeOrder EdgeOrder::from_sequence(const Graph& g, std::span<const Edge> sequence) {
  if (static_cast<int>(sequence.size()) != g.num_edges()) throw InputError("edge order must list every edge");
  EdgeOrder o;
  o.rank_.assign(static_cast<std::size_t>(g.num_edges()), -1);
  for (std::size_t r = 0; r < sequence.size(); ++r) {
    const int idx = g.edge_index(sequence[r].u, sequence[r].v);
    if (idx < 0 || o.rank_[static_cast<std::size_t>(idx)] >= 0) throw InputError("edge order is not a permutation of the edges");
    o.rank_[static_cast<std::size_t>(idx)] = static_cast<int>(r);
  }
  return o;
}

EdgeOrder EdgeOrder::random(const Graph& g, Rng& rng) {
  EdgeOrder o = lexicographic(g);
  rng.shuffle(o.rank_);
  return o;
}

int EdgeOrder::smallest(EdgeMask mask) const {
  int best = -1;
  for (EdgeMask m = mask; m != 0; m &= m - 1) {
    const int i = std::countr_zero(m);
    if (best < 0 || rank(i) < rank(best)) best = i;
  }
  return best;
}

std::vector<std::vector<Edge>> edge_partition(const Graph& g) {
  std::vector<std::vector<Edge>> parts(static_cast<std::size_t>(g.n() + 1));
  for (const auto& e : g.edges()) parts[static_cast<std::size_t>(e.v)].push_back(e);
  return parts;
}

bool is_increasing_forest(const Graph& g, EdgeMask subset) {
  std::vector<bool> has_lower(static_cast<std::size_t>(g.n() + 1), false);
  for (EdgeMask m = subset; m != 0; m &= m - 1) {
    const int top = g.edges()[static_cast<std::size_t>(std::countr_zero(m))].v;
    if (has_lower[static_cast<std::size_t>(top)]) return false;
    has_lower[static_cast<std::size_t>(top)] = true;
  }
  return true;
}

namespace {

std::vector<std::vector<int>> adjacency(const Graph& g, EdgeMask subset) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n() + 1));
  for (EdgeMask m = subset; m != 0; m &= m - 1) {
    const auto& e = g.edges()[static_cast<std::size_t>(std::countr_zero(m))];
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

}  // namespace

bool is_forest(const Graph& g, EdgeMask subset) {
  std::vector<int> parent(static_cast<std::size_t>(g.n() + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (EdgeMask m = subset; m != 0; m &= m - 1) {
    const auto& e = g.edges()[static_cast<std::size_t>(std::countr_zero(m))];
    const int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

bool is_increasing_forest_by_paths(const Graph& g, EdgeMask subset) {
  if (!is_forest(g, subset)) return false;
  const auto adj = adjacency(g, subset);
  std::vector<bool> seen(static_cast<std::size_t>(g.n() + 1), false);
  // Scanning vertices in increasing order reaches each component first at its
  // minimum, which is the root.
  for (int root = 1; root <= g.n(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<int> stack{root};
    seen[static_cast<std::size_t>(root)] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        if (w < v) return false;  // the root path to w descends at v -> w
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return true;
}

namespace {

void require_subset_budget(const Graph& g, int limit) {
  if (g.num_edges() > std::min(limit, kMaxMaskEdges))
    throw BudgetExceeded("graph has " + std::to_string(g.num_edges()) + " edges; subset budget is " + std::to_string(limit));
}

}  // namespace

SubsetCounts enumerate_isf(const Graph& g, const Budget& budget, bool list) {
  require_subset_budget(g, budget.subset_edges);
  SubsetCounts out;
  out.counts.assign(static_cast<std::size_t>(g.n() + 1), BigInt(0));
  const EdgeMask full = g.full_mask();
  for (EdgeMask s = 0;; ++s) {
    if (is_increasing_forest(g, s)) {
      out.counts[static_cast<std::size_t>(std::popcount(s))] += 1;
      if (list) out.members.push_back(s);
    }
    if (s == full) break;
  }
  while (out.counts.size() > 1 && out.counts.back() == 0) out.counts.pop_back();
  return out;
}

IntPolynomial isf_polynomial(const Graph& g) {
  std::vector<long> sizes;
  const auto parts = edge_partition(g);
  for (const auto& part : parts | std::views::drop(1)) sizes.push_back(static_cast<long>(part.size()));
  return poly_from_linear_factors(sizes);
}

WeightedGF isf_weighted(const Graph& g) {
  WeightedGF out = WeightedGF::one();
  const auto parts = edge_partition(g);
  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::vector<int> vars;
    for (const auto& e : parts[k]) vars.push_back(g.edge_index(e.u, e.v));
    out = out * WeightedGF::linear_factor(vars);
  }
  return out;
}

WeightedGF isf_weighted_by_enumeration(const Graph& g, const Budget& budget) {
  const auto forests = enumerate_isf(g, budget, true);
  WeightedGF out;
  for (EdgeMask s : forests.members) {
    WeightedGF::Monomial vars;
    for (EdgeMask m = s; m != 0; m &= m - 1) vars.push_back(std::countr_zero(m));
    out.add_term(std::move(vars), g.n() - std::popcount(s), BigInt(1));
  }
  return out;
}

std::string edge_variable_name(const Graph& g, int edge_index) {
  const auto& e = g.edges()[static_cast<std::size_t>(edge_index)];
  return "x_{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::vector<EdgeMask> simple_cycles(const Graph& g, const Budget& budget) {
  if (g.num_edges() > kMaxMaskEdges) throw BudgetExceeded("too many edges for cycle masks");
  std::vector<EdgeMask> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(g.n() + 1), false);
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(g.n() + 1));
  for (int v = 1; v <= g.n(); ++v) nbrs[static_cast<std::size_t>(v)] = g.neighbors(v);

  // Each cycle is found from its minimum vertex s, walking only through
  // vertices above s; requiring path[1] < path.back() keeps one direction.
  auto mask_of_path = [&g](const std::vector<int>& p) {
    EdgeMask m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) m |= EdgeMask{1} << g.edge_index(p[i], p[i + 1]);
    m |= EdgeMask{1} << g.edge_index(p.back(), p.front());
    return m;
  };
  auto dfs = [&](auto&& self, int s, int v) -> void {
    for (int w : nbrs[static_cast<std::size_t>(v)]) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        cycles.push_back(mask_of_path(path));
        if (cycles.size() > budget.cycles) throw BudgetExceeded("cycle enumeration budget exceeded");
      }
      if (w <= s || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      self(self, s, w);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int s = 1; s <= g.n(); ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = true;
    dfs(dfs, s, s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::vector<EdgeMask> broken_circuits(const Graph& g, const EdgeOrder& order, const Budget& budget) {
  std::set<EdgeMask> out;
  for (EdgeMask c : simple_cycles(g, budget)) out.insert(c & ~(EdgeMask{1} << order.smallest(c)));
  return {out.begin(), out.end()};
}

SubsetCounts nbc_sets(const Graph& g, const EdgeOrder& order, const Budget& budget, bool list) {
  require_subset_budget(g, budget.subset_edges);
  // Only inclusion-minimal broken circuits matter for the filter.
  auto bcs = broken_circuits(g, order, budget);
  std::sort(bcs.begin(), bcs.end(), [](EdgeMask a, EdgeMask b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  std::vector<EdgeMask> minimal;
  for (EdgeMask b : bcs) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [b](EdgeMask m) { return (b & m) == m; });
    if (!redundant) minimal.push_back(b);
  }
  SubsetCounts out;
  out.counts.assign(static_cast<std::size_t>(g.n() + 1), BigInt(0));
  const EdgeMask full = g.full_mask();
  for (EdgeMask s = 0;; ++s) {
    const bool nbc = std::none_of(minimal.begin(), minimal.end(), [s](EdgeMask b) { return (s & b) == b; });
    if (nbc) {
      const auto m = static_cast<std::size_t>(std::popcount(s));
      if (m >= out.counts.size()) out.counts.resize(m + 1, BigInt(0));
      out.counts[m] += 1;
      if (list) out.members.push_back(s);
    }
    if (s == full) break;
  }
  while (out.counts.size() > 1 && out.counts.back() == 0) out.counts.pop_back();
  return out;
}

IntPolynomial whitney_polynomial(std::span<const BigInt> nbc_counts, int n) {
  std::vector<BigInt> signed_counts(nbc_counts.begin(), nbc_counts.end());
  for (std::size_t m = 1; m < signed_counts.size(); m += 2) signed_counts[m] = -signed_counts[m];
  return poly_from_counts(signed_counts, static_cast<std::size_t>(n));
}

std::optional<std::array<int, 3>> peo_violation(const Graph& g, std::span<const int> ordering) {
  require_permutation(g.n(), ordering);
  for (std::size_t k = 0; k < ordering.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!g.has_edge(ordering[j], ordering[k])) continue;
      for (std::size_t i = 0; i < j; ++i) {
        if (g.has_edge(ordering[i], ordering[k]) && !g.has_edge(ordering[i], ordering[j]))
          return std::array<int, 3>{ordering[i], ordering[j], ordering[k]};
      }
    }
  }
  return std::nullopt;
}

bool is_peo(const Graph& g, std::span<const int> ordering) { return !peo_violation(g, ordering).has_value(); }

std::vector<int> maximum_cardinality_search(const Graph& g) {
  std::vector<int> weight(static_cast<std::size_t>(g.n() + 1), 0);
  std::vector<bool> visited(static_cast<std::size_t>(g.n() + 1), false);
  std::vector<int> order;
  for (int step = 0; step < g.n(); ++step) {
    int best = -1;
    for (int v = 1; v <= g.n(); ++v)
      if (!visited[static_cast<std::size_t>(v)] && (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])) best = v;
    visited[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!visited[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
  }
  return order;
}

std::optional<std::vector<int>> find_peo(const Graph& g) {
  auto order = maximum_cardinality_search(g);
  if (!is_peo(g, order)) return std::nullopt;
  return order;
}

std::optional<BigInt> count_acyclic_orientations_by_enumeration(const Graph& g, const Budget& budget) {
  if (g.num_edges() > std::min(budget.orientation_edges, kMaxMaskEdges) || g.n() > 64) return std::nullopt;
  BigInt total(0);
  const EdgeMask full = g.full_mask();
  const int n = g.n();
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
  for (EdgeMask flip = 0;; ++flip) {
    std::fill(out.begin(), out.end(), 0);
    for (int i = 0; i < g.num_edges(); ++i) {
      auto [u, v] = g.edges()[static_cast<std::size_t>(i)];
      if (flip >> i & 1U) std::swap(u, v);
      out[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
    }
    // Repeatedly strip sinks; the orientation is acyclic iff all vertices go.
    std::uint64_t alive = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    bool progress = true;
    while (alive != 0 && progress) {
      progress = false;
      for (int v = 0; v < n; ++v) {
        if ((alive >> v & 1U) && (out[static_cast<std::size_t>(v)] & alive) == 0) {
          alive &= ~(std::uint64_t{1} << v);
          progress = true;
        }
      }
    }
    if (alive == 0) total += 1;
    if (flip == full) break;
  }
  return total;
}

BigInt acyclic_orientation_count(const Graph& g, const Budget& budget) {
  const IntPolynomial p = chromatic_polynomial(g);
  BigInt ao = p(BigInt(-1));
  if (g.n() % 2 != 0) ao = -ao;
  if (auto brute = count_acyclic_orientations_by_enumeration(g, budget); brute && *brute != ao)
    throw InternalError("acyclic orientation counts disagree: " + ao.str() + " vs " + brute->str());
  return ao;
}

namespace {

nlohmann::json counts_json(const std::vector<BigInt>& c) {
  auto j = nlohmann::json::array();
  for (const auto& x : c) j.push_back(x.str());
  return j;
}

nlohmann::json mask_json(const Graph& g, EdgeMask s) {
  auto j = nlohmann::json::array();
  for (EdgeMask m = s; m != 0; m &= m - 1) {
    const auto& e = g.edges()[static_cast<std::size_t>(std::countr_zero(m))];
    j.push_back({e.u, e.v});
  }
  return j;
}

std::vector<BigInt> padded(std::vector<BigInt> c, std::size_t size) {
  c.resize(std::max(c.size(), size), BigInt(0));
  return c;
}

}  // namespace

Report verify_isf_nbc(const Graph& g, const GraphVerifyOptions& options) {
  Report r;
  const int n = g.n();
  const std::size_t width = static_cast<std::size_t>(n + 1);

  const auto isf = enumerate_isf(g, options.budget, true);
  const IntPolynomial isf_fact = isf_polynomial(g);
  const IntPolynomial isf_enum = poly_from_counts(isf.counts, static_cast<std::size_t>(n));
  r.check("isf_enumeration_matches_factorization",
          r.identity("isf_enumeration_vs_factorization", isf_enum, isf_fact));

  std::size_t definitional_mismatch = 0;
  const EdgeMask full = g.full_mask();
  for (EdgeMask s = 0;; ++s) {
    if (is_increasing_forest(g, s) != is_increasing_forest_by_paths(g, s)) ++definitional_mismatch;
    if (s == full) break;
  }
  r.check("increasing_forest_criteria_agree", definitional_mismatch == 0,
          std::to_string(definitional_mismatch) + " subsets disagree");

  const EdgeOrder lex = EdgeOrder::lexicographic(g);
  const auto nbc = nbc_sets(g, lex, options.budget, true);
  std::vector<EdgeMask> nbc_sorted = nbc.members;
  std::sort(nbc_sorted.begin(), nbc_sorted.end());
  const bool contained = std::all_of(isf.members.begin(), isf.members.end(), [&](EdgeMask s) {
    return std::binary_search(nbc_sorted.begin(), nbc_sorted.end(), s);
  });
  r.check("isf_contained_in_nbc_lex_order", contained);

  const auto isf_counts = padded(isf.counts, width);
  const auto nbc_counts = padded(nbc.counts, width);
  const bool equal_all = contained && isf_counts == nbc_counts;
  const bool equal_m2 = contained && isf_counts[std::min<std::size_t>(2, width - 1)] == nbc_counts[std::min<std::size_t>(2, width - 1)];
  const auto ordering = natural_ordering(n);
  const auto violation = peo_violation(g, ordering);
  const bool peo = !violation;
  r.fact("isf_equals_nbc_all_m", equal_all);
  r.fact("isf_equals_nbc_m2", n >= 2 ? equal_m2 : equal_all);
  r.fact("natural_order_is_peo", peo);
  r.fact("chordal", find_peo(g).has_value());
  r.check("isf_nbc_peo_equivalence", equal_all == equal_m2 && equal_m2 == peo);
  if (violation) r.witness("peo_violation", {(*violation)[0], (*violation)[1], (*violation)[2]});
  for (EdgeMask s : nbc.members) {
    if (!is_increasing_forest(g, s)) {
      r.witness("nbc_not_increasing", mask_json(g, s));
      break;
    }
  }

  // Order independence of the NBC counts.
  Rng rng(options.seed);
  bool order_independent = true;
  for (int i = 0; i < options.random_orders; ++i) {
    const auto other = nbc_sets(g, EdgeOrder::random(g, rng), options.budget);
    if (padded(other.counts, width) != nbc_counts) order_independent = false;
  }
  r.check("nbc_counts_order_independent", order_independent,
          std::to_string(options.random_orders) + " random edge orders");

  const IntPolynomial p_dc = chromatic_by_deletion_contraction(g);
  if (n <= kColoringMaxVertices) {
    const IntPolynomial p_interp = chromatic_by_interpolation(g);
    r.check("chromatic_paths_agree", r.identity("chromatic_deletion_contraction_vs_interpolation", p_dc, p_interp));
  }
  r.check("whitney_formula", r.identity("whitney_nbc_sum_vs_chromatic", whitney_polynomial(nbc.counts, n), p_dc));

  const bool signed_eq = r.identity("isf_vs_signed_chromatic", isf_fact, signed_reflect(p_dc, n));
  r.fact("isf_equals_signed_chromatic", signed_eq);
  r.check("isf_signed_chromatic_iff_peo", signed_eq == peo);

  BigInt ao = p_dc(BigInt(-1));
  if (n % 2 != 0) ao = -ao;
  const auto ao_brute = count_acyclic_orientations_by_enumeration(g, options.budget);
  if (ao_brute) r.check("acyclic_orientations_stanley_vs_enumeration", *ao_brute == ao, ao.str() + " vs " + ao_brute->str());
  const BigInt isf_total = isf_fact(BigInt(1));
  r.check("isf_at_most_ao", isf_total <= ao, isf_total.str() + " <= " + ao.str());
  r.check("isf_equals_ao_iff_peo", (isf_total == ao) == peo);

  r.value("isf_counts", counts_json(isf.counts));
  r.value("nbc_counts", counts_json(nbc.counts));
  r.value("isf_total", isf_total.str());
  r.value("acyclic_orientations", ao.str());
  return r;
}

}  // namespace isfkit
