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

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "isfkit/errors.hpp"
#include "isfkit/graph.hpp"
#include "isfkit/random.hpp"

using namespace isfkit;

namespace {

IntPolynomial P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

Graph fig_g() { return Graph(4, {{1, 2}, {2, 3}, {1, 4}, {2, 4}}); }
Graph fig_h() { return Graph(4, {{1, 2}, {1, 4}, {2, 4}, {3, 4}}); }
Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
  return Graph(n, e);
}
Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  e.push_back({1, n});
  return Graph(n, e);
}

// Oracle: walk each component from its minimum vertex by BFS and require
// every tree edge to go up; reject cycles by counting edges per component.
bool oracle_increasing_forest(const Graph& g, EdgeMask mask) {
  const int n = g.n();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + 1));
  int edges = 0;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!((mask >> i) & 1)) continue;
    const auto& e = g.edges()[static_cast<std::size_t>(i)];
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    ++edges;
  }
  std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
  int components = 0;
  for (int r = 1; r <= n; ++r) {
    if (seen[r]) continue;
    ++components;
    std::vector<int> stack{r};
    seen[r] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (seen[w]) continue;
        if (w < v) return false;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return edges == n - components;
}

BigInt oracle_colorings(const Graph& g, int t) {
  std::vector<int> c(static_cast<std::size_t>(g.n() + 1), 0);
  BigInt count = 0;
  std::function<void(int)> go = [&](int v) {
    if (v > g.n()) {
      ++count;
      return;
    }
    for (int x = 1; x <= t; ++x) {
      bool ok = true;
      for (int w = 1; w < v && ok; ++w) ok = !(g.has_edge(w, v) && c[w] == x);
      if (!ok) continue;
      c[v] = x;
      go(v + 1);
    }
  };
  go(1);
  return count;
}

// Oracle: acyclic orientations are the distinct orientations induced by
// vertex permutations.
std::size_t oracle_acyclic_orientations(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::vector<bool>> seen;
  do {
    std::vector<int> pos(static_cast<std::size_t>(g.n() + 1));
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
    std::vector<bool> o;
    for (const auto& e : g.edges()) o.push_back(pos[e.u] < pos[e.v]);
    seen.insert(o);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return seen.size();
}

bool oracle_chordal(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (std::size_t k = 0; k < perm.size() && ok; ++k)
      for (std::size_t i = 0; i < k && ok; ++i)
        for (std::size_t j = i + 1; j < k && ok; ++j)
          if (g.has_edge(perm[i], perm[k]) && g.has_edge(perm[j], perm[k])) ok = g.has_edge(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), InputError);
  const Graph g(3, {{3, 1}, {2, 1}});
  CHECK(g.edges().front() == Edge{1, 2});
  CHECK(g.edge_index(3, 1) == 1);
  CHECK(g.edge_index(2, 3) == -1);
}

TEST_CASE("relabel puts ordering[i] at position i+1") {
  const Graph g(3, {{1, 2}});
  const std::vector<int> ord{2, 3, 1};
  const Graph r = relabel(g, ord);
  CHECK(r.has_edge(1, 3));
  const std::vector<int> bad{1, 1, 2};
  CHECK_THROWS_AS(relabel(g, bad), InputError);
}

TEST_CASE("isf polynomials of the two four-vertex graphs") {
  CHECK(isf_polynomial(fig_g()) == P({0, 2, 5, 4, 1}));
  CHECK(isf_polynomial(fig_h()) == P({0, 0, 3, 4, 1}));
  CHECK(poly_from_counts(enumerate_isf(fig_g()).counts, 4) == isf_polynomial(fig_g()));
  CHECK(poly_from_counts(enumerate_isf(fig_h()).counts, 4) == isf_polynomial(fig_h()));
}

TEST_CASE("cycle isf factorization") {
  // C_5: E_2..E_5 sizes 1,1,1,2
  CHECK(isf_polynomial(cycle(5)) == P({0, 2, 7, 9, 5, 1}));
  CHECK(poly_from_counts(enumerate_isf(cycle(5)).counts, 5) == isf_polynomial(cycle(5)));
}

TEST_CASE("increasing forest predicates agree with an oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(6, rng);
    for (EdgeMask m = 0; m <= g.full_mask(); ++m) {
      const bool o = oracle_increasing_forest(g, m);
      REQUIRE(is_increasing_forest(g, m) == o);
      REQUIRE(is_increasing_forest_by_paths(g, m) == o);
    }
  }
}

TEST_CASE("weighted isf matches enumeration") {
  const Graph g = fig_g();
  CHECK(isf_weighted(g) == isf_weighted_by_enumeration(g));
  CHECK(isf_weighted(g).specialize_ones() == isf_polynomial(g));
  CHECK(edge_variable_name(g, 0) == "x_{1,2}");
}

TEST_CASE("chromatic polynomial") {
  CHECK(chromatic_polynomial(fig_g()) == P({0, -2, 5, -4, 1}));
  CHECK(chromatic_polynomial(complete(4)) == P({0, -6, 11, -6, 1}));
  CHECK(chromatic_polynomial(cycle(5)) == P({0, 4, -10, 10, -5, 1}));
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(6, rng);
    const IntPolynomial p = chromatic_by_deletion_contraction(g);
    for (int t = 0; t <= 4; ++t) REQUIRE(p(BigInt(t)) == oracle_colorings(g, t));
  }
  CHECK_THROWS_AS(chromatic_by_interpolation(Graph(kColoringMaxVertices + 1, {})), BudgetExceeded);
}

TEST_CASE("nbc sets and whitney") {
  const Graph k3 = complete(3);
  const auto nbc = nbc_sets(k3, EdgeOrder::lexicographic(k3));
  CHECK(nbc.counts == std::vector<BigInt>{1, 3, 2});
  CHECK(whitney_polynomial(nbc.counts, 3) == chromatic_polynomial(k3));
  CHECK(simple_cycles(complete(4)).size() == 7);
  const Graph g = fig_g();
  CHECK(whitney_polynomial(nbc_sets(g, EdgeOrder::lexicographic(g)).counts, 4) == chromatic_polynomial(g));
}

TEST_CASE("peo and chordality") {
  const std::vector<int> nat{1, 2, 3, 4};
  CHECK(is_peo(fig_g(), nat));
  CHECK_FALSE(is_peo(fig_h(), nat));
  CHECK(find_peo(fig_h()).has_value());
  CHECK_FALSE(find_peo(cycle(4)).has_value());
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(6, rng);
    const auto peo = find_peo(g);
    REQUIRE(peo.has_value() == oracle_chordal(g));
    if (peo) REQUIRE(is_peo(g, *peo));
  }
}

TEST_CASE("acyclic orientations") {
  CHECK(acyclic_orientation_count(complete(3)) == 6);
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(6, rng);
    REQUIRE(acyclic_orientation_count(g) == oracle_acyclic_orientations(g));
  }
}

TEST_CASE("verification report on random graphs") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(6, rng);
    const Report r = verify_isf_nbc(g);
    INFO(r.summary());
    REQUIRE(r.passed());
  }
  const Report h = verify_isf_nbc(fig_h());
  CHECK(h.passed());
  CHECK_FALSE(h.fact_or("natural_order_is_peo", true));
  CHECK_FALSE(h.fact_or("isf_equals_signed_chromatic", true));
}

TEST_CASE("budget exceeded on large subset sweeps") {
  Budget tight;
  tight.subset_edges = 3;
  CHECK_THROWS_AS(enumerate_isf(complete(4), tight), BudgetExceeded);
}
