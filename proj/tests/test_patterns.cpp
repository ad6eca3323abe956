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
#include <map>
#include <numeric>
#include <vector>

#include "isfkit/errors.hpp"
#include "isfkit/patterns.hpp"
#include "isfkit/random.hpp"

using namespace isfkit;

namespace {

IntPolynomial P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph bipartite(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<Edge> e;
  for (int u : x)
    for (int v : y) e.push_back({u, v});
  return Graph(static_cast<int>(x.size() + y.size()), e);
}

// Oracle: test every index subset of the pattern's length.
bool oracle_contains(const std::vector<int>& seq, const std::vector<int>& pat) {
  const std::size_t k = pat.size();
  if (k > seq.size()) return false;
  std::vector<bool> pick(seq.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<int> sub;
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (pick[i]) sub.push_back(seq[i]);
    bool same = true;
    for (std::size_t i = 0; i < k && same; ++i)
      for (std::size_t j = 0; j < k && same; ++j) same = (sub[i] < sub[j]) == (pat[i] < pat[j]);
    if (same) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

bool oracle_tight(const std::vector<int>& seq) {
  return !oracle_contains(seq, {2, 3, 1}) && !oracle_contains(seq, {3, 1, 2}) && !oracle_contains(seq, {3, 2, 1});
}

// Oracle: candidate paths straight from the definition.
std::vector<std::vector<int>> oracle_candidate_paths(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> used(static_cast<std::size_t>(g.n() + 1), false);
  std::function<void()> extend = [&] {
    const int c = path[1];
    const int last = path.back();
    for (int w : g.neighbors(last)) {
      if (used[w]) continue;
      path.push_back(w);
      if (w < c) {
        out.push_back(path);
      } else {
        used[w] = true;
        extend();
        used[w] = false;
      }
      path.pop_back();
    }
  };
  for (int c = 1; c <= g.n(); ++c)
    for (int a : g.neighbors(c))
      for (int b : g.neighbors(c)) {
        if (!(a < b && b < c)) continue;
        path = {a, c, b};
        used.assign(used.size(), false);
        used[a] = used[b] = used[c] = true;
        extend();
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_qpo(const Graph& g) {
  for (const auto& p : oracle_candidate_paths(g)) {
    const int a = p[0], c = p[1], b = p[2], d = p.back();
    if (!(g.has_edge(a, d) || (d < b && g.has_edge(c, d)))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pattern containment agrees with subset search") {
  Rng rng(2);
  const std::vector<Pattern> pats{{2, 1}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}, {1, 3, 2, 4}};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> seq(static_cast<std::size_t>(rng.between(0, 7)));
    for (auto& x : seq) x = rng.between(1, 20);
    std::sort(seq.begin(), seq.end());
    seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
    rng.shuffle(seq);
    for (const auto& p : pats) REQUIRE(contains_pattern(seq, p) == oracle_contains(seq, p));
    REQUIRE(is_tight_sequence(seq) == oracle_tight(seq));
    REQUIRE(is_tight_by_involution(seq) == oracle_tight(seq));
  }
  const std::vector<int> bad{1, 1};
  CHECK_THROWS_AS(require_pattern(bad), InputError);
  const std::vector<int> s{30, 10, 20};
  CHECK(standardize(s) == Pattern{3, 1, 2});
}

TEST_CASE("tight permutations follow the Fibonacci numbers") {
  for (int k = 1; k <= 8; ++k) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    long count = 0;
    do count += oracle_tight(perm) ? 1 : 0;
    while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(tight_permutation_count(k) == count);
  }
  CHECK(tight_permutation_count(6) == 13);
}

TEST_CASE("triangle tight forests") {
  const Graph k3 = complete(3);
  CHECK(tf_polynomial(k3) == P({0, 3, 3, 1}));
}

TEST_CASE("tight forest enumeration against root paths") {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(6, rng);
    std::vector<BigInt> counts(static_cast<std::size_t>(g.n()), BigInt(0));
    for (EdgeMask m = 0; m <= g.full_mask(); ++m) {
      if (!is_forest(g, m)) continue;
      const LabeledForest f = LabeledForest::from_edges(g, m);
      bool ok = true;
      for (const auto& p : f.root_paths()) ok = ok && oracle_tight(p);
      REQUIRE(is_tight_forest(g, m) == ok);
      REQUIRE(forest_avoids_by_leaves(f, tight_patterns()) == ok);
      if (ok) ++counts[static_cast<std::size_t>(std::popcount(m))];
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    REQUIRE(enumerate_tight_forests(g).counts == counts);
  }
}

TEST_CASE("parent-map forests") {
  const LabeledForest f({{1, std::nullopt}, {3, 1}, {2, 3}, {4, 1}});
  CHECK(is_tight_forest(f));
  const LabeledForest g({{1, std::nullopt}, {3, 1}, {4, 3}, {2, 4}});  // root path 1,3,4,2 contains 231
  CHECK_FALSE(is_tight_forest(g));
  CHECK_THROWS_AS(LabeledForest({{2, std::nullopt}, {1, 2}}), InputError);
  CHECK_THROWS_AS(LabeledForest({{1, 2}, {2, 1}}), InputError);
}

TEST_CASE("the five-vertex example has one candidate path") {
  const Graph g(5, {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
  const auto paths = candidate_paths(g);
  REQUIRE(paths.size() == 1);
  CHECK(paths.front().vertices == std::vector<int>{1, 5, 4, 3});
  CHECK(is_qpo(g));
}

TEST_CASE("candidate paths agree with the definition") {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(7, rng);
    std::vector<std::vector<int>> got;
    for (const auto& p : candidate_paths(g)) got.push_back(p.vertices);
    std::sort(got.begin(), got.end());
    REQUIRE(got == oracle_candidate_paths(g));
    REQUIRE(is_qpo(g) == oracle_qpo(g));
  }
}

TEST_CASE("complete bipartite graphs") {
  // K_{m,3} with parts {1,2,N} and {3..N-1}
  CHECK(is_qpo(bipartite({1, 2, 7}, {3, 4, 5, 6})));
  CHECK_FALSE(is_qpo(bipartite({1, 2, 3, 4}, {5, 6, 7, 8})));
  CHECK(is_bipartite(bipartite({1, 2}, {3, 4})));
  CHECK_FALSE(has_triangle(bipartite({1, 2}, {3, 4})));
  CHECK(has_triangle(complete(3)));
}

TEST_CASE("tight forest theorems on random graphs") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = trial % 2 ? random_triangle_free_graph(6, rng) : random_graph(6, rng);
    const Report r = verify_tf_theorems(g);
    INFO(r.summary());
    REQUIRE(r.passed());
  }
}

TEST_CASE("integer roots classification on small graphs") {
  TfCache cache;
  CHECK(tf_integer_roots_classification(Graph(3, {{1, 2}, {2, 3}}), &cache).passed());
  CHECK(tf_integer_roots_classification(complete(3), &cache).passed());
}
