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

#include "isfkit/random.hpp"

#include <algorithm>
#include <set>

#include "isfkit/errors.hpp"

namespace isfkit {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  // Rejection keeps the result exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

Graph random_graph(int n, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.coin()) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph random_triangle_free_graph(int n, Rng& rng) {
  std::vector<Edge> offers;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) offers.push_back({u, v});
  rng.shuffle(offers);
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n + 1), std::vector<bool>(static_cast<std::size_t>(n + 1), false));
  std::vector<Edge> edges;
  for (const auto& e : offers) {
    if (!rng.coin()) continue;
    bool closes = false;
    for (int w = 1; w <= n && !closes; ++w)
      closes = adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(w)] && adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(w)];
    if (closes) continue;
    adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

Graph random_chordal_graph(int n, Rng& rng) {
  // Vertex v joins a random clique among earlier vertices, so 1..n is a PEO;
  // a random relabeling hides the order.
  std::vector<std::vector<int>> cliques{{}};
  std::vector<Edge> edges;
  for (int v = 1; v <= n; ++v) {
    const auto& base = cliques[static_cast<std::size_t>(rng.below(cliques.size()))];
    std::vector<int> chosen;
    for (int u : base)
      if (rng.coin()) chosen.push_back(u);
    for (int u : chosen) edges.push_back({u, v});
    chosen.push_back(v);
    cliques.push_back(std::move(chosen));
  }
  Graph g(n, std::move(edges));
  std::vector<int> ordering = natural_ordering(n);
  rng.shuffle(ordering);
  return relabel(g, ordering);
}

PureComplex random_pure_complex(int n, int d, Rng& rng) {
  if (n < d + 1) throw InputError("too few vertices for a facet");
  std::vector<Simplex> all;
  Simplex s;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(s.size()) == d + 1) {
      all.push_back(s);
      return;
    }
    for (int v = next; v <= n; ++v) {
      s.push_back(v);
      self(self, v + 1);
      s.pop_back();
    }
  };
  rec(rec, 1);
  std::vector<Simplex> kept;
  for (const auto& f : all)
    if (rng.coin()) kept.push_back(f);
  if (kept.empty()) kept.push_back(all[static_cast<std::size_t>(rng.below(all.size()))]);
  return PureComplex(n, d, std::move(kept));
}

PureComplex random_shifted_complex(int n, int d, Rng& rng) {
  const PureComplex seed = random_pure_complex(n, d, rng);
  std::vector<Simplex> facets(seed.facets().begin(), seed.facets().begin() + std::min<int>(2, seed.num_facets()));
  std::set<Simplex> closed(facets.begin(), facets.end());
  std::vector<Simplex> work(closed.begin(), closed.end());
  while (!work.empty()) {
    const Simplex f = work.back();
    work.pop_back();
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
      for (int u = 1; u < f[pos]; ++u) {
        if (std::binary_search(f.begin(), f.end(), u)) continue;
        Simplex g = f;
        g[pos] = u;
        std::sort(g.begin(), g.end());
        if (closed.insert(g).second) work.push_back(g);
      }
    }
  }
  return PureComplex(n, d, std::vector<Simplex>(closed.begin(), closed.end()));
}

namespace {

const int kLabels[] = {1, 2, 3, 5, 7};

}  // namespace

LabeledMultigraph random_multigraph(int n, int max_edges, Rng& rng) {
  std::vector<int> zero;
  std::vector<MultiEdge> labeled;
  const int target = rng.between(0, max_edges);
  int tries = 0;
  while (static_cast<int>(zero.size() + labeled.size()) < target && tries++ < 200) {
    if (n == 1 || rng.below(4) == 0) {
      const int k = rng.between(1, n);
      if (std::find(zero.begin(), zero.end(), k) == zero.end()) zero.push_back(k);
      continue;
    }
    const int i = rng.between(1, n - 1);
    const int j = rng.between(i + 1, n);
    GaussRational label(Rational(kLabels[rng.below(5)]));
    if (rng.coin()) label = GaussRational(1) / label;
    const bool repeat = std::any_of(labeled.begin(), labeled.end(),
                                    [&](const MultiEdge& e) { return e.i == i && e.j == j && e.label == label; });
    if (!repeat) labeled.push_back({i, j, label});
  }
  return LabeledMultigraph(n, std::move(zero), std::move(labeled));
}

LabeledMultigraph random_signed_graph(int n, int max_edges, Rng& rng) {
  std::vector<int> zero;
  for (int k = 1; k <= n; ++k)
    if (rng.below(3) == 0) zero.push_back(k);
  std::vector<MultiEdge> labeled;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int sign : {1, -1}) {
        if (static_cast<int>(zero.size() + labeled.size()) >= max_edges) break;
        if (rng.below(3) == 0) labeled.push_back({i, j, GaussRational(sign)});
      }
    }
  }
  return LabeledMultigraph(n, std::move(zero), std::move(labeled));
}

LabeledMultigraph perfect_closure(const LabeledMultigraph& g) {
  LabeledMultigraph current = g;
  for (int round = 0; round < 1000; ++round) {
    const auto p = perfect_labeling(current);
    if (p.perfect) return current;
    auto zero = current.zero_edges();
    auto labeled = current.labeled_edges();
    if (p.condition == 1) {
      labeled.push_back({p.vertices[0], p.vertices[1], p.edges[0].label / p.edges[1].label});
    } else {
      zero.push_back(p.vertices[0]);
    }
    current = LabeledMultigraph(g.n(), std::move(zero), std::move(labeled));
  }
  throw InternalError("perfect closure did not terminate");
}

}  // namespace isfkit
