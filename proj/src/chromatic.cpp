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

#include <algorithm>
#include <bit>
#include <map>

#include "isfkit/errors.hpp"
#include "isfkit/graph.hpp"

namespace isfkit {

namespace {

using Adjacency = std::vector<std::uint64_t>;

// Graphs are keyed by their adjacency rows; vertex i is bit i.
struct DeletionContraction {
  std::map<Adjacency, IntPolynomial> memo;

  IntPolynomial operator()(const Adjacency& adj) {
    if (auto it = memo.find(adj); it != memo.end()) return it->second;
    const int n = static_cast<int>(adj.size());
    int u = -1, v = -1;
    for (int i = 0; i < n && u < 0; ++i) {
      if (adj[static_cast<std::size_t>(i)] != 0) {
        u = i;
        v = std::countr_zero(adj[static_cast<std::size_t>(i)]);
      }
    }
    IntPolynomial result;
    if (u < 0) {
      result = IntPolynomial::monomial(static_cast<std::size_t>(n));
    } else {
      Adjacency deleted = adj;
      deleted[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
      deleted[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
      result = (*this)(deleted) - (*this)(contract(deleted, u, v));
    }
    memo.emplace(adj, result);
    return result;
  }

  // Merges v into u and removes v, shifting higher vertices down by one.
  static Adjacency contract(const Adjacency& adj, int u, int v) {
    const int n = static_cast<int>(adj.size());
    auto drop_bit = [v](std::uint64_t row) {
      const std::uint64_t low = row & ((std::uint64_t{1} << v) - 1);
      return low | ((row >> (v + 1)) << v);
    };
    Adjacency merged = adj;
    merged[static_cast<std::size_t>(u)] |= adj[static_cast<std::size_t>(v)];
    for (int w = 0; w < n; ++w)
      if (adj[static_cast<std::size_t>(v)] >> w & 1U) merged[static_cast<std::size_t>(w)] |= std::uint64_t{1} << u;
    merged[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << u);
    Adjacency out;
    for (int w = 0; w < n; ++w)
      if (w != v) out.push_back(drop_bit(merged[static_cast<std::size_t>(w)] & ~(std::uint64_t{1} << v)));
    return out;
  }
};

Adjacency adjacency_rows(const Graph& g) {
  if (g.n() > 63) throw BudgetExceeded("deletion-contraction supports at most 63 vertices");
  Adjacency adj(static_cast<std::size_t>(g.n()), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u - 1)] |= std::uint64_t{1} << (e.v - 1);
    adj[static_cast<std::size_t>(e.v - 1)] |= std::uint64_t{1} << (e.u - 1);
  }
  return adj;
}

}  // namespace

IntPolynomial chromatic_by_deletion_contraction(const Graph& g) {
  DeletionContraction dc;
  return dc(adjacency_rows(g));
}

BigInt count_proper_colorings(const Graph& g, int t) {
  if (t < 0) throw InputError("negative color count");
  const int n = g.n();
  if (n == 0) return BigInt(1);
  std::vector<std::vector<int>> lower(static_cast<std::size_t>(n + 1));
  for (const auto& e : g.edges()) lower[static_cast<std::size_t>(e.v)].push_back(e.u);
  std::vector<int> color(static_cast<std::size_t>(n + 1), 0);
  BigInt total(0);
  auto place = [&](auto&& self, int v) -> void {
    if (v > n) {
      total += 1;
      return;
    }
    for (int c = 1; c <= t; ++c) {
      const auto& lw = lower[static_cast<std::size_t>(v)];
      if (std::any_of(lw.begin(), lw.end(), [&](int u) { return color[static_cast<std::size_t>(u)] == c; })) continue;
      color[static_cast<std::size_t>(v)] = c;
      self(self, v + 1);
    }
  };
  place(place, 1);
  return total;
}

IntPolynomial chromatic_by_interpolation(const Graph& g) {
  if (g.n() > kColoringMaxVertices) throw BudgetExceeded("too many vertices to count colorings");
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= g.n(); ++t) {
    xs.emplace_back(t);
    ys.emplace_back(count_proper_colorings(g, t));
  }
  return to_integer_polynomial(interpolate(xs, ys));
}

IntPolynomial chromatic_polynomial(const Graph& g) {
  IntPolynomial dc = chromatic_by_deletion_contraction(g);
  if (g.n() <= kColoringMaxVertices) {
    const IntPolynomial interp = chromatic_by_interpolation(g);
    if (interp != dc) throw InternalError("chromatic polynomial routes disagree: " + to_string(dc) + " vs " + to_string(interp));
  }
  return dc;
}

}  // namespace isfkit
