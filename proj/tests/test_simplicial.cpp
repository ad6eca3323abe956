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
#include <vector>

#include "isfkit/errors.hpp"
#include "isfkit/random.hpp"
#include "isfkit/simplicial.hpp"

using namespace isfkit;

namespace {

IntPolynomial P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

PureComplex bipyramid() {
  return PureComplex(5, 2, {{1, 2, 4}, {1, 2, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {3, 4, 5}});
}

// Oracle: a pair of kept facets sharing a ridge cages it when the ridge's
// largest vertex exceeds both free vertices and its other vertices lie below
// both.
bool oracle_cage_free(const PureComplex& c, FacetMask kept) {
  const auto& f = c.facets();
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (!((kept >> a) & 1)) continue;
    for (std::size_t b = a + 1; b < f.size(); ++b) {
      if (!((kept >> b) & 1)) continue;
      Simplex ridge;
      std::set_intersection(f[a].begin(), f[a].end(), f[b].begin(), f[b].end(), std::back_inserter(ridge));
      if (static_cast<int>(ridge.size()) != c.d()) continue;
      int i = 0, j = 0;
      for (int v : f[a])
        if (!std::binary_search(ridge.begin(), ridge.end(), v)) i = v;
      for (int v : f[b])
        if (!std::binary_search(ridge.begin(), ridge.end(), v)) j = v;
      const int lo = std::min(i, j), hi = std::max(i, j);
      if (ridge.back() > hi && (ridge.size() < 2 || ridge[ridge.size() - 2] < lo)) return false;
    }
  }
  return true;
}

std::vector<BigInt> oracle_cf_counts(const PureComplex& c) {
  std::vector<BigInt> counts(static_cast<std::size_t>(c.num_facets() + 1), BigInt(0));
  for (FacetMask s = 0; s <= c.full_mask(); ++s)
    if (oracle_cage_free(c, s)) ++counts[static_cast<std::size_t>(std::popcount(s))];
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

}  // namespace

TEST_CASE("complex construction validates input") {
  CHECK_THROWS_AS(PureComplex(4, 2, {{1, 2}}), InputError);
  CHECK_THROWS_AS(PureComplex(4, 2, {{1, 2, 2}}), InputError);
  CHECK_THROWS_AS(PureComplex(4, 2, {{1, 2, 5}}), InputError);
  CHECK_THROWS_AS(PureComplex(4, 2, {{1, 2, 3}, {3, 2, 1}}), InputError);
}

TEST_CASE("three triangles around a vertex") {
  const PureComplex c(4, 2, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
  CHECK(cf_polynomial(c) == P({2, 3, 1}));
  const std::vector<int> x123{0};
  const std::vector<int> x124_134{1, 2};
  CHECK(cf_weighted(c) == WeightedGF::linear_factor(x123) * WeightedGF::linear_factor(x124_134));
  CHECK(cf_weighted_by_enumeration(c) == cf_weighted(c));
  CHECK(facet_variable_name(c, 1) == "x_{1,2,4}");
}

TEST_CASE("bipyramid and its relabelings") {
  const PureComplex a = bipyramid();
  CHECK(cf_polynomial(a) == P({2, 9, 16, 14, 6, 1}));  // (t+1)^4 (t+2)
  const Report r = verify_product_formula(a);
  INFO(r.summary());
  CHECK(r.passed());
  const long correction = 5 * r.values()["effective_peaks"].get<long>() - r.values()["N"].get<long>();
  CHECK(correction == 10);

  const std::vector<int> ob{1, 3, 2, 4, 5};
  const PureComplex b = relabel(a, ob);
  CHECK(b == PureComplex(5, 2, {{1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}}));
  CHECK(cf_polynomial(b) == P({4, 12, 13, 6, 1}));  // (t+1)^2 (t+2)^2
  CHECK(verify_product_formula(b).passed());
}

TEST_CASE("cage-free predicates agree with an oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const PureComplex c = random_pure_complex(5, 2, rng);
    const PhiPartition phi = phi_partition(c);
    for (FacetMask s = 0; s <= c.full_mask(); ++s) {
      const bool o = oracle_cage_free(c, s);
      REQUIRE(is_cage_free(c, phi, s) == o);
      REQUIRE(is_cage_free_by_ridges(c, s) == o);
    }
    REQUIRE(enumerate_cage_free(c).counts == oracle_cf_counts(c));
    REQUIRE(counts_from_poly(cf_polynomial(c), static_cast<std::size_t>(phi.N())) ==
            [&] {
              auto v = oracle_cf_counts(c);
              v.resize(static_cast<std::size_t>(phi.N() + 1), BigInt(0));
              return v;
            }());
  }
}

TEST_CASE("one-dimensional complexes reduce to graphs") {
  const Graph g(4, {{1, 2}, {2, 3}, {1, 4}, {2, 4}});
  const PureComplex c = complex_from_graph(g);
  CHECK(c.d() == 1);
  CHECK(cf_polynomial(c).shifted(g.n() - phi_partition(c).N()) == isf_polynomial(g));
}

TEST_CASE("top homology of a sphere and of a cage-free disc") {
  const PureComplex sphere(4, 2, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  const Report s = structure_report(sphere, sphere.full_mask());
  CHECK(s.values()["top_homology_rank"] == 1);
  CHECK_FALSE(s.fact_or("has_leaf", true));
  CHECK_FALSE(s.fact_or("cage_free", true));

  const PureComplex disc(4, 2, {{1, 2, 3}, {1, 3, 4}});
  const Report d = structure_report(disc, disc.full_mask());
  CHECK(d.values()["top_homology_rank"] == 0);
  CHECK(d.fact_or("has_leaf", false));
  CHECK(d.passed());
}

TEST_CASE("simplicial peo and shifted complexes") {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const PureComplex c = random_pure_complex(6, 2, rng);
    REQUIRE(is_simplicial_peo(c) == is_simplicial_peo_by_links(c));
    const PureComplex sh = random_shifted_complex(6, 2, rng);
    REQUIRE(is_shifted(sh));
    REQUIRE(is_simplicial_peo(sh));
  }
}

TEST_CASE("product formula on random complexes") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const PureComplex c = random_pure_complex(5, 2, rng);
    const Report r = verify_product_formula(c);
    INFO(r.summary());
    REQUIRE(r.passed());
  }
}

TEST_CASE("upper links") {
  const PureComplex c(4, 2, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
  const auto links = effective_upper_links(c);
  REQUIRE(links.size() == 1);
  CHECK(links.begin()->first == Simplex{1});
  CHECK(links.begin()->second.num_edges() == 3);
}
