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

#include <vector>

#include "isfkit/errors.hpp"
#include "isfkit/polynomial.hpp"
#include "isfkit/report.hpp"
#include "isfkit/weighted_gf.hpp"

using namespace isfkit;

namespace {

IntPolynomial P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("arithmetic and trimming") {
  const IntPolynomial a = P({1, 1});   // t + 1
  const IntPolynomial b = P({-1, 1});  // t - 1
  CHECK(a * b == P({-1, 0, 1}));
  CHECK(a + b == P({0, 2}));
  CHECK((a - a).is_zero());
  CHECK(P({3, 0, 0}).degree() == 0);
  CHECK(P({}).degree() == -1);
  CHECK(a(BigInt(4)) == 5);
}

TEST_CASE("shift by powers of t") {
  CHECK(P({1, 2}).shifted(2) == P({0, 0, 1, 2}));
  CHECK(P({0, 0, 1, 2}).shifted(-2) == P({1, 2}));
  CHECK_THROWS_AS(P({1, 2}).shifted(-1), std::domain_error);
  CHECK(P({0, 0, 5}).t_valuation() == 2);
}

TEST_CASE("reflection t -> -t") {
  // (t+1)(t+2) -> (-t+1)(-t+2) = t^2 - 3t + 2
  CHECK(reflect(P({2, 3, 1})) == P({2, -3, 1}));
  // (-1)^3 p(-t) for p = t^3 + t
  CHECK(signed_reflect(P({0, 1, 0, 1}), 3) == P({0, 1, 0, 1}));
}

TEST_CASE("product of linear factors") {
  const std::vector<long> a{0, 1, 1, 2};
  // t(t+1)^2(t+2) expanded by hand
  CHECK(poly_from_linear_factors(a) == P({0, 2, 5, 4, 1}));
  const std::vector<long> none;
  CHECK(poly_from_linear_factors(none) == P({1}));
  CHECK(poly_from_linear_factors(a, 1) == P({0, 0, 2, 5, 4, 1}));
}

TEST_CASE("counts round trip") {
  const std::vector<BigInt> c{1, 4, 5, 2};
  const IntPolynomial p = poly_from_counts(c, 4);
  CHECK(p == P({0, 2, 5, 4, 1}));
  const std::vector<BigInt> padded{1, 4, 5, 2, 0};
  CHECK(counts_from_poly(p, 4) == padded);
}

TEST_CASE("integer roots") {
  auto r = poly_integer_roots(P({0, 2, 5, 4, 1}));
  REQUIRE(r.has_value());
  CHECK(*r == std::vector<long>{0, -1, -1, -2});
  CHECK_FALSE(poly_integer_roots(P({1, 0, 1})).has_value());
  CHECK_FALSE(poly_integer_roots(P({2, -3, 1})).has_value());
  CHECK_THROWS_AS(poly_integer_roots(P({1, 2})), std::invalid_argument);
}

TEST_CASE("interpolation recovers a cubic") {
  std::vector<Rational> xs, ys;
  for (int x = 0; x <= 3; ++x) {
    xs.emplace_back(x);
    ys.emplace_back(x * x * x - 2 * x + 7);
  }
  CHECK(to_integer_polynomial(interpolate(xs, ys)) == P({7, -2, 0, 1}));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("rendering and json") {
  CHECK(to_string(P({0, 2, 5, 4, 1})) == "t^4 + 4t^3 + 5t^2 + 2t");
  CHECK(to_string(P({-4, 8, -5, 1})) == "t^3 - 5t^2 + 8t - 4");
  CHECK(poly_to_json(P({0, 2, 1})).dump() == R"(["0","2","1"])");
  CHECK(poly_from_json(nlohmann::json::parse(R"(["0","2",1])")) == P({0, 2, 1}));
  CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"(["1/2"])")), InputError);
}

TEST_CASE("weighted product specializes to the ordinary product") {
  const std::vector<int> x0{0};
  const std::vector<int> x12{1, 2};
  const WeightedGF w = WeightedGF::linear_factor(x0) * WeightedGF::linear_factor(x12);
  // t^2, x0 t, x1 t, x2 t, x0 x1, x0 x2
  CHECK(w.terms().size() == 6);
  CHECK(w.specialize_ones() == P({2, 3, 1}));
  CHECK((w + w).specialize_ones() == P({4, 6, 2}));
}

TEST_CASE("report records both sides and fails on a false assertion") {
  Report r;
  CHECK_FALSE(r.identity("id", P({1}), P({2})));
  CHECK(r.passed());
  r.check("claim", false, "why");
  CHECK_FALSE(r.passed());
  const auto j = r.to_json();
  CHECK(j["identity_checks"][0]["equal"] == false);
  CHECK(j["passed"] == false);
  Report outer;
  outer.merge("inner.", r);
  CHECK(outer.assertions().front().name == "inner.claim");
}
