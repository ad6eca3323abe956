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

#ifndef ISFKIT_WEIGHTED_GF_HPP
#define ISFKIT_WEIGHTED_GF_HPP

#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isfkit/numeric.hpp"
#include "isfkit/polynomial.hpp"

namespace isfkit {

/**
 * Sparse polynomial in t and commuting weight variables x_0, x_1, ...
 *
 * A term is keyed by (sorted multiset of variable ids, power of t). Variable
 * ids index the edges or facets of whatever object produced the function.
 * Zero coefficients are never stored.
 */
class WeightedGF {
 public:
  using Monomial = std::vector<int>;
  using Key = std::pair<Monomial, long>;

  WeightedGF() = default;

  static WeightedGF one();
  /// t + x_{v_1} + ... + x_{v_r}
  static WeightedGF linear_factor(std::span<const int> vars);

  void add_term(Monomial vars, long tpow, const BigInt& coeff);

  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  WeightedGF& operator+=(const WeightedGF& o);
  friend WeightedGF operator+(WeightedGF a, const WeightedGF& b) { return a += b; }
  friend WeightedGF operator*(const WeightedGF& a, const WeightedGF& b);
  friend bool operator==(const WeightedGF& a, const WeightedGF& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const WeightedGF& a, const WeightedGF& b) { return !(a == b); }

  /// Sets every x to 1. Throws std::domain_error on a negative power of t.
  IntPolynomial specialize_ones() const;

  /// [{"coeff": "...", "t": k, "x": [names...]}, ...] in key order.
  nlohmann::json to_json(const std::function<std::string(int)>& name) const;
  std::string to_string(const std::function<std::string(int)>& name) const;

 private:
  std::map<Key, BigInt> terms_;
};

}  // namespace isfkit

#endif  // ISFKIT_WEIGHTED_GF_HPP
