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

#include "isfkit/weighted_gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isfkit {

WeightedGF WeightedGF::one() {
  WeightedGF g;
  g.add_term({}, 0, BigInt(1));
  return g;
}

WeightedGF WeightedGF::linear_factor(std::span<const int> vars) {
  WeightedGF g;
  g.add_term({}, 1, BigInt(1));
  for (int v : vars) g.add_term({v}, 0, BigInt(1));
  return g;
}

void WeightedGF::add_term(Monomial vars, long tpow, const BigInt& coeff) {
  if (coeff == 0) return;
  std::sort(vars.begin(), vars.end());
  auto [it, inserted] = terms_.try_emplace({std::move(vars), tpow}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

WeightedGF& WeightedGF::operator+=(const WeightedGF& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

WeightedGF operator*(const WeightedGF& a, const WeightedGF& b) {
  WeightedGF out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      WeightedGF::Monomial m;
      m.reserve(ka.first.size() + kb.first.size());
      std::merge(ka.first.begin(), ka.first.end(), kb.first.begin(), kb.first.end(),
                 std::back_inserter(m));
      out.add_term(std::move(m), ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

IntPolynomial WeightedGF::specialize_ones() const {
  std::vector<BigInt> c;
  for (const auto& [key, coeff] : terms_) {
    if (key.second < 0) throw std::domain_error("negative power of t");
    const auto p = static_cast<std::size_t>(key.second);
    if (c.size() <= p) c.resize(p + 1, BigInt(0));
    c[p] += coeff;
  }
  return IntPolynomial(std::move(c));
}

nlohmann::json WeightedGF::to_json(const std::function<std::string(int)>& name) const {
  auto out = nlohmann::json::array();
  for (const auto& [key, coeff] : terms_) {
    auto xs = nlohmann::json::array();
    for (int v : key.first) xs.push_back(name(v));
    out.push_back({{"coeff", coeff.str()}, {"t", key.second}, {"x", xs}});
  }
  return out;
}

std::string WeightedGF::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power of t first reads most naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, coeff] = *it;
    os << (first ? "" : " + ");
    first = false;
    bool wrote = false;
    if (coeff != 1 || (key.first.empty() && key.second == 0)) {
      os << coeff.str();
      wrote = true;
    }
    for (int v : key.first) {
      os << (wrote ? "*" : "") << name(v);
      wrote = true;
    }
    if (key.second > 0) {
      os << (wrote ? "*" : "") << "t";
      if (key.second > 1) os << "^" << key.second;
    }
  }
  return os.str();
}

}  // namespace isfkit
