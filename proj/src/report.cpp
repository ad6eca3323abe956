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

#include "isfkit/report.hpp"

#include <sstream>

#include "isfkit/errors.hpp"

namespace isfkit {

bool Report::identity(std::string name, IntPolynomial left, IntPolynomial right) {
  const bool eq = left == right;
  identities_.push_back({std::move(name), std::move(left), std::move(right), eq});
  return eq;
}

bool Report::check(std::string name, bool holds, std::string detail) {
  assertions_.push_back({std::move(name), holds, std::move(detail)});
  return holds;
}

void Report::merge(const std::string& prefix, const Report& other) {
  for (const auto& id : other.identities_)
    identities_.push_back({prefix + id.name, id.left, id.right, id.equal});
  for (const auto& a : other.assertions_) assertions_.push_back({prefix + a.name, a.holds, a.detail});
  for (const auto& [k, v] : other.facts_) facts_[prefix + k] = v;
  for (const auto& [k, v] : other.values_.items()) values_[prefix + k] = v;
  for (const auto& [k, v] : other.witnesses_.items()) witnesses_[prefix + k] = v;
}

bool Report::passed() const {
  for (const auto& a : assertions_)
    if (!a.holds) return false;
  return true;
}

bool Report::fact_or(const std::string& name, bool fallback) const {
  auto it = facts_.find(name);
  return it == facts_.end() ? fallback : it->second;
}

const IdentityCheck* Report::find_identity(const std::string& name) const {
  for (const auto& id : identities_)
    if (id.name == name) return &id;
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["passed"] = passed();
  auto ids = nlohmann::json::array();
  for (const auto& id : identities_) {
    ids.push_back({{"name", id.name},
                   {"left", poly_to_json(id.left)},
                   {"right", poly_to_json(id.right)},
                   {"left_text", to_string(id.left)},
                   {"right_text", to_string(id.right)},
                   {"equal", id.equal}});
  }
  j["identity_checks"] = ids;
  auto as = nlohmann::json::array();
  for (const auto& a : assertions_) as.push_back({{"name", a.name}, {"holds", a.holds}, {"detail", a.detail}});
  j["assertions"] = as;
  j["boolean_facts"] = facts_;
  j["values"] = values_;
  j["witnesses"] = witnesses_;
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& a : assertions_)
    if (!a.holds) os << "FAIL " << a.name << (a.detail.empty() ? "" : ": " + a.detail) << "\n";
  for (const auto& a : assertions_)
    if (a.holds) os << "ok   " << a.name << "\n";
  return os.str();
}

nlohmann::json poly_to_json(const IntPolynomial& p) {
  auto out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

IntPolynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("polynomial must be a JSON array");
  std::vector<BigInt> c;
  for (const auto& e : j) {
    if (e.is_string()) {
      try {
        const Rational q = parse_rational(e.get<std::string>());
        if (denominator(q) != 1) throw InputError("non-integer coefficient");
        c.push_back(numerator(q));
      } catch (const std::invalid_argument& ex) {
        throw InputError(ex.what());
      }
    } else if (e.is_number_integer()) {
      c.emplace_back(e.get<long long>());
    } else {
      throw InputError("polynomial coefficients must be decimal strings");
    }
  }
  return IntPolynomial(std::move(c));
}

}  // namespace isfkit
