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

#ifndef ISFKIT_REPORT_HPP
#define ISFKIT_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "isfkit/polynomial.hpp"

namespace isfkit {

/// A compared identity: both sides are always kept, whether or not they agree.
struct IdentityCheck {
  std::string name;
  IntPolynomial left;
  IntPolynomial right;
  bool equal = false;
};

/// A statement that must hold for the implementation to be consistent.
struct Assertion {
  std::string name;
  bool holds = false;
  std::string detail;
};

/**
 * Outcome of a verification routine. Identities record what was compared
 * (equal or not, as observed); assertions record the theorem-level facts the
 * observations must satisfy. A report passes iff every assertion holds.
 */
class Report {
 public:
  /// Records both sides and returns whether they are equal.
  bool identity(std::string name, IntPolynomial left, IntPolynomial right);
  bool check(std::string name, bool holds, std::string detail = {});
  void fact(const std::string& name, bool value) { facts_[name] = value; }
  void value(const std::string& name, nlohmann::json v) { values_[name] = std::move(v); }
  void witness(const std::string& name, nlohmann::json w) { witnesses_[name] = std::move(w); }
  void merge(const std::string& prefix, const Report& other);

  bool passed() const;
  const std::vector<IdentityCheck>& identities() const { return identities_; }
  const std::vector<Assertion>& assertions() const { return assertions_; }
  const std::map<std::string, bool>& facts() const { return facts_; }
  bool fact_or(const std::string& name, bool fallback) const;
  const IdentityCheck* find_identity(const std::string& name) const;
  const nlohmann::json& values() const { return values_; }
  const nlohmann::json& witnesses() const { return witnesses_; }

  /// Deterministic JSON (object keys sorted).
  nlohmann::json to_json() const;
  /// One line per assertion, failures first.
  std::string summary() const;

 private:
  std::vector<IdentityCheck> identities_;
  std::vector<Assertion> assertions_;
  std::map<std::string, bool> facts_;
  nlohmann::json values_ = nlohmann::json::object();
  nlohmann::json witnesses_ = nlohmann::json::object();
};

/// ["c0","c1",...] in ascending degree.
nlohmann::json poly_to_json(const IntPolynomial& p);
/// Throws InputError unless j is an array of decimal strings or integers.
IntPolynomial poly_from_json(const nlohmann::json& j);

}  // namespace isfkit

#endif  // ISFKIT_REPORT_HPP
