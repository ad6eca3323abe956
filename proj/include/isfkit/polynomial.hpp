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

#ifndef ISFKIT_POLYNOMIAL_HPP
#define ISFKIT_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isfkit/numeric.hpp"

namespace isfkit {

/**
 * Dense univariate polynomial in t with coefficients in ascending degree.
 *
 * The coefficient vector never carries trailing zeros, so the zero polynomial
 * is the empty vector and degree() == coeffs().size() - 1 otherwise. Values
 * are immutable in spirit: every arithmetic operator returns a new value.
 */
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }

  /// c * t^degree
  static Polynomial monomial(std::size_t degree, Scalar c = Scalar(1)) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Scalar(1); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Multiplies by t^k. A negative k divides by t^{-k}, which must be exact;
  /// otherwise std::domain_error is thrown.
  Polynomial shifted(long k) const {
    if (is_zero() || k == 0) return *this;
    if (k > 0) {
      std::vector<Scalar> v(static_cast<std::size_t>(k), Scalar(0));
      v.insert(v.end(), coeffs_.begin(), coeffs_.end());
      return Polynomial(std::move(v));
    }
    const auto drop = static_cast<std::size_t>(-k);
    for (std::size_t i = 0; i < std::min(drop, coeffs_.size()); ++i)
      if (coeffs_[i] != Scalar(0)) throw std::domain_error("polynomial not divisible by power of t");
    if (drop >= coeffs_.size()) return {};
    return Polynomial(std::vector<Scalar>(coeffs_.begin() + static_cast<long>(drop), coeffs_.end()));
  }

  /// Number of factors t dividing this polynomial (0 for the zero polynomial).
  std::size_t t_valuation() const {
    std::size_t v = 0;
    while (v < coeffs_.size() && coeffs_[v] == Scalar(0)) ++v;
    return coeffs_.empty() ? 0 : v;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

/// p(-t).
template <typename Scalar>
Polynomial<Scalar> reflect(const Polynomial<Scalar>& p) {
  std::vector<Scalar> v = p.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return Polynomial<Scalar>(std::move(v));
}

/// (-1)^n p(-t): the sign-reversal relating chromatic-type and
/// forest-type generating functions.
template <typename Scalar>
Polynomial<Scalar> signed_reflect(const Polynomial<Scalar>& p, long n) {
  auto r = reflect(p);
  return (n % 2 == 0) ? r : -r;
}

/// t + a
inline IntPolynomial linear(const BigInt& a) { return IntPolynomial{a, BigInt(1)}; }

/// t^tshift * prod_k (t + roots_negated[k]).
IntPolynomial poly_from_linear_factors(std::span<const long> roots_negated, std::size_t tshift = 0);

/// Builds sum_m counts[m] t^{n-m}; counts.size() must not exceed n + 1.
IntPolynomial poly_from_counts(std::span<const BigInt> counts, std::size_t n);

/// Inverse of poly_from_counts: the coefficient of t^{n-m} for m = 0..n.
std::vector<BigInt> counts_from_poly(const IntPolynomial& p, std::size_t n);

/**
 * Roots of a monic integer polynomial that splits into factors (t + a) with
 * a >= 0, returned as nonpositive integers in descending order (0 first).
 * Returns std::nullopt when the polynomial does not split that way or is zero.
 * Throws std::invalid_argument for a nonzero non-monic polynomial.
 */
std::optional<std::vector<long>> poly_integer_roots(const IntPolynomial& p);

/// Exact conversion; throws InternalError if a coefficient is not integral.
IntPolynomial to_integer_polynomial(const RationalPolynomial& p);
RationalPolynomial to_rational_polynomial(const IntPolynomial& p);

/// Lagrange interpolation through (xs[i], ys[i]) over the rationals.
RationalPolynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Human-readable form, e.g. "t^4 + 4t^3 + 5t^2 + 2t".
std::string to_string(const IntPolynomial& p);

}  // namespace isfkit

#endif  // ISFKIT_POLYNOMIAL_HPP
