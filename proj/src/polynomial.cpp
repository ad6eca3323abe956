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

#include "isfkit/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "isfkit/errors.hpp"

namespace isfkit {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](std::string_view part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find_first_of("+-") != std::string::npos)
    throw std::invalid_argument("malformed rational: " + s);
  BigInt n(num[0] == '+' ? num.substr(1) : num);
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(n, d);
}

std::string to_string(const Rational& q) { return q.str(); }

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  const Rational n = o.norm();
  if (n == 0) throw std::domain_error("division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const GaussRational& z) {
  if (z.im() == 0) return to_string(z.re());
  std::string out;
  if (z.re() != 0) out = to_string(z.re()) + (z.im() > 0 ? "+" : "");
  return out + to_string(z.im()) + "i";
}

IntPolynomial poly_from_linear_factors(std::span<const long> roots_negated, std::size_t tshift) {
  IntPolynomial p = IntPolynomial::monomial(tshift);
  for (long a : roots_negated) p = p * linear(BigInt(a));
  return p;
}

IntPolynomial poly_from_counts(std::span<const BigInt> counts, std::size_t n) {
  if (counts.size() > n + 1) throw std::invalid_argument("more counts than degree allows");
  std::vector<BigInt> c(n + 1, BigInt(0));
  for (std::size_t m = 0; m < counts.size(); ++m) c[n - m] = counts[m];
  return IntPolynomial(std::move(c));
}

std::vector<BigInt> counts_from_poly(const IntPolynomial& p, std::size_t n) {
  if (p.degree() > static_cast<long>(n)) throw std::invalid_argument("polynomial degree exceeds n");
  std::vector<BigInt> out(n + 1);
  for (std::size_t m = 0; m <= n; ++m) out[m] = p.coeff(n - m);
  return out;
}

std::optional<std::vector<long>> poly_integer_roots(const IntPolynomial& p) {
  if (p.is_zero()) return std::nullopt;
  if (!p.is_monic()) throw std::invalid_argument("poly_integer_roots requires a monic polynomial");

  std::vector<long> roots(p.t_valuation(), 0L);
  std::vector<BigInt> c(p.coeffs().begin() + static_cast<long>(roots.size()), p.coeffs().end());

  // Synthetic division by (t + a); returns false if the remainder is nonzero.
  auto try_divide = [&c](long a) {
    const std::size_t deg = c.size() - 1;
    std::vector<BigInt> q(deg);
    BigInt carry = c[deg];
    for (std::size_t i = deg; i-- > 0;) {
      q[i] = carry;
      carry = c[i] - BigInt(a) * carry;
    }
    if (carry != 0) return false;
    c = std::move(q);
    return true;
  };

  while (c.size() > 1) {
    // With all roots -a <= 0 every a is bounded by both |c_0| and the sum of
    // the roots (the next-to-leading coefficient).
    const BigInt bound = std::min<BigInt>(abs(c[0]), abs(c[c.size() - 2]));
    bool found = false;
    for (long a = 1; BigInt(a) <= bound; ++a) {
      if (c[0] % a != 0) continue;
      if (try_divide(a)) {
        roots.push_back(-a);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

IntPolynomial to_integer_polynomial(const RationalPolynomial& p) {
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) {
    if (denominator(q) != 1) throw InternalError("non-integral coefficient " + q.str());
    out.push_back(numerator(q));
  }
  return IntPolynomial(std::move(out));
}

RationalPolynomial to_rational_polynomial(const IntPolynomial& p) {
  std::vector<Rational> out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  RationalPolynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RationalPolynomial basis = RationalPolynomial::constant(Rational(1));
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * RationalPolynomial{-xs[j], Rational(1)};
      denom *= xs[i] - xs[j];
    }
    if (denom == 0) throw std::invalid_argument("interpolate: repeated abscissa");
    out += basis * (ys[i] / denom);
  }
  return out;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.str();
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace isfkit
