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

#ifndef ISFKIT_NUMERIC_HPP
#define ISFKIT_NUMERIC_HPP

#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace isfkit {

// Expression templates are disabled so the types compose cleanly with Eigen
// and with auto.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Parses "p/q", "p" or "-p/q" into an exact rational. Throws
/// std::invalid_argument on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Exact complex number re + i*im with rational parts.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  /// Total order (re first, then im); only used to canonicalize containers.
  friend bool operator<(const GaussRational& a, const GaussRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const GaussRational& z);

// Eigen reductions call these unqualified.
inline const GaussRational& conj(const GaussRational& z) { return z; }
inline const GaussRational& real(const GaussRational& z) { return z; }
inline GaussRational imag(const GaussRational&) { return {}; }
inline GaussRational abs2(const GaussRational& z) { return z * z; }

}  // namespace isfkit

namespace Eigen {
template <>
struct NumTraits<isfkit::GaussRational> : GenericNumTraits<isfkit::GaussRational> {
  using Real = isfkit::GaussRational;
  using NonInteger = isfkit::GaussRational;
  using Nested = isfkit::GaussRational;
  using Literal = isfkit::GaussRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // ISFKIT_NUMERIC_HPP
