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

#include "isfkit/linalg.hpp"
#include "isfkit/numeric.hpp"

using namespace isfkit;

TEST_CASE("rank over the rationals") {
  DenseMatrix<Rational> m(3, 3);
  m << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  CHECK(exact_rank(m) == 2);
  const auto r = reduced_row_echelon(m);
  REQUIRE(r.rows() == 2);
  CHECK(r(0, 0) == 1);
  CHECK(r(0, 2) == -1);
  CHECK(r(1, 2) == 2);
}

TEST_CASE("fraction-free rank matches field rank") {
  DenseMatrix<BigInt> m(3, 4);
  m << 2, 4, 0, 6, 1, 2, 1, 3, 3, 6, 1, 9;
  DenseMatrix<Rational> q = m.cast<Rational>();
  CHECK(fraction_free_rank(m) == 2);
  CHECK(exact_rank(q) == 2);
}

TEST_CASE("kernel basis annihilates the matrix") {
  DenseMatrix<Rational> m(2, 4);
  m << 1, 1, 0, 0, 0, 1, -1, 2;
  const auto k = kernel_basis(m);
  CHECK(k.cols() == 2);
  const DenseMatrix<Rational> prod = m * k;
  for (Eigen::Index i = 0; i < prod.rows(); ++i)
    for (Eigen::Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
  CHECK(exact_rank(k) == 2);
}

TEST_CASE("gaussian rationals") {
  const GaussRational i(Rational(0), Rational(1));
  CHECK(i * i == GaussRational(-1));
  const GaussRational z(Rational(1), Rational(2));
  CHECK(z / z == GaussRational(1));
  CHECK((z * z.conj()).re() == 5);
  CHECK(z.norm() == 5);
  DenseMatrix<GaussRational> m(2, 2);
  m << GaussRational(1), i, i, GaussRational(-1);
  CHECK(exact_rank(m) == 1);
}

TEST_CASE("vstack and keys") {
  DenseMatrix<Rational> a(1, 2), b(1, 2);
  a << 1, 2;
  b << 3, 4;
  const auto s = vstack(a, b);
  CHECK(s.rows() == 2);
  CHECK(s(1, 0) == 3);
  CHECK(matrix_key(a) != matrix_key(b));
  CHECK(matrix_key(a) == matrix_key(DenseMatrix<Rational>(a)));
}
