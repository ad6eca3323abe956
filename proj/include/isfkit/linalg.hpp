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

#ifndef ISFKIT_LINALG_HPP
#define ISFKIT_LINALG_HPP

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "isfkit/numeric.hpp"

// Exact linear algebra over fields (Rational, GaussRational) and integral
// domains (BigInt). Nothing here pivots on magnitude: a pivot is any nonzero
// entry, which is all exact arithmetic needs.

namespace isfkit {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

/// Reduced row echelon form with zero rows removed; the result is the
/// canonical basis of the row space, so two matrices span the same row space
/// iff their RREFs are equal.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> m = input;
  const Scalar zero(0);
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    Eigen::Index found = -1;
    for (Eigen::Index r = pivot_row; r < m.rows(); ++r) {
      if (m(r, col) != zero) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) m.row(found).swap(m.row(pivot_row));
    const Scalar inv = Scalar(1) / m(pivot_row, col);
    m.row(pivot_row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col) == zero) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(pivot_row);
    }
    ++pivot_row;
  }
  return m.topRows(pivot_row);
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  return reduced_row_echelon(m).rows();
}

/// Rank by fraction-free (Bareiss) elimination; entries stay in the integral
/// domain of Scalar, and every division is exact.
template <typename Derived>
Eigen::Index fraction_free_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> m = input;
  const Scalar zero(0);
  Scalar prev(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index found = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r) {
      if (m(r, col) != zero) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != rank) m.row(found).swap(m.row(rank));
    const Scalar pivot = m(rank, col);
    for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
      for (Eigen::Index c = col + 1; c < m.cols(); ++c)
        m(r, c) = (pivot * m(r, c) - m(r, col) * m(rank, c)) / prev;
      m(r, col) = zero;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

/// Columns form a basis of { x : m x = 0 }.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const DenseMatrix<Scalar> r = reduced_row_echelon(m);
  const Scalar zero(0);
  std::vector<Eigen::Index> pivot_col;
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    for (Eigen::Index c = 0; c < r.cols(); ++c) {
      if (r(i, c) != zero) {
        pivot_col.push_back(c);
        is_pivot[static_cast<std::size_t>(c)] = true;
        break;
      }
    }
  }
  DenseMatrix<Scalar> basis(m.cols(), m.cols() - r.rows());
  basis.setConstant(zero);
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = Scalar(1);
    for (Eigen::Index i = 0; i < r.rows(); ++i) basis(pivot_col[static_cast<std::size_t>(i)], out) = -r(i, free);
    ++out;
  }
  return basis;
}

/// Stacks the rows of a over the rows of b.
template <typename DA, typename DB>
DenseMatrix<typename DA::Scalar> vstack(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  DenseMatrix<typename DA::Scalar> out(a.rows() + b.rows(), a.cols());
  if (a.rows() > 0) out.topRows(a.rows()) = a;
  if (b.rows() > 0) out.bottomRows(b.rows()) = b;
  return out;
}

/// Serialized matrix, usable as a hash/map key for canonical forms.
template <typename Derived>
std::string matrix_key(const Eigen::MatrixBase<Derived>& m) {
  std::string key = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) key += to_string(m(i, j)) + ",";
  return key;
}

}  // namespace isfkit

#endif  // ISFKIT_LINALG_HPP
