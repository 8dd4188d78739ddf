#pragma once

#include "conekit/hahn.hpp"

#include <Eigen/Dense>

#include <vector>

namespace Eigen {

template <>
struct NumTraits<conekit::HahnNumber> : GenericNumTraits<conekit::HahnNumber> {
  using Real = conekit::HahnNumber;
  using NonInteger = conekit::HahnNumber;
  using Nested = conekit::HahnNumber;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 32,
    AddCost = 128,
    MulCost = 256,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace conekit {

using MatrixK = Eigen::Matrix<HahnNumber, Eigen::Dynamic, Eigen::Dynamic>;
using VectorK = Eigen::Matrix<HahnNumber, Eigen::Dynamic, 1>;
using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j)
      if (!(a(i, j) == a(j, i))) return false;
  return true;
}

// In-place Gauss-Jordan over an exact field; returns the rank. Rows end up in
// reduced echelon form with unit pivots, zero rows last.
template <typename Scalar>
Eigen::Index rref_in_place(DenseMatrix<Scalar>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (!(m(i, col) == Scalar(0))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    Scalar inv = Scalar(1) / m(rank, col);
    for (Eigen::Index j = col; j < cols; ++j) m(rank, j) = m(rank, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == rank || m(i, col) == Scalar(0)) continue;
      Scalar f = m(i, col);
      for (Eigen::Index j = col; j < cols; ++j) m(i, j) = m(i, j) - f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <typename Scalar>
DenseMatrix<Scalar> rref(DenseMatrix<Scalar> m) {
  Eigen::Index r = rref_in_place(m);
  return m.topRows(r);
}

template <typename Scalar>
Eigen::Index rank(DenseMatrix<Scalar> m) {
  return rref_in_place(m);
}

// Basis of the kernel {x : m x = 0}, one vector per column of the result.
template <typename Scalar>
DenseMatrix<Scalar> kernel_basis(DenseMatrix<Scalar> m) {
  const Eigen::Index cols = m.cols();
  Eigen::Index r = rref_in_place(m);
  std::vector<Eigen::Index> pivot_col(r);
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index i = 0; i < r; ++i) {
    Eigen::Index j = 0;
    while (j < cols && m(i, j) == Scalar(0)) ++j;
    pivot_col[i] = j;
    is_pivot[j] = true;
  }
  DenseMatrix<Scalar> out(cols, cols - r);
  out.setZero();
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    out(free, k) = Scalar(1);
    for (Eigen::Index i = 0; i < r; ++i) out(pivot_col[i], k) = -m(i, free);
    ++k;
  }
  return out;
}

// Solution of a consistent exact system with full column rank; nullopt when
// the system is inconsistent or underdetermined.
template <typename Scalar>
std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> solve_unique(
    const DenseMatrix<Scalar>& a, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
  const Eigen::Index unknowns = a.cols();
  DenseMatrix<Scalar> aug(a.rows(), unknowns + 1);
  aug.leftCols(unknowns) = a;
  aug.col(unknowns) = b;
  Eigen::Index r = rref_in_place(aug);
  std::vector<Eigen::Index> pivot_col(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    Eigen::Index j = 0;
    while (j <= unknowns && aug(i, j) == Scalar(0)) ++j;
    if (j == unknowns) return std::nullopt;  // row 0 = nonzero: inconsistent
    pivot_col[i] = j;
  }
  if (r != unknowns) return std::nullopt;  // underdetermined
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(unknowns);
  for (Eigen::Index i = 0; i < r; ++i) x(pivot_col[i]) = aug(i, unknowns);
  return x;
}

}  // namespace conekit
