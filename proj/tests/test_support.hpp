#pragma once

#include "conekit/cone.hpp"
#include "conekit/flags.hpp"
#include "conekit/linalg.hpp"

#include <random>
#include <vector>

namespace testsupport {

using conekit::HahnNumber;
using conekit::HahnPolynomial;
using conekit::HahnTerm;
using conekit::MatrixK;
using conekit::Rational;
using conekit::VectorK;

// Deterministic generator for small exact values. Sizes are kept tight so
// that chained cross-multiplications stay cheap.
class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Rational rational(bool nonzero = false) {
    int num = uniform(-9, 9);
    if (nonzero)
      while (num == 0) num = uniform(-9, 9);
    return conekit::make_rational(num, uniform(1, 4));
  }

  Rational positive_rational() {
    return conekit::make_rational(uniform(1, 9), uniform(1, 4));
  }

  Rational exponent() { return conekit::make_rational(uniform(-6, 6), uniform(1, 3)); }

  HahnPolynomial poly(int max_terms, bool nonzero) {
    std::vector<HahnTerm> terms;
    int n = uniform(nonzero ? 1 : 0, max_terms);
    for (int i = 0; i < n; ++i) terms.push_back({rational(true), exponent()});
    HahnPolynomial p = HahnPolynomial::from_terms(std::move(terms));
    if (nonzero && p.is_zero()) return HahnPolynomial(1, exponent());
    return p;
  }

  HahnNumber number() { return HahnNumber(poly(3, false), poly(2, true)); }

  HahnNumber nonzero_number() {
    HahnNumber x = number();
    while (x.is_zero()) x = number();
    return x;
  }

  HahnNumber positive_monomial() { return HahnNumber::monomial(positive_rational(), exponent()); }

  // Unit lower triangular with random entries below the diagonal.
  MatrixK unit_lower(Eigen::Index m) {
    MatrixK l = MatrixK::Identity(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < i; ++j) l(i, j) = small_number();
    return l;
  }

  // Determinant-1 matrix over K: product of a unit lower and a unit upper
  // triangular factor.
  MatrixK unimodular(Eigen::Index m) {
    MatrixK u = MatrixK::Identity(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = i + 1; j < m; ++j) u(i, j) = small_number();
    return MatrixK(unit_lower(m) * u);
  }

  // SPD over K with positive-monomial pivots: L D L^T.
  MatrixK spd(Eigen::Index m, bool unit_valuation_det = false) {
    MatrixK l = unit_lower(m);
    VectorK d(m);
    Rational exp_sum(0);
    for (Eigen::Index i = 0; i < m; ++i) {
      Rational q = i + 1 < m || !unit_valuation_det ? exponent() : -exp_sum;
      exp_sum += q;
      d(i) = HahnNumber::monomial(positive_rational(), q);
    }
    return MatrixK(l * d.asDiagonal() * l.transpose());
  }

  // Sparse small values keep matrix products readable and fast.
  HahnNumber small_number() {
    int pick = uniform(0, 3);
    if (pick == 0) return HahnNumber(0);
    if (pick == 1) return HahnNumber(rational(true));
    return HahnNumber::monomial(rational(true), Rational(uniform(-2, 2)));
  }

  std::mt19937& raw() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace testsupport
