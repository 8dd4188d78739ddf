#pragma once

#include "conekit/matrix.hpp"

#include <utility>
#include <vector>

namespace conekit {

struct LdltDecomposition {
  MatrixK L;  // unit lower triangular
  VectorK D;  // pivots; A = L * diag(D) * L^T exactly
  bool positive_definite;
};

// Sequential (unpivoted) LDL^T over K. SPD inputs never need a permutation;
// a zero pivot on a symmetric input therefore certifies "not positive
// definite" and is reported as a domain error.
inline LdltDecomposition ldlt(const MatrixK& a) {
  if (!is_symmetric(a)) throw DomainError("ldlt: matrix is not symmetric");
  const Eigen::Index n = a.rows();
  MatrixK w = a;
  MatrixK l = MatrixK::Identity(n, n);
  VectorK d(n);
  bool positive = true;
  for (Eigen::Index k = 0; k < n; ++k) {
    HahnNumber pivot = w(k, k);
    if (pivot.is_zero()) throw DomainError("ldlt: not positive definite (zero pivot)");
    if (pivot.sign() < 0) positive = false;
    d(k) = pivot;
    for (Eigen::Index i = k + 1; i < n; ++i) l(i, k) = w(i, k) / pivot;
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j <= i; ++j) {
        w(i, j) = w(i, j) - l(i, k) * w(k, j);
        w(j, i) = w(i, j);
      }
  }
  return {std::move(l), std::move(d), positive};
}

inline bool is_positive_definite(const MatrixK& a) {
  if (!is_symmetric(a)) return false;
  try {
    return ldlt(a).positive_definite;
  } catch (const DomainError&) {
    return false;  // zero pivot: some leading principal minor vanishes
  }
}

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
inline HahnNumber determinant(const MatrixK& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant: matrix not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return HahnNumber(1);
  MatrixK m = a;
  HahnNumber prev(1);
  int sgn = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) {
          swap = i;
          break;
        }
      if (swap < 0) return HahnNumber(0);
      m.row(k).swap(m.row(swap));
      sgn = -sgn;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sgn < 0 ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

// g . A = g A g^T, the P(m, .) action.
inline MatrixK congruence_act(const MatrixK& g, const MatrixK& a) {
  if (g.rows() != g.cols() || g.rows() != a.rows())
    throw DomainError("congruence_act: dimension mismatch");
  MatrixK out = g * a * g.transpose();
  // Exact arithmetic: mirror the lower triangle so the result is
  // representationally symmetric, not just semantically.
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j) out(j, i) = out(i, j);
  return out;
}

// Univariate polynomial over K, coefficients indexed by power.
class PolynomialK {
 public:
  PolynomialK() = default;
  explicit PolynomialK(std::vector<HahnNumber> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  bool is_zero() const { return coeffs_.empty(); }
  Eigen::Index degree() const {
    if (is_zero()) throw DomainError("degree of zero polynomial");
    return static_cast<Eigen::Index>(coeffs_.size()) - 1;
  }
  const std::vector<HahnNumber>& coeffs() const { return coeffs_; }
  const HahnNumber& operator[](std::size_t i) const { return coeffs_[i]; }

  HahnNumber eval(const HahnNumber& x) const {
    HahnNumber acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  std::vector<HahnNumber> coeffs_;
};

// p(lambda) = det(lambda * A - B), computed by exact interpolation at
// lambda = 0..m. Degree m, leading coefficient det(A), constant term
// (-1)^m det(B).
inline PolynomialK generalized_charpoly(const MatrixK& a, const MatrixK& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DomainError("generalized_charpoly: dimension mismatch");
  if (!is_positive_definite(a))
    throw DomainError("generalized_charpoly: left matrix not positive definite");
  const Eigen::Index m = a.rows();
  std::vector<HahnNumber> values(m + 1);
  for (Eigen::Index t = 0; t <= m; ++t)
    values[t] = determinant((HahnNumber(static_cast<long>(t)) * a - b).eval());

  // Lagrange basis over the integer nodes, expanded with rational arithmetic.
  std::vector<HahnNumber> coeffs(m + 1, HahnNumber(0));
  for (Eigen::Index t = 0; t <= m; ++t) {
    std::vector<Rational> basis{1};  // product of (x - s) / (t - s), s != t
    Rational denom(1);
    for (Eigen::Index s = 0; s <= m; ++s) {
      if (s == t) continue;
      basis.push_back(0);
      for (std::size_t j = basis.size() - 1; j > 0; --j)
        basis[j] = basis[j - 1] - Rational(static_cast<long>(s)) * basis[j];
      basis[0] *= -Rational(static_cast<long>(s));
      denom *= Rational(static_cast<long>(t - s));
    }
    for (std::size_t j = 0; j < basis.size(); ++j)
      coeffs[j] += values[t] * HahnNumber(basis[j] / denom);
  }
  return PolynomialK(std::move(coeffs));
}

struct NewtonPolygon {
  struct Point {
    Eigen::Index index;
    Rational valuation;
  };
  struct Segment {
    Rational slope;
    Eigen::Index length;  // horizontal extent; root multiplicity
  };
  std::vector<Point> points;    // finite-valuation coefficients only
  std::vector<Segment> hull;    // lower convex hull, left to right
};

inline NewtonPolygon newton_polygon(const PolynomialK& p) {
  if (p.is_zero()) throw DomainError("newton_polygon: zero polynomial");
  NewtonPolygon np;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const HahnNumber& c = p.coeffs()[i];
    if (!c.is_zero()) np.points.push_back({static_cast<Eigen::Index>(i), c.valuation().value()});
  }
  // Andrew monotone chain, lower hull only; indices are already increasing.
  std::vector<NewtonPolygon::Point> hull;
  for (const auto& pt : np.points) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      Rational cross = Rational(static_cast<long>(a.index - o.index)) * (pt.valuation - o.valuation) -
                       (a.valuation - o.valuation) * Rational(static_cast<long>(pt.index - o.index));
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Eigen::Index len = hull[i].index - hull[i - 1].index;
    Rational slope = (hull[i].valuation - hull[i - 1].valuation) / Rational(static_cast<long>(len));
    np.hull.push_back({std::move(slope), len});
  }
  return np;
}

struct RootValuations {
  std::vector<Rational> finite;  // one entry per root, multiplicities expanded
  Eigen::Index infinite_count;   // roots at lambda = 0 (valuation infinity)
};

// Valuations of the roots of p in the algebraic closure, read off the Newton
// polygon: each lower-hull segment of slope s contributes (horizontal length)
// roots of valuation -s. No root is ever extracted.
inline RootValuations root_valuations(const PolynomialK& p) {
  if (p.is_zero()) throw DomainError("root_valuations: zero polynomial");
  if (p.degree() < 1) throw DomainError("root_valuations: constant polynomial");
  std::size_t low = 0;
  while (p.coeffs()[low].is_zero()) ++low;  // lambda^low divides p
  RootValuations out{{}, static_cast<Eigen::Index>(low)};
  std::vector<HahnNumber> rest(p.coeffs().begin() + static_cast<std::ptrdiff_t>(low),
                               p.coeffs().end());
  PolynomialK q(std::move(rest));
  if (q.degree() >= 1) {
    NewtonPolygon np = newton_polygon(q);
    for (const auto& seg : np.hull)
      for (Eigen::Index i = 0; i < seg.length; ++i) out.finite.push_back(-seg.slope);
  }
  std::sort(out.finite.begin(), out.finite.end());
  return out;
}

}  // namespace conekit
