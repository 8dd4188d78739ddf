#pragma once

#include "conekit/matrix.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace conekit {

// Standard-apartment geometry for the affine building of type A_{m-1}: the
// apartment is the sum-zero hyperplane of Q^m, with roots a_ij(z) = z_i - z_j
// and the affine Weyl group W_aff = S_m x translations. Of the affine
// building axioms, the W_aff closure of the apartment system (axiom 1) and
// the sector/diamond geometry used by the reconstruction argument are
// checkable inside one apartment and are exercised by the tests; the axioms
// quantifying over all apartments of the full building (2-5) hold by the
// classical theory and are not re-verified over an infinite field.

// Point of the standard apartment: rational coordinates summing to zero.
inline void require_apartment_point(const VectorQ& x) {
  Rational sum(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) sum += x(i);
  if (sum != 0) throw DomainError("apartment point: coordinates must sum to zero");
}

// Direction in the standard apartment: sum-zero and nonzero.
struct Direction {
  VectorQ t;

  explicit Direction(VectorQ v) : t(std::move(v)) {
    require_apartment_point(t);
    bool nonzero = false;
    for (Eigen::Index i = 0; i < t.size(); ++i)
      if (t(i) != 0) nonzero = true;
    if (!nonzero) throw DomainError("direction: must be nonzero");
  }
};

// The diamond cvx{x, y} inside the standard apartment: the polytope cut out
// by clamping every positive-root form a_ij(z) = z_i - z_j to the closed
// interval it spans between x and y.
class Diamond {
 public:
  Diamond(VectorQ x, VectorQ y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.size() != y_.size()) throw DomainError("diamond: dimension mismatch");
    if (x_.size() < 2) throw DomainError("diamond: need at least two coordinates");
    require_apartment_point(x_);
    require_apartment_point(y_);
  }

  const VectorQ& x() const { return x_; }
  const VectorQ& y() const { return y_; }
  Eigen::Index ambient() const { return x_.size(); }

  bool member(const VectorQ& z) const {
    if (z.size() != x_.size()) return false;
    Rational sum(0);
    for (Eigen::Index i = 0; i < z.size(); ++i) sum += z(i);
    if (sum != 0) return false;
    for (Eigen::Index i = 0; i < z.size(); ++i)
      for (Eigen::Index j = i + 1; j < z.size(); ++j) {
        Rational fx = x_(i) - x_(j), fy = y_(i) - y_(j), fz = z(i) - z(j);
        if (fz < std::min(fx, fy) || fz > std::max(fx, fy)) return false;
      }
    return true;
  }

  // Exact vertex enumeration: solve every (m-1)-subset of facet equalities
  // together with the sum-zero constraint, keep feasible solutions, dedupe.
  std::vector<VectorQ> vertices() const {
    const Eigen::Index m = x_.size();
    struct Facet {
      Eigen::Index i, j;
      Rational rhs;
    };
    std::vector<Facet> facets;
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = i + 1; j < m; ++j) {
        Rational fx = x_(i) - x_(j), fy = y_(i) - y_(j);
        facets.push_back({i, j, std::min(fx, fy)});
        if (fx != fy) facets.push_back({i, j, std::max(fx, fy)});
      }
    const Eigen::Index need = m - 1;
    std::vector<VectorQ> out;
    std::vector<Eigen::Index> pick(static_cast<std::size_t>(need));
    enumerate_subsets(facets, pick, 0, 0, need, out);
    std::sort(out.begin(), out.end(), [](const VectorQ& a, const VectorQ& b) {
      for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (b(i) < a(i)) return false;
      }
      return false;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const VectorQ& a, const VectorQ& b) { return a == b; }),
              out.end());
    return out;
  }

 private:
  template <typename FacetVec>
  void enumerate_subsets(const FacetVec& facets, std::vector<Eigen::Index>& pick,
                         std::size_t depth, Eigen::Index from, Eigen::Index need,
                         std::vector<VectorQ>& out) const {
    if (static_cast<Eigen::Index>(depth) == need) {
      const Eigen::Index m = x_.size();
      MatrixQ sys = MatrixQ::Zero(need + 1, m);
      VectorQ rhs(need + 1);
      for (Eigen::Index k = 0; k < need; ++k) {
        const auto& f = facets[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])];
        sys(k, f.i) = 1;
        sys(k, f.j) = -1;
        rhs(k) = f.rhs;
      }
      for (Eigen::Index c = 0; c < m; ++c) sys(need, c) = 1;
      rhs(need) = 0;
      auto sol = solve_unique<Rational>(sys, rhs);
      if (sol && member(*sol)) out.push_back(*sol);
      return;
    }
    for (Eigen::Index i = from; i < static_cast<Eigen::Index>(facets.size()); ++i) {
      pick[depth] = i;
      enumerate_subsets(facets, pick, depth + 1, i + 1, need, out);
    }
  }

  VectorQ x_, y_;
};

inline Diamond diamond(VectorQ x, VectorQ y) { return Diamond(std::move(x), std::move(y)); }

// Closed Weyl cone test: z - x lies in the sector based at x selected by the
// chamber (an ordering of the coordinates) iff the differences along the
// chamber order are nonnegative.
inline bool sector_member(const VectorQ& x, const std::vector<int>& chamber,
                          const VectorQ& z) {
  const Eigen::Index m = x.size();
  if (z.size() != m || static_cast<Eigen::Index>(chamber.size()) != m)
    throw DomainError("sector_member: dimension mismatch");
  require_apartment_point(x);
  require_apartment_point(z);
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int c : chamber) {
    if (c < 0 || c >= m || seen[static_cast<std::size_t>(c)])
      throw DomainError("sector_member: chamber must be a permutation of 0..m-1");
    seen[static_cast<std::size_t>(c)] = true;
  }
  for (std::size_t k = 0; k + 1 < chamber.size(); ++k) {
    Rational d = (z(chamber[k]) - x(chamber[k])) - (z(chamber[k + 1]) - x(chamber[k + 1]));
    if (d < 0) return false;
  }
  return true;
}

struct SectorRecoveryReport {
  int interior_samples = 0;
  int interior_covered = 0;
  int exterior_samples = 0;
  int exterior_rejected = 0;
  long k_cap = 0;
  bool passed = false;

  std::string summary() const {
    std::ostringstream os;
    os << "sector recovery: " << interior_covered << "/" << interior_samples
       << " sector points covered by diamonds with k <= " << k_cap << "; "
       << exterior_rejected << "/" << exterior_samples
       << " exterior points rejected by every diamond; "
       << (passed ? "PASS" : "FAIL");
    return os.str();
  }
};

// Checks the reconstruction of an x-based sector as the union of the chain of
// diamonds cvx{x, x + k v}: sampled sector points within the radius (sup
// norm) are covered by some diamond with bounded k, sampled exterior points
// by none. Exact membership tests throughout.
inline SectorRecoveryReport sector_recovery_check(const VectorQ& x,
                                                  const std::vector<int>& chamber,
                                                  const Direction& v,
                                                  const Rational& radius, int samples,
                                                  unsigned seed) {
  const Eigen::Index m = x.size();
  if (m < 2) throw DomainError("sector_recovery_check: need at least two coordinates");
  if (v.t.size() != m) throw DomainError("sector_recovery_check: dimension mismatch");
  if (radius <= 0) throw DomainError("sector_recovery_check: radius must be positive");
  if (!sector_member(VectorQ::Zero(m), chamber, v.t))
    throw DomainError("sector_recovery_check: direction not in the chamber");
  // Regularity and wall margin of v: minimal drop along the chamber order.
  Rational margin;
  bool margin_set = false;
  for (std::size_t k = 0; k + 1 < chamber.size(); ++k) {
    Rational d = v.t(chamber[k]) - v.t(chamber[k + 1]);
    if (!margin_set || d < margin) {
      margin = d;
      margin_set = true;
    }
  }
  if (!margin_set || margin <= 0)
    throw DomainError("sector_recovery_check: direction must be regular in the chamber");

  SectorRecoveryReport report;
  report.k_cap = rational_ceil(2 * radius / margin).get_si();

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> numer(0, 1000);
  auto random_sorted_offset = [&](bool sorted) {
    // Random rational offsets with denominator 1000, projected to sum zero;
    // sorting along the chamber order before projecting lands in the sector.
    std::vector<Rational> raw(static_cast<std::size_t>(m));
    for (auto& r : raw) r = make_rational(numer(rng), 1000);
    if (sorted) std::sort(raw.begin(), raw.end(), std::greater<Rational>());
    Rational mean(0);
    for (const auto& r : raw) mean += r;
    mean /= m;
    VectorQ w(m);
    Rational maxabs(0);
    for (Eigen::Index i = 0; i < m; ++i) {
      w(chamber[static_cast<std::size_t>(i)]) = raw[static_cast<std::size_t>(i)] - mean;
      Rational a = rational_abs(w(chamber[static_cast<std::size_t>(i)]));
      if (a > maxabs) maxabs = a;
    }
    if (maxabs > 0) w *= radius / maxabs;  // stretch to the ball boundary scale
    return w;
  };

  auto covered = [&](const VectorQ& z) {
    for (long k = 0; k <= report.k_cap; ++k) {
      VectorQ tip = x + Rational(k) * v.t;
      if (Diamond(x, tip).member(z)) return true;
    }
    return false;
  };

  for (int s = 0; s < samples; ++s) {
    VectorQ z = x + random_sorted_offset(true);
    ++report.interior_samples;
    if (sector_member(x, chamber, z) && covered(z)) ++report.interior_covered;
  }
  int produced = 0;
  long attempts = 0;
  while (produced < samples) {
    if (++attempts > 1000L * samples + 1000)
      throw DomainError("sector_recovery_check: could not sample exterior points");
    VectorQ z = x + random_sorted_offset(false);
    if (sector_member(x, chamber, z)) continue;  // want exterior points only
    ++produced;
    ++report.exterior_samples;
    if (!covered(z)) ++report.exterior_rejected;
  }
  report.passed = report.interior_covered == report.interior_samples &&
                  report.exterior_rejected == report.exterior_samples;
  return report;
}

}  // namespace conekit
