#pragma once

#include "conekit/linalg.hpp"

#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

namespace conekit {

// A point of the cone: a positive-definite symmetric representative over K
// with valuation-zero determinant. Two ConePoints are the same cone point iff
// their distance vanishes; equality of reps is *not* required.
class ConePoint {
 public:
  explicit ConePoint(MatrixK rep) : rep_(std::move(rep)) {
    if (!is_symmetric(rep_)) throw DomainError("cone point: representative not symmetric");
    if (!ldlt(rep_).positive_definite)
      throw DomainError("cone point: representative not positive definite");
    Valuation v = determinant(rep_).valuation();
    if (v.is_infinite() || v.value() != 0)
      throw DomainError("cone point: determinant valuation is not zero");
  }

  static ConePoint identity(Eigen::Index m) { return ConePoint(MatrixK::Identity(m, m)); }

  const MatrixK& rep() const { return rep_; }
  Eigen::Index dim() const { return rep_.rows(); }

  bool diagonal_rep() const {
    for (Eigen::Index i = 0; i < rep_.rows(); ++i)
      for (Eigen::Index j = 0; j < rep_.cols(); ++j)
        if (i != j && !rep_(i, j).is_zero()) return false;
    return true;
  }

 private:
  MatrixK rep_;
};

// Squared cone distance. The exact artifact is the square; the square root is
// irrational in general and only offered as a float convenience.
struct DistanceSq {
  Rational value;
  double approx_distance() const { return std::sqrt(to_double(value)); }
};

// d^2 between cone points. Diagonal pairs use the valuation-difference
// formula directly; the general case reads the valuations of the generalized
// eigenvalues of the pencil off the Newton polygon. The two paths agree on
// diagonal inputs and the general one is congruence invariant.
inline DistanceSq distance_sq(const ConePoint& p, const ConePoint& q) {
  if (p.dim() != q.dim()) throw DomainError("distance_sq: dimension mismatch");
  Rational acc(0);
  if (p.diagonal_rep() && q.diagonal_rep()) {
    for (Eigen::Index i = 0; i < p.dim(); ++i) {
      Rational d = p.rep()(i, i).valuation().value() - q.rep()(i, i).valuation().value();
      acc += d * d;
    }
    return {acc};
  }
  RootValuations rv = root_valuations(generalized_charpoly(p.rep(), q.rep()));
  if (rv.infinite_count != 0)
    throw DomainError("distance_sq: pencil has zero generalized eigenvalues");
  Rational total = std::accumulate(rv.finite.begin(), rv.finite.end(), Rational(0));
  if (total != 0)
    throw std::logic_error("distance_sq: root valuations do not sum to zero");
  for (const Rational& v : rv.finite) acc += v * v;
  return {acc};
}

inline bool same_point(const ConePoint& p, const ConePoint& q) {
  return distance_sq(p, q).value == 0;
}

// log phi_A(x) = -v(x^T A x) / 2, exact in Q. phi itself is e to this value.
inline Rational norm_log_eval(const ConePoint& a, const VectorK& x) {
  if (x.size() != a.dim()) throw DomainError("norm_log_eval: dimension mismatch");
  bool all_zero = true;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!x(i).is_zero()) {
      all_zero = false;
      break;
    }
  if (all_zero) throw DomainError("norm_log_eval: zero vector");
  HahnNumber y = (x.transpose() * a.rep() * x)(0, 0);
  return -y.valuation().value() / 2;
}

// ---------------------------------------------------------------------------
// Symbolic sequences of diagonal matrices.
// ---------------------------------------------------------------------------

// One term c * e^{q n} of a diagonal entry.
struct SeqTerm {
  Rational c;
  Rational q;
};

// Symbolic sequence of diagonal m x m matrices, entry i given by
// a_i(n) = sum_j c_j e^{q_j n}.
struct SeqSpec {
  Eigen::Index m = 0;
  std::vector<std::vector<SeqTerm>> diag;
};

// Merges duplicate exponents, sorts each entry by decreasing q, and checks
// that every entry is eventually positive (dominant coefficient > 0).
inline SeqSpec normalize_seq_spec(SeqSpec s) {
  if (s.m < 1 || static_cast<Eigen::Index>(s.diag.size()) != s.m)
    throw DomainError("sequence spec: entry count does not match dimension");
  for (auto& entry : s.diag) {
    std::sort(entry.begin(), entry.end(),
              [](const SeqTerm& a, const SeqTerm& b) { return a.q > b.q; });
    std::vector<SeqTerm> merged;
    for (auto& t : entry) {
      if (!merged.empty() && merged.back().q == t.q) {
        merged.back().c += t.c;
        if (merged.back().c == 0) merged.pop_back();
      } else if (t.c != 0) {
        merged.push_back(std::move(t));
      }
    }
    if (merged.empty()) throw DomainError("sequence spec: entry is identically zero");
    if (merged.front().c <= 0)
      throw DomainError("sequence spec: entry is not eventually positive");
    entry = std::move(merged);
  }
  return s;
}

// One term c * e^{p(n)} with a polynomial exponent; exponent[i] is the
// coefficient of n^i.
struct ExpTerm {
  Rational c;
  std::vector<Rational> exponent;
};

struct ExpCheckResult {
  bool admissible;
  long k;  // witness: e^{-kn} < |a_i(n)| < e^{kn} for all large n; valid iff admissible
};

namespace detail {
inline Rational poly_coeff(const std::vector<Rational>& p, std::size_t i) {
  return i < p.size() ? p[i] : Rational(0);
}
inline int poly_degree(const std::vector<Rational>& p) {
  for (std::size_t i = p.size(); i > 0; --i)
    if (p[i - 1] != 0) return static_cast<int>(i - 1);
  return 0;
}
}  // namespace detail

// Decides the growth condition: a sequence of diagonal matrices stays within
// e^{+-kn} of the base point iff every exponent polynomial is (at most)
// linear. The returned k is computed with rational bounds on e from both
// sides, so the witness inequalities are certified without any transcendental
// arithmetic.
inline ExpCheckResult exp_condition_check(const std::vector<std::vector<ExpTerm>>& entries) {
  const Rational e_low = make_rational(271828, 100000);   // < e
  const Rational e_high = make_rational(271829, 100000);  // > e
  if (entries.empty()) throw DomainError("exp check: no entries");
  auto exp_upper = [&](const Rational& t) {  // rational upper bound of e^t
    return t > 0 ? rational_pow(e_high, rational_ceil(t).get_si()) : Rational(1);
  };
  bool have_term = false;
  Rational q_abs_max(0), q_max(0);
  struct Dominant {
    Rational q, b, c_abs;
  };
  std::vector<Dominant> dominant;  // lexicographically largest (q, b) term per entry
  Rational upper_sum(0);           // bounds sum |c_j| e^{b_j} from above
  for (const auto& entry : entries) {
    if (entry.empty()) throw DomainError("exp check: empty entry");
    bool dom_set = false;
    Dominant dom;
    for (const auto& t : entry) {
      if (t.c == 0) continue;
      if (detail::poly_degree(t.exponent) > 1) return {false, 0};
      Rational q = detail::poly_coeff(t.exponent, 1);
      Rational b = detail::poly_coeff(t.exponent, 0);
      if (!have_term || q > q_max) q_max = q;
      Rational qa = rational_abs(q);
      if (!have_term || qa > q_abs_max) q_abs_max = qa;
      have_term = true;
      upper_sum += rational_abs(t.c) * exp_upper(b);
      if (!dom_set || q > dom.q || (q == dom.q && b > dom.b)) {
        dom = {q, b, rational_abs(t.c)};
        dom_set = true;
      }
    }
    if (!dom_set) throw DomainError("exp check: entry is identically zero");
    dominant.push_back(dom);
  }
  if (!have_term) throw DomainError("exp check: no nonzero terms");

  // Smallest k whose certificate passes. The upper bound is certified for all
  // n >= 1; the lower bound is certified for all n >= 1 on single-term entries
  // and for all large n in general (small-n dips from cancellation are outside
  // the symbolic fragment).
  for (long k = 1;; ++k) {
    if (!(Rational(k) > q_abs_max)) continue;
    long up_floor = rational_floor(Rational(k) - q_max).get_si();
    if (up_floor < 1 || !(upper_sum < rational_pow(e_low, up_floor))) continue;
    bool low_ok = true;
    for (const Dominant& d : dominant) {
      if (!(Rational(k) + d.q > 0)) {
        low_ok = false;
        break;
      }
      long low_floor = rational_floor(Rational(k) + d.q).get_si();
      if (!(exp_upper(-d.b) / d.c_abs < rational_pow(e_low, low_floor))) {
        low_ok = false;
        break;
      }
    }
    if (low_ok) return {true, k};
  }
}

inline ExpCheckResult exp_condition_check(const SeqSpec& s) {
  SeqSpec n = normalize_seq_spec(s);
  std::vector<std::vector<ExpTerm>> entries;
  for (const auto& entry : n.diag) {
    std::vector<ExpTerm> e;
    for (const auto& t : entry) e.push_back({t.c, {Rational(0), t.q}});
    entries.push_back(std::move(e));
  }
  return exp_condition_check(entries);
}

// Maps a symbolic sequence to its cone point through the substitution
// e^{q n} -> r^{-q} (rho is the class of (e^{-n})). Order and valuation of the
// image agree with the eventual order and growth of the sequence.
inline ConePoint point_from_sequence(const SeqSpec& s) {
  SeqSpec n = normalize_seq_spec(s);
  ExpCheckResult chk = exp_condition_check(n);
  if (!chk.admissible) throw DomainError("point_from_sequence: sequence violates the growth condition");
  Rational dom_sum(0);
  for (const auto& entry : n.diag) dom_sum += entry.front().q;
  if (dom_sum != 0)
    throw DomainError("point_from_sequence: determinant valuation is not zero");
  MatrixK rep = MatrixK::Zero(n.m, n.m);
  for (Eigen::Index i = 0; i < n.m; ++i) {
    std::vector<HahnTerm> terms;
    for (const auto& t : n.diag[static_cast<std::size_t>(i)]) terms.push_back({t.c, -t.q});
    rep(i, i) = HahnNumber(HahnPolynomial::from_terms(std::move(terms)));
  }
  return ConePoint(std::move(rep));
}

enum class EventualTruth { EventuallyTrue, EventuallyFalse };

inline const char* to_string(EventualTruth t) {
  return t == EventualTruth::EventuallyTrue ? "EVENTUALLY_TRUE" : "EVENTUALLY_FALSE";
}

// Decides the relation R_q: whether d(A_n, B_n) <= q n holds for all
// sufficiently large n (it holds or fails cofinitely for single-term
// sequences). With a_i(n) = c_i e^{q_i n} and b_i likewise,
//   d(A_n, B_n)^2 = (sum dq_i^2) n^2 + 2 (sum dq_i ln rho_i) n + sum ln^2 rho_i,
// dq_i = q_i - q_i', rho_i = c_i / c_i'. The three coefficients are compared
// against q^2 n^2 lexicographically; each comparison is exact in Q because
// sums of dq_i ln rho_i are signs of rational products.
inline EventualTruth relation_Rq(const SeqSpec& a, const SeqSpec& b, const Rational& q) {
  if (q <= 0) throw DomainError("relation_Rq: q must be positive");
  SeqSpec na = normalize_seq_spec(a), nb = normalize_seq_spec(b);
  if (na.m != nb.m) throw DomainError("relation_Rq: dimension mismatch");
  std::vector<Rational> dq(na.m);
  std::vector<Rational> ratio(na.m);
  for (Eigen::Index i = 0; i < na.m; ++i) {
    const auto& ea = na.diag[static_cast<std::size_t>(i)];
    const auto& eb = nb.diag[static_cast<std::size_t>(i)];
    if (ea.size() != 1 || eb.size() != 1)
      throw DomainError("relation_Rq: entries must be single-term");
    dq[i] = ea[0].q - eb[0].q;
    ratio[i] = ea[0].c / eb[0].c;
  }
  Rational lead(0);
  for (const Rational& d : dq) lead += d * d;
  if (lead < q * q) return EventualTruth::EventuallyTrue;
  if (lead > q * q) return EventualTruth::EventuallyFalse;

  // Leading tie: the n-linear term has the sign of sum dq_i ln ratio_i,
  // i.e. of prod ratio_i^{dq_i N} - 1 for any common denominator N.
  mpz_class common(1);
  for (const Rational& d : dq)
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), d.get_den().get_mpz_t());
  Rational prod(1);
  for (Eigen::Index i = 0; i < na.m; ++i) {
    Rational e = dq[i] * Rational(common);
    if (!e.get_num().fits_slong_p())
      throw DomainError("relation_Rq: exponent too large");
    prod *= rational_pow(ratio[i], e.get_num().get_si());
  }
  if (prod > 1) return EventualTruth::EventuallyFalse;
  if (prod < 1) return EventualTruth::EventuallyTrue;

  // Second tie: the constant term sum ln^2 ratio_i is positive unless every
  // ratio is 1, in which case the distance is exactly q n.
  for (const Rational& r : ratio)
    if (r != 1) return EventualTruth::EventuallyFalse;
  return EventualTruth::EventuallyTrue;
}

}  // namespace conekit
