#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conekit {

// Exact rational scalar. All coefficient arithmetic in the library runs on
// this type; nothing is ever rounded.
using Rational = mpq_class;

// Raised on malformed textual input (CLI exit code 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on out-of-domain input: not positive definite, zero denominator,
// inadmissible sequence, unsupported scale (CLI exit code 3).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// mpq_class(num, den) does not reduce; every ratio built from parts must go
// through here (GMP comparisons assume canonical form).
inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("make_rational: zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational_abs(const Rational& q) { return abs(q); }

// base^e for integer e, base != 0 when e < 0.
inline Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw DomainError("rational_pow: zero base with negative exponent");
    return Rational(0);
  }
  mpz_class num = base.get_num();
  mpz_class den = base.get_den();
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), k);
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), k);
  Rational out = (e > 0) ? Rational(pn, pd) : Rational(pd, pn);
  out.canonicalize();
  return out;
}

// Smallest integer >= q.
inline mpz_class rational_ceil(const Rational& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

// Largest integer <= q.
inline mpz_class rational_floor(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

// Parses "a" or "a/b" with optional sign; b > 0. Throws ParseError.
inline Rational parse_rational(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) throw ParseError("bad integer literal: " + text);
      return Rational(mpz_class(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
      throw ParseError("bad rational literal: " + text);
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in rational literal: " + text);
    Rational out(mpz_class(num), d);
    out.canonicalize();
    return out;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + text);
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace conekit

namespace Eigen {

template <>
struct NumTraits<conekit::Rational> : GenericNumTraits<conekit::Rational> {
  using Real = conekit::Rational;
  using NonInteger = conekit::Rational;
  using Nested = conekit::Rational;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 32,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
