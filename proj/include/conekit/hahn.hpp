#pragma once

#include "conekit/rational.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace conekit {

// One monomial c * r^e of a rho-polynomial. r is a positive infinitesimal,
// so the term with the *smallest* exponent dominates in magnitude.
struct HahnTerm {
  Rational coeff;     // nonzero
  Rational exponent;  // exponent of r

  friend bool operator==(const HahnTerm& a, const HahnTerm& b) {
    return a.coeff == b.coeff && a.exponent == b.exponent;
  }
};

// Finitely supported element of Q[r^Q]: terms sorted strictly increasing by
// exponent, no zero coefficients. The zero polynomial is the empty list.
class HahnPolynomial {
 public:
  HahnPolynomial() = default;

  HahnPolynomial(Rational coeff, Rational exponent) {
    if (coeff != 0) terms_.push_back({std::move(coeff), std::move(exponent)});
  }

  // Merges duplicate exponents and drops cancelled terms.
  static HahnPolynomial from_terms(std::vector<HahnTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const HahnTerm& a, const HahnTerm& b) { return a.exponent < b.exponent; });
    HahnPolynomial out;
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
        out.terms_.back().coeff += t.coeff;
        if (out.terms_.back().coeff == 0) out.terms_.pop_back();
      } else if (t.coeff != 0) {
        out.terms_.push_back(std::move(t));
      }
    }
    return out;
  }

  static HahnPolynomial one() { return HahnPolynomial(1, 0); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].exponent == 0;
  }
  bool is_monomial() const { return terms_.size() == 1; }

  const std::vector<HahnTerm>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Minimal-exponent term; dominates as r -> 0+. Requires nonzero.
  const HahnTerm& leading() const {
    if (is_zero()) throw DomainError("leading term of zero polynomial");
    return terms_.front();
  }
  const HahnTerm& top() const {  // maximal exponent
    if (is_zero()) throw DomainError("top term of zero polynomial");
    return terms_.back();
  }

  HahnPolynomial negated() const {
    HahnPolynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  // Multiplies by c * r^e.
  HahnPolynomial scaled(const Rational& c, const Rational& e) const {
    if (c == 0) return {};
    HahnPolynomial out = *this;
    for (auto& t : out.terms_) {
      t.coeff *= c;
      t.exponent += e;
    }
    return out;
  }

  friend HahnPolynomial operator+(const HahnPolynomial& a, const HahnPolynomial& b) {
    HahnPolynomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      const auto& ta = a.terms_[i];
      const auto& tb = b.terms_[j];
      if (ta.exponent < tb.exponent) {
        out.terms_.push_back(ta);
        ++i;
      } else if (tb.exponent < ta.exponent) {
        out.terms_.push_back(tb);
        ++j;
      } else {
        Rational c = ta.coeff + tb.coeff;
        if (c != 0) out.terms_.push_back({std::move(c), ta.exponent});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
    return out;
  }

  friend HahnPolynomial operator-(const HahnPolynomial& a, const HahnPolynomial& b) {
    return a + b.negated();
  }

  friend HahnPolynomial operator*(const HahnPolynomial& a, const HahnPolynomial& b) {
    HahnPolynomial out;
    for (const auto& ta : a.terms_) out = out + b.scaled(ta.coeff, ta.exponent);
    return out;
  }

  friend bool operator==(const HahnPolynomial& a, const HahnPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<HahnTerm> terms_;
};

// Exact polynomial division from the top (maximal-exponent) end. Returns the
// quotient when den divides num exactly, nullopt otherwise. Step-capped: this
// is only ever used as a best-effort reduction.
inline std::optional<HahnPolynomial> divide_exact(const HahnPolynomial& num,
                                                  const HahnPolynomial& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return HahnPolynomial{};
  const Rational quot_min = num.leading().exponent - den.leading().exponent;
  HahnPolynomial rem = num;
  std::vector<HahnTerm> q_terms;
  for (int step = 0; step < 256; ++step) {
    if (rem.is_zero()) return HahnPolynomial::from_terms(std::move(q_terms));
    const HahnTerm& rt = rem.top();
    const HahnTerm& dt = den.top();
    Rational qe = rt.exponent - dt.exponent;
    if (qe < quot_min) return std::nullopt;
    Rational qc = rt.coeff / dt.coeff;
    rem = rem - den.scaled(qc, qe);
    q_terms.push_back({std::move(qc), std::move(qe)});
  }
  return std::nullopt;
}

// Valuation value: a rational, or infinity for the zero element.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(Rational v) : value_(std::move(v)) {}

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const {
    if (is_infinite()) throw DomainError("valuation of zero is infinite");
    return *value_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.value_ == b.value_;
  }
  // infinity compares greater than every rational value.
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value_ < *b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    return v.is_infinite() ? (os << "inf") : (os << v.value().get_str());
  }

 private:
  Valuation() = default;
  std::optional<Rational> value_;
};

enum class Ordering { Less, Equal, Greater };

// Element of the ordered field K = Frac(Q[r^Q]), kept as a ratio of
// rho-polynomials. Canonical form: the denominator's minimal-exponent term is
// 1 * r^0, so denominators are positive and the numerator carries sign,
// valuation and leading data. Equality is cross-multiplication equality, never
// representation equality; reduction of the ratio is best-effort only.
class HahnNumber {
 public:
  HahnNumber() : num_(), den_(HahnPolynomial::one()) {}
  HahnNumber(long v) : num_(Rational(v), 0), den_(HahnPolynomial::one()) {}
  HahnNumber(int v) : HahnNumber(static_cast<long>(v)) {}
  HahnNumber(Rational v) : num_(std::move(v), 0), den_(HahnPolynomial::one()) {}
  HahnNumber(HahnPolynomial p) : num_(std::move(p)), den_(HahnPolynomial::one()) {}

  HahnNumber(HahnPolynomial num, HahnPolynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("zero denominator");
    canonicalize();
  }

  // c * r^q
  static HahnNumber monomial(Rational c, Rational q) {
    return HahnNumber(HahnPolynomial(std::move(c), std::move(q)));
  }
  static HahnNumber rho(Rational q = Rational(1)) { return monomial(1, std::move(q)); }

  const HahnPolynomial& numerator() const { return num_; }
  const HahnPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  int sign() const { return num_.is_zero() ? 0 : conekit::sign(num_.leading().coeff); }

  friend HahnNumber operator+(const HahnNumber& a, const HahnNumber& b) {
    if (a.den_ == b.den_) return HahnNumber(a.num_ + b.num_, a.den_);
    return HahnNumber(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend HahnNumber operator-(const HahnNumber& a, const HahnNumber& b) {
    if (a.den_ == b.den_) return HahnNumber(a.num_ - b.num_, a.den_);
    return HahnNumber(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  HahnNumber operator-() const {
    HahnNumber out = *this;
    out.num_ = out.num_.negated();
    return out;
  }
  friend HahnNumber operator*(const HahnNumber& a, const HahnNumber& b) {
    return HahnNumber(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend HahnNumber operator/(const HahnNumber& a, const HahnNumber& b) {
    return a * b.inverse();
  }

  HahnNumber& operator+=(const HahnNumber& o) { return *this = *this + o; }
  HahnNumber& operator-=(const HahnNumber& o) { return *this = *this - o; }
  HahnNumber& operator*=(const HahnNumber& o) { return *this = *this * o; }
  HahnNumber& operator/=(const HahnNumber& o) { return *this = *this / o; }

  HahnNumber inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return HahnNumber(den_, num_);
  }

  friend bool operator==(const HahnNumber& a, const HahnNumber& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const HahnNumber& a, const HahnNumber& b) { return !(a == b); }

  // Total order: sign of the difference. Denominators are positive in
  // canonical form, so cross-multiplied numerators decide.
  friend Ordering compare(const HahnNumber& a, const HahnNumber& b) {
    HahnPolynomial diff = a.num_ * b.den_ - b.num_ * a.den_;
    if (diff.is_zero()) return Ordering::Equal;
    return conekit::sign(diff.leading().coeff) < 0 ? Ordering::Less : Ordering::Greater;
  }
  friend bool operator<(const HahnNumber& a, const HahnNumber& b) {
    return compare(a, b) == Ordering::Less;
  }
  friend bool operator>(const HahnNumber& a, const HahnNumber& b) { return b < a; }
  friend bool operator<=(const HahnNumber& a, const HahnNumber& b) { return !(b < a); }
  friend bool operator>=(const HahnNumber& a, const HahnNumber& b) { return !(a < b); }

  // Minimal r-exponent of the expansion; infinity for 0. In canonical form the
  // denominator has valuation 0, so this is the numerator's leading exponent.
  Valuation valuation() const {
    if (is_zero()) return Valuation::infinity();
    return Valuation(num_.leading().exponent);
  }

  // Leading (coefficient, exponent) of the expansion: the minimal-exponent
  // term of the numerator once the denominator is pinned to leading 1 * r^0.
  std::pair<Rational, Rational> leading() const {
    if (is_zero()) throw DomainError("leading of zero");
    return {num_.leading().coeff, num_.leading().exponent};
  }

  friend std::ostream& operator<<(std::ostream& os, const HahnNumber& x) {
    return os << to_text(x);
  }

  static std::string to_text(const HahnNumber& x) {
    if (x.den_.is_one()) return poly_to_text(x.num_);
    return "(" + poly_to_text(x.num_) + ")/(" + poly_to_text(x.den_) + ")";
  }

  static std::string poly_to_text(const HahnPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
      Rational c = t.coeff;
      if (first) {
        if (c < 0) {
          out += "-";
          c = -c;
        }
      } else {
        out += (c < 0) ? " - " : " + ";
        if (c < 0) c = -c;
      }
      first = false;
      if (t.exponent == 0) {
        out += c.get_str();
      } else {
        if (c != 1) out += c.get_str() + "*";
        out += (t.exponent == 1) ? "r" : "r^(" + t.exponent.get_str() + ")";
      }
    }
    return out;
  }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = HahnPolynomial::one();
      return;
    }
    const HahnTerm lead = den_.leading();
    if (!(lead.coeff == 1 && lead.exponent == 0)) {
      Rational inv_c = Rational(1) / lead.coeff;
      Rational neg_e = -lead.exponent;
      num_ = num_.scaled(inv_c, neg_e);
      den_ = den_.scaled(inv_c, neg_e);
    }
    if (den_.term_count() > 1) {
      if (auto q = divide_exact(num_, den_)) {
        num_ = std::move(*q);
        den_ = HahnPolynomial::one();
      }
    }
  }

  HahnPolynomial num_;
  HahnPolynomial den_;
};

inline HahnNumber abs(const HahnNumber& x) { return x.sign() < 0 ? -x : x; }

// ---------------------------------------------------------------------------
// Text grammar (ASCII), whitespace insignificant:
//   number   := ratio | poly
//   ratio    := '(' poly ')' '/' '(' poly ')'
//   poly     := term (('+'|'-') term)*
//   term     := rational ('*' 'r' ('^' '(' rational ')')?)?
//             | 'r' ('^' '(' rational ')')?
//   rational := integer ('/' positive-integer)?
// A leading sign on the first term is accepted. 'r' denotes rho.
// ---------------------------------------------------------------------------

namespace detail {

class HahnParser {
 public:
  explicit HahnParser(std::string_view text) : s_(text) {}

  HahnNumber parse_number() {
    skip_ws();
    HahnNumber out = [&] {
      if (peek() == '(') {
        expect('(');
        HahnPolynomial num = parse_poly();
        expect(')');
        expect('/');
        expect('(');
        HahnPolynomial den = parse_poly();
        expect(')');
        return HahnNumber(std::move(num), std::move(den));
      }
      return HahnNumber(parse_poly());
    }();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return out;
  }

 private:
  HahnPolynomial parse_poly() {
    std::vector<HahnTerm> terms;
    skip_ws();
    int sgn = 1;
    if (peek() == '+' || peek() == '-') {
      if (get() == '-') sgn = -1;
    }
    terms.push_back(parse_term(sgn));
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      terms.push_back(parse_term(c == '-' ? -1 : 1));
    }
    return HahnPolynomial::from_terms(std::move(terms));
  }

  HahnTerm parse_term(int sgn) {
    skip_ws();
    if (peek() == 'r') {
      get();
      return {Rational(sgn), parse_exponent()};
    }
    Rational c = sgn * parse_rational_token();
    skip_ws();
    if (peek() == '*') {
      get();
      skip_ws();
      if (get() != 'r') fail("expected 'r' after '*'");
      return {std::move(c), parse_exponent()};
    }
    return {std::move(c), Rational(0)};
  }

  Rational parse_exponent() {
    skip_ws();
    if (peek() != '^') return Rational(1);
    get();
    skip_ws();
    expect('(');
    Rational e = parse_signed_rational();
    skip_ws();
    expect(')');
    return e;
  }

  Rational parse_signed_rational() {
    skip_ws();
    int sgn = 1;
    if (peek() == '+' || peek() == '-') {
      if (get() == '-') sgn = -1;
    }
    return sgn * parse_rational_token();
  }

  Rational parse_rational_token() {
    skip_ws();
    int sgn = 1;
    if (peek() == '-') {
      get();
      sgn = -1;
    }
    std::string digits = read_digits();
    skip_ws();
    if (peek() == '/') {
      std::size_t mark = pos_;
      get();
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string den = read_digits();
        mpz_class d(den);
        if (d == 0) fail("zero denominator in rational");
        Rational out(sgn * mpz_class(digits), d);
        out.canonicalize();
        return out;
      }
      pos_ = mark;  // the '/' belongs to an enclosing ratio
    }
    return Rational(sgn * mpz_class(digits));
  }

  std::string read_digits() {
    skip_ws();
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      out.push_back(s_[pos_++]);
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (get() != c) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& why) const {
    std::ostringstream os;
    os << "parse error at offset " << pos_ << ": " << why;
    throw ParseError(os.str());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline HahnNumber parse_hahn(std::string_view text) {
  return detail::HahnParser(text).parse_number();
}

inline std::string to_text(const HahnNumber& x) { return HahnNumber::to_text(x); }

}  // namespace conekit
