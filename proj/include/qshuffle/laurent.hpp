#pragma once

// Exact arithmetic in Z[q^{\pm 1}] and its fraction field, plus the
// quantum-integer combinatorics ([n], [n]!, [2n]!!) used everywhere else.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsh {

using Int = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial over Z: exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<int, Int>;

  LaurentPoly() = default;
  explicit LaurentPoly(Int c) {
    if (c != 0) terms_[0] = std::move(c);
  }
  LaurentPoly(int exp, Int c) {
    if (c != 0) terms_[exp] = std::move(c);
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(Int(1)); }
  /// q^k
  static LaurentPoly q_power(int k) { return LaurentPoly(k, Int(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

  /// Nonzero monomial c*q^k?
  bool is_monomial() const { return terms_.size() == 1; }

  int min_exp() const { ensure_nonzero(); return terms_.begin()->first; }
  int max_exp() const { ensure_nonzero(); return terms_.rbegin()->first; }

  Int coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(int exp, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly& scale(const Int& c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  /// Multiply by c*q^k without building a temporary.
  LaurentPoly& shift_scale(int k, const Int& c) {
    if (c == 0) { terms_.clear(); return *this; }
    Terms shifted;
    for (auto& [e, v] : terms_) shifted.emplace(e + k, v * c);
    terms_ = std::move(shifted);
    return *this;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// bar involution q -> q^{-1}
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }
  bool is_bar_invariant() const { return *this == bar(); }

  /// Evaluation at q = 1 (total dimension counts).
  Int eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// Integer content (gcd of coefficients), 0 for the zero polynomial.
  Int content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, c);
    return g;
  }

  /// Leading coefficient at the highest exponent.
  Int lead_coeff() const { ensure_nonzero(); return terms_.rbegin()->second; }
  /// Coefficient at the lowest exponent.
  Int trail_coeff() const { ensure_nonzero(); return terms_.begin()->second; }

  /// In q*Z[q]: all exponents >= 1.
  bool in_q_pos() const { return terms_.empty() || terms_.begin()->first >= 1; }
  /// In Z[q]: all exponents >= 0.
  bool in_poly_q() const { return terms_.empty() || terms_.begin()->first >= 0; }
  /// All coefficients nonnegative.
  bool nonneg_coeffs() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  /// Ascending-exponent human form, e.g. "q^-2+1+3q".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Int a = c;
      if (first) {
        if (a < 0) { s += "-"; a = -a; }
      } else {
        s += (a < 0) ? "-" : "+";
        if (a < 0) a = -a;
      }
      first = false;
      std::string coeff = a.str();
      if (e == 0) {
        s += coeff;
      } else {
        if (coeff != "1") s += coeff;
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void ensure_nonzero() const {
    if (terms_.empty()) throw std::logic_error("LaurentPoly: zero polynomial has no extremal term");
  }
  Terms terms_;
};

/// Thrown when exact_div is asked for a non-exact quotient.
struct InexactDivision : std::runtime_error {
  LaurentPoly remainder;
  explicit InexactDivision(LaurentPoly rem)
      : std::runtime_error("inexact division in Z[q^{+-1}], remainder " + rem.str()),
        remainder(std::move(rem)) {}
};

namespace detail {

// Division from the top exponent down.  Stops as soon as the leading integer
// coefficient fails to divide (the quotient then does not exist in Z[q^{+-1}])
// or once the remainder's top drops below what the divisor can still reach.
inline std::pair<LaurentPoly, LaurentPoly> divmod_impl(const LaurentPoly& p, const LaurentPoly& d, bool* exact) {
  if (d.is_zero()) throw std::invalid_argument("division by zero LaurentPoly");
  LaurentPoly rem = p;
  LaurentPoly quot;
  const int dlead = d.max_exp();
  const int dspan = d.max_exp() - d.min_exp();
  const Int dlc = d.lead_coeff();
  while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= dspan) {
    const Int rlc = rem.lead_coeff();
    if (rlc % dlc != 0) { *exact = false; return {quot, rem}; }
    const int e = rem.max_exp() - dlead;
    const Int c = rlc / dlc;
    quot.add_term(e, c);
    LaurentPoly sub = d;
    sub.shift_scale(e, c);
    rem -= sub;
  }
  *exact = rem.is_zero();
  return {quot, rem};
}

}  // namespace detail

/// Quotient when division is exact in Z[q^{+-1}]; throws InexactDivision otherwise.
inline LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  bool exact = false;
  auto [q, r] = detail::divmod_impl(p, d, &exact);
  if (!exact) throw InexactDivision(std::move(r));
  return q;
}

inline std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  bool exact = false;
  auto [q, r] = detail::divmod_impl(p, d, &exact);
  if (!exact) return std::nullopt;
  return q;
}

/// gcd in Z[q^{+-1}], normalized primitive with positive leading coefficient.
/// Monomial factors q^k are units and are quotiented away.
inline LaurentPoly laurent_gcd(LaurentPoly a, LaurentPoly b) {
  auto normalize = [](LaurentPoly& p) {
    if (p.is_zero()) return;
    Int cont = p.content();
    if (p.lead_coeff() < 0) cont = -cont;
    LaurentPoly r;
    const int m = p.min_exp();
    for (const auto& [e, c] : p.terms()) r.add_term(e - m, c / cont);
    p = r;
  };
  normalize(a);
  normalize(b);
  while (!b.is_zero()) {
    // pseudo-remainder keeps us inside Z[q]
    LaurentPoly r = a;
    const int db = b.max_exp();
    while (!r.is_zero() && r.max_exp() >= db) {
      const int e = r.max_exp() - db;
      const Int rl = r.lead_coeff(), bl = b.lead_coeff();
      const Int g = boost::multiprecision::gcd(rl, bl);
      r.scale(bl / g);
      LaurentPoly sub = b;
      sub.shift_scale(e, rl / g);
      r -= sub;
    }
    a = b;
    b = r;
    normalize(b);
  }
  if (a.is_zero()) return a;
  return a;
}

/// Element of Q(q) as a normalized fraction of Laurent polynomials:
/// gcd cancelled, denominator primitive with positive leading coefficient.
class RationalQ {
 public:
  RationalQ() : num_(), den_(LaurentPoly::one()) {}
  RationalQ(LaurentPoly n) : num_(std::move(n)), den_(LaurentPoly::one()) {}
  RationalQ(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  static RationalQ one() { return RationalQ(LaurentPoly::one()); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// true when the denominator is a unit q^k, i.e. the value lies in Z[q^{+-1}].
  bool is_laurent() const { return den_.is_monomial() && (den_.lead_coeff() == 1 || den_.lead_coeff() == -1); }
  LaurentPoly as_laurent() const {
    auto q = try_exact_div(num_, den_);
    if (!q) throw InexactDivision(num_);
    return *q;
  }

  friend RationalQ operator+(const RationalQ& a, const RationalQ& b) {
    return RationalQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalQ operator-(const RationalQ& a, const RationalQ& b) {
    return RationalQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalQ operator*(const RationalQ& a, const RationalQ& b) {
    return RationalQ(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalQ operator/(const RationalQ& a, const RationalQ& b) {
    if (b.is_zero()) throw std::invalid_argument("RationalQ division by zero");
    return RationalQ(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalQ& operator+=(const RationalQ& o) { return *this = *this + o; }
  RationalQ& operator-=(const RationalQ& o) { return *this = *this - o; }
  RationalQ& operator*=(const RationalQ& o) { return *this = *this * o; }
  RationalQ& operator/=(const RationalQ& o) { return *this = *this / o; }
  RationalQ operator-() const { return RationalQ(-num_, den_); }

  /// representation comparison is semantic equality thanks to the canonical form
  friend bool operator==(const RationalQ& a, const RationalQ& b) = default;

  RationalQ bar() const { return RationalQ(num_.bar(), den_.bar()); }

  std::string str() const {
    if (is_laurent()) return as_laurent().str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::invalid_argument("RationalQ: zero denominator");
    if (num_.is_zero()) { den_ = LaurentPoly::one(); return; }
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    // the denominator's unit part (q-shift, sign, common integer content) moves out
    const int sh = den_.min_exp();
    if (sh != 0) {
      num_.shift_scale(-sh, Int(1));
      den_.shift_scale(-sh, Int(1));
    }
    Int ig = boost::multiprecision::gcd(num_.content(), den_.content());
    if (den_.lead_coeff() < 0) ig = -ig;
    if (ig != 1) {
      LaurentPoly dn, dd;
      for (const auto& [e, c] : num_.terms()) dn.add_term(e, c / ig);
      for (const auto& [e, c] : den_.terms()) dd.add_term(e, c / ig);
      num_ = std::move(dn);
      den_ = std::move(dd);
    }
  }

  LaurentPoly num_, den_;
};

/// [n] = (q^n - q^{-n})/(q - q^{-1}) = q^{n-1} + q^{n-3} + ... + q^{1-n}.
inline LaurentPoly qint(int n) {
  LaurentPoly r;
  if (n == 0) return r;
  const int a = n > 0 ? n : -n;
  for (int e = -(a - 1); e <= a - 1; e += 2) r.add_term(e, Int(n > 0 ? 1 : -1));
  return r;
}

/// [n]! = [n][n-1]...[1]; [0]! = 1.
inline LaurentPoly qfact(int n) {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  LaurentPoly r = LaurentPoly::one();
  for (int k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

/// [2n]!! = [2n][2n-2]...[2]; argument is 2n.
inline LaurentPoly qdblfact(int two_n) {
  if (two_n < 0 || two_n % 2 != 0) throw std::invalid_argument("qdblfact: argument must be even and nonnegative");
  LaurentPoly r = LaurentPoly::one();
  for (int k = 2; k <= two_n; k += 2) r *= qint(k);
  return r;
}

/// Gaussian binomial [m choose k].
inline LaurentPoly qbinom(int m, int k) {
  if (k < 0 || k > m) return LaurentPoly::zero();
  return exact_div(qfact(m), qfact(k) * qfact(m - k));
}

inline LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

}  // namespace qsh
