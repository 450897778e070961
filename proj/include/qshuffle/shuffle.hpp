#pragma once

// The quantum shuffle algebra F: products, deletion operators, the
// anti-automorphisms sigma / theta-sigma, free-algebra evaluation Xi,
// Lyndon brackets and the rank-based goodness oracle.

#include <qshuffle/laurent.hpp>
#include <qshuffle/words.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace qsh {

/// Homogeneous element of F: word -> coefficient, all words of one weight.
class ShuffleElt {
 public:
  using Terms = std::map<Word, LaurentPoly, AntilexLess>;

  ShuffleElt() = default;
  explicit ShuffleElt(const Word& w, LaurentPoly c = LaurentPoly::one()) : weight_(w.weight()) {
    if (!c.is_zero()) terms_[w] = std::move(c);
  }
  static ShuffleElt unit() { return ShuffleElt(Word{}); }

  const DimVector& weight() const { return weight_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly::zero() : it->second;
  }

  void add_term(const Word& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (terms_.empty() && weight_.is_zero()) weight_ = w.weight();
    if (w.weight() != weight_) throw std::invalid_argument("ShuffleElt: mixed weights");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ShuffleElt& operator+=(const ShuffleElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  ShuffleElt& operator-=(const ShuffleElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend ShuffleElt operator+(ShuffleElt a, const ShuffleElt& b) { return a += b; }
  friend ShuffleElt operator-(ShuffleElt a, const ShuffleElt& b) { return a -= b; }

  ShuffleElt& scale(const LaurentPoly& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
  }
  friend ShuffleElt operator*(const LaurentPoly& c, ShuffleElt x) { return x.scale(c); }

  friend bool operator==(const ShuffleElt& a, const ShuffleElt& b) { return a.terms_ == b.terms_; }

  const Word& max_word() const {
    if (terms_.empty()) throw std::logic_error("max_word of zero element");
    return terms_.rbegin()->first;
  }
  const Word& min_word() const {
    if (terms_.empty()) throw std::logic_error("min_word of zero element");
    return terms_.begin()->first;
  }
  /// Largest word for the <=' order.
  const Word& max_word_prime() const {
    if (terms_.empty()) throw std::logic_error("max_word_prime of zero element");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (lexprime_cmp(it->first, best->first) > 0) best = it;
    return best->first;
  }

 private:
  DimVector weight_;
  Terms terms_;
};

namespace detail {

/// d-exponent of one unsigned shuffle: sum of cartan pairings over the
/// crossed letter pairs of the source word.
inline int shuffle_exponent(const std::vector<Letter>& src, const SignedPerm& w) {
  int d = 0;
  const int n = static_cast<int>(src.size());
  for (int p = 1; p <= n; ++p)
    for (int r = p + 1; r <= n; ++r)
      if (w(p) > w(r)) d += cartan(src[static_cast<std::size_t>(p) - 1], src[static_cast<std::size_t>(r) - 1]);
  return d;
}

}  // namespace detail

/// nu o nu' = sum over unsigned shuffles of q^{-d} (w . nu nu'), extended
/// bilinearly.
inline ShuffleElt shuffle_mul(const ShuffleElt& x, const ShuffleElt& y) {
  if (x.is_zero() || y.is_zero()) return ShuffleElt{};
  ShuffleElt out;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      const Word cat = wx.concat(wy);
      const LaurentPoly c = cx * cy;
      for (const SignedPerm& w : coset_reps(CosetKind::sym, static_cast<int>(wx.size()), static_cast<int>(wy.size()))) {
        const int d = detail::shuffle_exponent(cat.letters, w);
        LaurentPoly term = c;
        term.shift_scale(-d, Int(1));
        out.add_term(weyl_act(w, cat), term);
      }
    }
  }
  return out;
}

/// Kills words not starting with i, strips the first letter otherwise.
inline ShuffleElt left_delete(Letter i, const ShuffleElt& x) {
  ShuffleElt out;
  for (const auto& [w, c] : x.terms())
    if (!w.empty() && w[0] == i) out.add_term(w.suffix_from(1), c);
  return out;
}

/// Kills words not ending with i, strips the last letter otherwise.
inline ShuffleElt right_delete(Letter i, const ShuffleElt& x) {
  ShuffleElt out;
  for (const auto& [w, c] : x.terms())
    if (!w.empty() && w[w.size() - 1] == i) out.add_term(w.prefix(w.size() - 1), c);
  return out;
}

/// Word reversal on every term.
inline ShuffleElt sigma(const ShuffleElt& x) {
  ShuffleElt out;
  for (const auto& [w, c] : x.terms()) {
    Word r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    out.add_term(r, c);
  }
  return out;
}

/// theta-reversal on every term.
inline ShuffleElt theta_sigma(const ShuffleElt& x) {
  ShuffleElt out;
  for (const auto& [w, c] : x.terms()) out.add_term(theta_reverse(w), c);
  return out;
}

/// Element of the free algebra on J (concatenation product).
class FreeElt {
 public:
  using Terms = std::map<Word, LaurentPoly, AntilexLess>;

  FreeElt() = default;
  explicit FreeElt(const Word& w, LaurentPoly c = LaurentPoly::one()) {
    if (!c.is_zero()) terms_[w] = std::move(c);
  }
  static FreeElt unit() { return FreeElt(Word{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FreeElt& operator+=(const FreeElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  FreeElt& operator-=(const FreeElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend FreeElt operator+(FreeElt a, const FreeElt& b) { return a += b; }
  friend FreeElt operator-(FreeElt a, const FreeElt& b) { return a -= b; }

  /// concatenation product
  friend FreeElt operator*(const FreeElt& a, const FreeElt& b) {
    FreeElt out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add_term(wa.concat(wb), ca * cb);
    return out;
  }

  FreeElt& scale(const LaurentPoly& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
  }

  const Word& min_word() const {
    if (terms_.empty()) throw std::logic_error("min_word of zero element");
    return terms_.begin()->first;
  }

  friend bool operator==(const FreeElt& a, const FreeElt& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// q-commutator [x,y] = xy - q^{|x|.|y|} yx in the free algebra.
inline FreeElt q_bracket(const FreeElt& x, const FreeElt& y, const DimVector& wx, const DimVector& wy) {
  FreeElt yx = y * x;
  yx.scale(LaurentPoly::q_power(dot(wx, wy)));
  return x * y - yx;
}

/// Lyndon bracketing: [i] = i; [nu] = [[nu_(2)], [nu_(1)]]_q on the standard
/// factorization; for non-Lyndon words, the product of the factor brackets.
inline FreeElt lyndon_bracket(const Word& nu) {
  if (nu.empty()) return FreeElt::unit();
  if (nu.size() == 1) return FreeElt(nu);
  if (is_lyndon(nu)) {
    auto [left, right] = standard_factorize(nu);
    return q_bracket(lyndon_bracket(right), lyndon_bracket(left), right.weight(), left.weight());
  }
  FreeElt out = FreeElt::unit();
  for (const Word& f : lyndon_factorize(nu)) out = out * lyndon_bracket(f);
  return out;
}

/// x o i for a single letter i: insert i at every position; the exponent is
/// the cartan sum against the crossed suffix, accumulated right to left.
inline ShuffleElt shuffle_mul_letter(const ShuffleElt& x, Letter i) {
  ShuffleElt out;
  for (const auto& [w, c] : x.terms()) {
    const std::size_t n = w.size();
    int d = 0;
    for (std::size_t cut = n + 1; cut-- > 0;) {
      Word target;
      target.letters.reserve(n + 1);
      target.letters.assign(w.letters.begin(), w.letters.begin() + cut);
      target.letters.push_back(i);
      target.letters.insert(target.letters.end(), w.letters.begin() + cut, w.letters.end());
      LaurentPoly term = c;
      term.shift_scale(-d, Int(1));
      out.add_term(target, term);
      if (cut > 0) d += cartan(w[cut - 1], i);
    }
  }
  return out;
}

/// Xi(nu) = nu_1 o nu_2 o ... o nu_k, extended linearly to the free algebra.
inline ShuffleElt xi_eval_word(const Word& nu) {
  ShuffleElt acc = ShuffleElt::unit();
  for (Letter l : nu.letters) acc = shuffle_mul_letter(acc, l);
  return acc;
}

inline ShuffleElt xi_eval(const FreeElt& u) {
  ShuffleElt out;
  for (const auto& [w, c] : u.terms()) {
    ShuffleElt x = xi_eval_word(w);
    x.scale(c);
    out += x;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fraction-free row echelon over Z[q^{+-1}] keyed by anti-lex-maximal word.
// Rows are reduced by cross-multiplication and content-stripped to keep
// growth down; the surviving pivot words of a row space are its good words.
// ---------------------------------------------------------------------------

template <typename EltT>
class WordEchelon {
 public:
  /// Insert a row; returns true when it enlarged the row space.
  bool insert(EltT row) {
    strip(row);
    while (!row.is_zero()) {
      const Word& lead = row.max_word();
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      const LaurentPoly a = it->second.coeff(lead);
      const LaurentPoly b = row.coeff(lead);
      row.scale(a);
      EltT sub = it->second;
      sub.scale(b);
      row -= sub;
      strip(row);
    }
    return false;
  }

  std::vector<Word> pivot_words() const {
    std::vector<Word> out;
    out.reserve(pivots_.size());
    for (const auto& [w, r] : pivots_) out.push_back(w);
    return out;
  }
  std::size_t rank() const { return pivots_.size(); }
  const std::map<Word, EltT, AntilexLess>& rows() const { return pivots_; }

 private:
  static void strip(EltT& row) {
    if (row.is_zero()) return;
    Int g = 0;
    int sh = 0;
    bool first = true;
    for (const auto& [w, c] : row.terms()) {
      g = boost::multiprecision::gcd(g, c.content());
      const int m = c.min_exp();
      sh = first ? m : std::min(sh, m);
      first = false;
    }
    if (row.coeff(row.max_word()).lead_coeff() < 0) g = -g;
    if (g == 1 && sh == 0) return;
    EltT out;
    for (const auto& [w, c] : row.terms()) {
      LaurentPoly nc;
      for (const auto& [e, v] : c.terms()) nc.add_term(e - sh, v / g);
      out.add_term(w, nc);
    }
    row = std::move(out);
  }

  std::map<Word, EltT, AntilexLess> pivots_;
};

/// Echelon bases of the weight spaces of the shuffle image, built by the
/// recursion U_beta = sum_i U_{beta - alpha_i} o i.  The recursion feeds each
/// echelon only rank-many rows per letter, which is what makes the window
/// sweeps affordable; results are memoized per weight.
class ShuffleRankOracle {
 public:
  const WordEchelon<ShuffleElt>& weight_space(const DimVector& beta) {
    auto it = memo_.find(beta);
    if (it != memo_.end()) return it->second;
    WordEchelon<ShuffleElt> ech;
    if (beta.is_zero()) {
      ech.insert(ShuffleElt::unit());
    } else {
      for (const auto& [i, m] : beta.mult()) {
        DimVector prev = beta;
        prev.add(i, -1);
        for (const auto& [lead, row] : weight_space(prev).rows()) ech.insert(shuffle_mul_letter(row, i));
      }
    }
    return memo_.emplace(beta, std::move(ech)).first->second;
  }

  /// The good words of weight beta: maximal words of an echelon basis.
  std::vector<Word> good_words(const DimVector& beta) {
    if (!beta.nonnegative()) return {};
    return weight_space(beta).pivot_words();
  }

 private:
  std::map<DimVector, WordEchelon<ShuffleElt>> memo_;
};

/// Good words of weight beta by rank computation: the maximal words of an
/// echelon basis of span{ Xi(mu) : mu a composition of beta }.
inline std::vector<Word> good_words_bruteforce(const DimVector& beta) {
  ShuffleRankOracle oracle;
  return oracle.good_words(beta);
}

}  // namespace qsh
