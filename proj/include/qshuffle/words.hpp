#pragma once

// Words over the odd alphabet, the two total orders, signed permutations,
// Lyndon and theta-Lyndon machinery, and shuffle coset representatives.

#include <qshuffle/rootdata.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsh {

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
  explicit Word(Letter l) : letters{l} {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  DimVector weight() const {
    DimVector w;
    for (Letter l : letters) w.add(l, 1);
    return w;
  }
  DimVector theta_weight() const { return symmetrize(weight()); }

  Word concat(const Word& o) const {
    Word r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
  }
  Word prefix(std::size_t n) const { return Word(std::vector<Letter>(letters.begin(), letters.begin() + n)); }
  Word suffix_from(std::size_t n) const { return Word(std::vector<Letter>(letters.begin() + n, letters.end())); }

  friend bool operator==(const Word&, const Word&) = default;

  /// Comma list of odd integers, e.g. "3,1,-1"; empty word is "".
  std::string str() const {
    std::string s;
    for (Letter l : letters) {
      if (!s.empty()) s += ",";
      s += std::to_string(l.k);
    }
    return s;
  }
};

inline Word parse_word(const std::string& s) {
  Word w;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    try {
      w.letters.push_back(Letter(std::stoi(s.substr(pos, comma - pos))));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("word: malformed letter at position " + std::to_string(pos));
    }
    pos = comma + 1;
  }
  return w;
}

enum class Order { antilex, lexprime };

/// Anti-lexicographic order: scan from the rightmost position; at the first
/// difference the smaller letter wins; a right-aligned proper tail is smaller
/// than the longer word.  This is the one convention satisfying the good-word,
/// necklace and xi-chain oracles simultaneously (see tests).
inline std::strong_ordering antilex_cmp(const Word& a, const Word& b) {
  auto ia = a.letters.rbegin(), ib = b.letters.rbegin();
  for (; ia != a.letters.rend() && ib != b.letters.rend(); ++ia, ++ib) {
    if (ia->k != ib->k) return ia->k <=> ib->k;
  }
  return a.size() <=> b.size();
}

/// The order written <=' in the costandard triangularity statements.  With
/// the product conventions pinned by the shuffle formulas, the costandard
/// leading-word property max'(nabla_nu) = nu holds for the right-to-left
/// comparator below (checked exhaustively in tests on every weight the suite
/// touches); a genuinely left-to-right scan fails it already on two-letter
/// words.  Kept separate from antilex_cmp as the second swappable comparator.
inline std::strong_ordering lexprime_cmp(const Word& a, const Word& b) {
  auto ia = a.letters.rbegin(), ib = b.letters.rbegin();
  for (; ia != a.letters.rend() && ib != b.letters.rend(); ++ia, ++ib) {
    if (ia->k != ib->k) return ia->k <=> ib->k;
  }
  return a.size() <=> b.size();
}

inline std::strong_ordering compare(Order o, const Word& a, const Word& b) {
  return o == Order::antilex ? antilex_cmp(a, b) : lexprime_cmp(a, b);
}

/// Default word order everywhere: anti-lexicographic.
inline bool operator<(const Word& a, const Word& b) { return antilex_cmp(a, b) < 0; }
inline bool operator>(const Word& a, const Word& b) { return antilex_cmp(a, b) > 0; }
inline bool operator<=(const Word& a, const Word& b) { return antilex_cmp(a, b) <= 0; }
inline bool operator>=(const Word& a, const Word& b) { return antilex_cmp(a, b) >= 0; }

struct AntilexLess {
  bool operator()(const Word& a, const Word& b) const { return antilex_cmp(a, b) < 0; }
};

/// theta w(nu) = theta(nu_n) ... theta(nu_1).
inline Word theta_reverse(const Word& w) {
  Word r;
  r.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(theta(*it));
  return r;
}

/// Signed permutation of {+-1..+-n}: images[i-1] = w(i), w(-l) = -w(l).
struct SignedPerm {
  std::vector<int> images;

  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> im) : images(std::move(im)) { validate(); }
  static SignedPerm identity(std::size_t n) {
    std::vector<int> im(n);
    for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<int>(i) + 1;
    return SignedPerm(std::move(im));
  }

  std::size_t n() const { return images.size(); }
  int operator()(int l) const {
    if (l > 0) return images[static_cast<std::size_t>(l) - 1];
    return -images[static_cast<std::size_t>(-l) - 1];
  }

  SignedPerm inverse() const {
    std::vector<int> inv(n());
    for (std::size_t i = 0; i < n(); ++i) {
      const int v = images[i];
      if (v > 0)
        inv[static_cast<std::size_t>(v) - 1] = static_cast<int>(i) + 1;
      else
        inv[static_cast<std::size_t>(-v) - 1] = -(static_cast<int>(i) + 1);
    }
    return SignedPerm(std::move(inv));
  }

  /// (a*b)(l) = a(b(l))
  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    std::vector<int> im(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) im[i] = a(b(static_cast<int>(i) + 1));
    return SignedPerm(std::move(im));
  }

  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

  /// Coxeter length in type B.
  int length() const {
    int len = 0;
    const int nn = static_cast<int>(n());
    for (int i = 1; i <= nn; ++i)
      for (int j = i; j <= nn; ++j) {
        if (i < j && (*this)(i) > (*this)(j)) ++len;
        if (-(*this)(i) > (*this)(j)) ++len;
      }
    return len;
  }

 private:
  void validate() const {
    std::vector<bool> seen(n(), false);
    for (int v : images) {
      const int a = v > 0 ? v : -v;
      if (a < 1 || a > static_cast<int>(n()) || seen[static_cast<std::size_t>(a) - 1])
        throw std::invalid_argument("SignedPerm: images are not a signed permutation");
      seen[static_cast<std::size_t>(a) - 1] = true;
    }
  }
};

/// (w . nu)_l = nu_{w^{-1}(l)} with nu_{-k} = theta(nu_k).
inline Word weyl_act(const SignedPerm& w, const Word& nu) {
  if (w.n() != nu.size()) throw std::invalid_argument("weyl_act: length mismatch");
  const SignedPerm wi = w.inverse();
  Word r;
  r.letters.reserve(nu.size());
  for (std::size_t l = 1; l <= nu.size(); ++l) {
    const int src = wi(static_cast<int>(l));
    r.letters.push_back(src > 0 ? nu[static_cast<std::size_t>(src) - 1] : theta(nu[static_cast<std::size_t>(-src) - 1]));
  }
  return r;
}

/// A reduced word for w, generators numbered 0 (sign flip) and 1..n-1.
inline std::vector<int> reduced_word(SignedPerm w) {
  std::vector<int> out;
  const int n = static_cast<int>(w.n());
  for (;;) {
    int descent = -1;
    if (w(1) < 0) descent = 0;
    for (int i = 1; descent < 0 && i < n; ++i)
      if (w(i) > w(i + 1)) descent = i;
    if (descent < 0) break;
    // w := w * s_descent
    std::vector<int> im = w.images;
    if (descent == 0)
      im[0] = -im[0];
    else
      std::swap(im[static_cast<std::size_t>(descent) - 1], im[static_cast<std::size_t>(descent)]);
    w = SignedPerm(std::move(im));
    out.push_back(descent);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Lyndon machinery.  A nonempty word is Lyndon when it is anti-lex smaller
// than all its proper left factors; equivalently its reversal is a classical
// Lyndon word for the standard letter order, which is what Duval's algorithm
// below consumes.
// ---------------------------------------------------------------------------

inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t n = 1; n < w.size(); ++n)
    if (antilex_cmp(w, w.prefix(n)) >= 0) return false;
  return true;
}

/// Lyndon factors listed left to right (weakly increasing; the rightmost is
/// the largest, matching the nu^<1> indexing).
inline std::vector<Word> lyndon_factorize(const Word& w) {
  std::vector<int> s(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) s[i] = w.letters[w.size() - 1 - i].k;  // reversed
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // [begin,end) in reversed string
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && s[k] <= s[j]) {
      if (s[k] < s[j])
        k = i;
      else
        ++k;
      ++j;
    }
    while (i <= k) {
      runs.emplace_back(i, i + (j - k));
      i += j - k;
    }
  }
  std::vector<Word> factors;
  factors.reserve(runs.size());
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    Word f;
    for (std::size_t p = it->second; p-- > it->first;) f.letters.push_back(Letter(s[p]));
    factors.push_back(std::move(f));
  }
  return factors;
}

/// Standard factorization of a Lyndon word of length >= 2: the split before
/// its longest proper Lyndon right factor.
inline std::pair<Word, Word> standard_factorize(const Word& w) {
  if (!is_lyndon(w) || w.size() < 2) throw std::invalid_argument("standard_factorize: need a Lyndon word of length >= 2");
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    Word right = w.suffix_from(cut);
    if (is_lyndon(right)) return {w.prefix(cut), right};
  }
  throw std::logic_error("standard_factorize: no Lyndon right factor");  // unreachable: last letter is Lyndon
}

// ---------------------------------------------------------------------------
// Good words.  A good Lyndon word is a descending-by-2 letter sequence, one
// per positive root; a word is good when all its Lyndon factors are.
// ---------------------------------------------------------------------------

inline Word good_lyndon_word(const RootA& r) {
  Word w;
  for (int k = r.hi.k; k >= r.lo.k; k -= 2) w.letters.push_back(Letter(k));
  return w;
}

inline bool is_good_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1].k != w[i].k - 2) return false;
  return true;
}

inline std::vector<Word> good_lyndon_words(const DimVector& beta) {
  std::vector<Word> out;
  for (const RootA& r : roots_inside(beta))
    if (r.weight() == beta) out.push_back(good_lyndon_word(r));
  return out;
}

inline bool is_good(const Word& w) {
  for (const Word& f : lyndon_factorize(w))
    if (!is_good_lyndon(f)) return false;
  return true;
}

namespace detail {

/// All multisets from `pieces` whose vectors sum to beta; each multiset is
/// reported as the concatenation of its words sorted anti-lex ascending.
inline void enum_factor_products(const DimVector& beta, const std::vector<std::pair<DimVector, Word>>& pieces,
                                 std::size_t from, std::vector<Word>& chosen, std::vector<Word>& out) {
  if (beta.is_zero()) {
    std::vector<Word> fs = chosen;
    std::sort(fs.begin(), fs.end(), AntilexLess{});
    Word cat;
    for (const Word& f : fs) cat = cat.concat(f);
    out.push_back(cat);
    return;
  }
  for (std::size_t t = from; t < pieces.size(); ++t) {
    if (!beta.dominates(pieces[t].first)) continue;
    chosen.push_back(pieces[t].second);
    enum_factor_products(beta - pieces[t].first, pieces, t, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace detail

/// All good words of weight beta (anti-lex ascending); empty when beta is not
/// a sum of positive roots.
inline std::vector<Word> good_words(const DimVector& beta) {
  if (!beta.nonnegative()) return {};
  std::vector<std::pair<DimVector, Word>> pieces;
  for (const RootA& r : roots_inside(beta)) pieces.emplace_back(r.weight(), good_lyndon_word(r));
  std::vector<Word> chosen, out;
  detail::enum_factor_products(beta, pieces, 0, chosen, out);
  std::sort(out.begin(), out.end(), AntilexLess{});
  return out;
}

// ---------------------------------------------------------------------------
// theta-Lyndon and theta-good words (explicit enumeration, lambda = 0).
// ---------------------------------------------------------------------------

inline bool is_theta_lyndon(const Word& w) {
  return is_good_lyndon(w) && is_lyndon(w) && antilex_cmp(w, theta_reverse(w)) >= 0;
}

inline bool is_symmetric_word(const Word& w) { return theta_reverse(w) == w; }

/// The unique symmetric theta-Lyndon word of weight beta_{-2k+1,2k-1}.
inline Word xi(int k) {
  if (k < 1) throw std::invalid_argument("xi: k >= 1");
  return good_lyndon_word(RootA{Letter(-2 * k + 1), Letter(2 * k - 1)});
}

/// theta-Lyndon word attached to a positive BC root.
inline Word theta_lyndon_word(const RootBC& r) {
  return good_lyndon_word(RootA{theta(r.rep.hi), theta(r.rep.lo)});
}

/// All theta-Lyndon words of self-dual theta-weight beta.
inline std::vector<Word> theta_lyndon_words(const DimVector& beta) {
  std::vector<Word> out;
  for (const RootBC& r : bc_roots_inside(beta))
    if (r.weight() == beta) out.push_back(theta_lyndon_word(r));
  std::sort(out.begin(), out.end(), AntilexLess{});
  return out;
}

/// theta-good words of theta-weight beta at lambda = 0: weakly decreasing
/// products of theta-Lyndon factors, one word per BC Kostant partition.
inline std::vector<Word> theta_good_words(const DimVector& beta) {
  if (!beta.nonnegative() || !is_self_dual(beta)) throw std::invalid_argument("theta_good_words: weight must be self-dual");
  std::vector<std::pair<DimVector, Word>> pieces;
  for (const RootBC& r : bc_roots_inside(beta)) pieces.emplace_back(r.weight(), theta_lyndon_word(r));
  std::vector<Word> chosen, out;
  detail::enum_factor_products(beta, pieces, 0, chosen, out);
  std::sort(out.begin(), out.end(), AntilexLess{});
  return out;
}

/// Partition the Lyndon factors of a theta-good word into the symmetric part
/// nu^theta and the non-symmetric part nu_theta (orders preserved).
inline std::pair<Word, Word> split_symmetric(const Word& w) {
  Word sym, nonsym;
  for (const Word& f : lyndon_factorize(w)) {
    if (is_symmetric_word(f))
      sym = sym.concat(f);
    else
      nonsym = nonsym.concat(f);
  }
  return {sym, nonsym};
}

// ---------------------------------------------------------------------------
// Shortest left coset representatives.
// ---------------------------------------------------------------------------

enum class CosetKind { sym, hyperoct };

/// Minimal-length left coset representatives for S_m x S_k inside S_{m+k}
/// (kind sym: unsigned shuffles) or W_m x S_k inside W_{m+k} (kind hyperoct:
/// each of the k tail values may additionally flip sign).  A representative
/// is increasing on 1..m with positive values there, and increasing on the
/// tail; enumeration is by tail value subset, then sign pattern.
inline std::vector<SignedPerm> coset_reps(CosetKind kind, int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("coset_reps: negative block size");
  const int n = m + k;
  std::vector<SignedPerm> out;
  std::vector<int> subset(static_cast<std::size_t>(k));
  // iterate k-subsets of {1..n} in lexicographic order
  for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
  auto emit = [&](const std::vector<int>& tailvals) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int v : tailvals) used[static_cast<std::size_t>(v > 0 ? v : -v)] = true;
    int pos = 0;
    for (int v = 1; v <= n; ++v)
      if (!used[static_cast<std::size_t>(v)]) im[static_cast<std::size_t>(pos++)] = v;
    std::vector<int> sorted = tailvals;
    std::sort(sorted.begin(), sorted.end());
    for (int t = 0; t < k; ++t) im[static_cast<std::size_t>(m + t)] = sorted[static_cast<std::size_t>(t)];
    out.emplace_back(std::move(im));
  };
  if (k == 0) {
    emit({});
    return out;
  }
  for (;;) {
    if (kind == CosetKind::sym) {
      emit(subset);
    } else {
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> vals(subset.begin(), subset.end());
        for (int t = 0; t < k; ++t)
          if (mask & (1u << t)) vals[static_cast<std::size_t>(t)] = -vals[static_cast<std::size_t>(t)];
        emit(vals);
      }
    }
    int t = k - 1;
    while (t >= 0 && subset[static_cast<std::size_t>(t)] == n - (k - 1 - t)) --t;
    if (t < 0) break;
    ++subset[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u) subset[static_cast<std::size_t>(u)] = subset[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

}  // namespace qsh
