#pragma once

// Characters of standard, costandard and simple graded modules at lambda = 0,
// graded decomposition matrices, and dimension tables.  Simple characters are
// produced by triangular peeling of the standard characters; the structural
// conclusions of the classification theorem run as hard checks.

#include <qshuffle/bases.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsh {

struct CharTable {
  DimVector weight;
  std::vector<Word> words;  // theta-good, anti-lex ascending
  std::vector<ThetaElt> standards;
  std::vector<ThetaElt> costandards;
  std::vector<ThetaElt> simples;
  Mat<LaurentPoly> decomp;  // decomp[i][j] = [std(words[i]) : simple(words[j])]
  std::vector<CostandardDiagnostic> costd_diags;
};

inline ThetaElt std_char(const Word& nu) { return standard_elt(nu); }
inline ThetaElt costd_char(const Word& nu, CostandardDiagnostic* diag = nullptr) { return costandard_elt(nu, diag); }

namespace detail {

/// Peel r against the finished simples, processed largest first.  Once every
/// larger simple is removed, the coefficient of the word mu splits as
/// d_mu * theta-kappa_mu plus the (bar-invariant, since simples are
/// self-dual) contribution of the head itself; the bar-odd part therefore
/// determines d_mu uniquely under the qZ[q] normalization of graded
/// decomposition numbers (q^{-1}Z[q^{-1}] on the costandard side).
inline ThetaElt peel(ThetaElt r, const std::vector<Word>& words, const std::vector<ThetaElt>& simples,
                     const std::vector<std::size_t>& order, std::vector<LaurentPoly>* mults, bool positive_side) {
  for (std::size_t j : order) {
    const LaurentPoly c = r.coeff(words[j]);
    LaurentPoly m;
    const LaurentPoly odd = c - c.bar();
    if (!odd.is_zero()) {
      const auto hh = try_exact_div(odd, theta_kappa(words[j]));
      if (!hh) throw std::logic_error("peeling: multiplicity at " + words[j].str() + " is not integral");
      if (!(hh->bar() == -*hh)) throw std::logic_error("peeling: non-bar-odd obstruction at " + words[j].str());
      for (const auto& [e, cc] : hh->terms())
        if (positive_side ? e > 0 : e < 0) m.add_term(e, cc);
      if (!m.nonneg_coeffs()) throw std::logic_error("peeling: negative multiplicity at " + words[j].str());
      if (!m.is_zero()) {
        ThetaElt sub = simples[j];
        sub.scale(m);
        r -= sub;
      }
    }
    if (mults) (*mults)[j] = m;
  }
  return r;
}

}  // namespace detail

/// Standard-character peeling in anti-lex ascending order; larger finished
/// words are subtracted first so each multiplicity reads off cleanly.
inline CharTable simple_chars(const DimVector& beta) {
  CharTable t;
  t.weight = beta;
  t.words = theta_good_words(beta);
  const std::size_t g = t.words.size();
  t.decomp.assign(g, std::vector<LaurentPoly>(g));
  t.costd_diags.resize(g);

  for (std::size_t i = 0; i < g; ++i) {
    const Word& nu = t.words[i];
    ThetaElt r = standard_elt(nu);
    t.standards.push_back(r);
    std::vector<std::size_t> order;  // finished indices, larger words first
    for (std::size_t j = i; j-- > 0;) order.push_back(j);
    std::vector<LaurentPoly> mults(g);
    r = detail::peel(std::move(r), t.words, t.simples, order, &mults, /*positive_side=*/true);
    for (std::size_t j = 0; j < i; ++j) t.decomp[i][j] = mults[j];
    t.decomp[i][i] = LaurentPoly::one();
    if (!(r.max_word() == nu) || !(r.coeff(nu) == theta_kappa(nu)))
      throw std::logic_error("simple_chars: head of standard at " + nu.str() + " has wrong leading term");
    if (!r.bar_symmetric_coeffs())
      throw std::logic_error("simple_chars: simple character at " + nu.str() + " is not bar-symmetric");
    t.simples.push_back(std::move(r));
  }

  // costandard cross-check: peeling under the <=' order yields the same set
  std::vector<std::size_t> byprime(g);
  for (std::size_t i = 0; i < g; ++i) byprime[i] = i;
  std::sort(byprime.begin(), byprime.end(),
            [&](std::size_t a, std::size_t b) { return lexprime_cmp(t.words[a], t.words[b]) < 0; });
  std::vector<ThetaElt> prim_simples(g);
  t.costandards.resize(g);
  for (std::size_t pos = 0; pos < g; ++pos) {
    const std::size_t i = byprime[pos];
    const Word& nu = t.words[i];
    ThetaElt r = costandard_elt(nu, &t.costd_diags[i]);
    t.costandards[i] = r;
    std::vector<std::size_t> order;  // finished, lexprime-descending
    for (std::size_t p2 = pos; p2-- > 0;) order.push_back(byprime[p2]);
    r = detail::peel(std::move(r), t.words, prim_simples, order, nullptr, /*positive_side=*/false);
    if (!(r.max_word_prime() == nu))
      throw std::logic_error("simple_chars: costandard socle at " + nu.str() + " has wrong <=' -leading word");
    prim_simples[i] = std::move(r);
  }
  for (std::size_t i = 0; i < g; ++i)
    if (!(prim_simples[i] == t.simples[i]))
      throw std::logic_error("simple_chars: costandard peeling disagrees with standard peeling at " + t.words[i].str());

  return t;
}

/// Per-word comparison of the simple character against the dual canonical
/// basis vector.  Equality is a theorem for symmetric words and is otherwise
/// only measured; the two cases are tagged apart.
struct DualCanonicalAgreement {
  Word word;
  bool proved = false;  // symmetric word: equality is Lemma-level
  bool agrees = false;
};

inline std::vector<DualCanonicalAgreement> measure_dual_canonical(const CharTable& t, const WeightSpace& ws) {
  std::vector<DualCanonicalAgreement> out;
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    DualCanonicalAgreement a;
    a.word = t.words[i];
    a.proved = split_symmetric(t.words[i]).second.empty();
    a.agrees = RatElt::from(t.simples[i]) == ws.dual_canonical(i);
    if (a.proved && !a.agrees)
      throw std::logic_error("simple character disagrees with the dual canonical basis at the symmetric word " +
                             t.words[i].str());
    out.push_back(std::move(a));
  }
  return out;
}

struct DimReport {
  DimVector weight;
  Int simple_count = 0;
  Int tkpf_count = 0;
  std::vector<Word> words;
  std::vector<LaurentPoly> graded_dims;  // total graded dimension of each simple
  std::vector<Int> dims_at_one;
};

inline DimReport dim_table(const DimVector& beta) {
  DimReport rep;
  rep.weight = beta;
  rep.tkpf_count = tkpf(beta);
  const CharTable t = simple_chars(beta);
  rep.simple_count = Int(static_cast<long>(t.words.size()));
  if (rep.simple_count != rep.tkpf_count)
    throw std::logic_error("dim_table: simple count disagrees with the Kostant count at " + beta.str());
  rep.words = t.words;
  for (const ThetaElt& s : t.simples) {
    LaurentPoly total;
    for (const auto& [w, c] : s.terms()) total += c;
    rep.graded_dims.push_back(total);
    rep.dims_at_one.push_back(total.eval_at_one());
  }
  return rep;
}

}  // namespace qsh
