#pragma once

// PBW, canonical and dual bases of the lambda = 0 module in shuffle
// coordinates, the bilinear pairing, the bar involution, and the transition
// matrices between the families.
//
// The PBW vectors are built as theta-l / theta-kappa and then corrected by
// the unique diagonal unit +-q^a that makes the family bar-unitriangular
// (the mirror conventions shift the raw quotient off by such a unit; the
// correction is recorded in the diagnostics).

#include <qshuffle/linalg.hpp>
#include <qshuffle/thetamod.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsh {

/// Module element with rational-function word coordinates; the bridge type
/// for intermediate linear algebra.
struct RatElt {
  std::map<Word, RationalQ, AntilexLess> terms;

  static RatElt from(const ThetaElt& x) {
    RatElt r;
    for (const auto& [w, c] : x.terms()) r.terms.emplace(w, RationalQ(c));
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  RationalQ coeff(const Word& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? RationalQ{} : it->second;
  }
  void add_term(const Word& w, const RationalQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  RatElt& operator+=(const RatElt& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  RatElt& operator-=(const RatElt& o) {
    for (const auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
  }
  RatElt& scale(const RationalQ& c) {
    if (c.is_zero()) { terms.clear(); return *this; }
    for (auto& [w, v] : terms) v *= c;
    return *this;
  }
  const Word& max_word() const {
    if (terms.empty()) throw std::logic_error("max_word of zero element");
    return terms.rbegin()->first;
  }
  bool all_laurent() const {
    for (const auto& [w, c] : terms)
      if (!c.is_laurent()) return false;
    return true;
  }
  ThetaElt to_theta(FramingConfig fr = {}) const {
    ThetaElt out(std::move(fr));
    for (const auto& [w, c] : terms) out.add_term(w, c.as_laurent());
    return out;
  }
  friend bool operator==(const RatElt& a, const RatElt& b) { return a.terms == b.terms; }
};

/// Element of the lower module in F-monomial coordinates: sum c_mu F_mu v_0.
/// The bar involution is plain coefficient conjugation here.
struct LowerElt {
  std::map<Word, RationalQ, AntilexLess> fcoords;
};

/// pair(F_mu v_0, y) peels adjunctions outermost-first, which lands on the
/// coefficient of the reversed word in y.
template <typename EltT>
RationalQ pair_lower(const LowerElt& x, const EltT& y) {
  RationalQ s;
  for (const auto& [mu, c] : x.fcoords) {
    Word rev = mu;
    std::reverse(rev.letters.begin(), rev.letters.end());
    s += c * RationalQ(y.coeff(rev));
  }
  return s;
}

enum class BasisKind { monomial, lyndon, pbw, canonical, dual_pbw, dual_canonical };

inline std::string basis_kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::monomial: return "monomial";
    case BasisKind::lyndon: return "lyndon";
    case BasisKind::pbw: return "pbw";
    case BasisKind::canonical: return "canonical";
    case BasisKind::dual_pbw: return "dual-pbw";
    case BasisKind::dual_canonical: return "dual-canonical";
  }
  return "?";
}

struct BasisDiagnostics {
  /// scalar of Xi([nu]) on the single word nu, per theta-Lyndon index word
  std::vector<std::pair<Word, LaurentPoly>> bracket_scalars;
  /// diagonal unit applied to theta-l/theta-kappa per index word
  std::vector<std::pair<Word, LaurentPoly>> pbw_units;
  /// index words where theta-l/theta-kappa was not exact in Z[q^{+-1}]
  std::vector<Word> inexact_pbw;
};

/// Thrown by expand_in_monomials when the input is not in the module image.
struct OutsideModuleImage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All basis families of one self-dual weight at lambda = 0, computed
/// together and immutable afterwards.
class WeightSpace {
 public:
  explicit WeightSpace(DimVector beta) : beta_(std::move(beta)) { build(); }

  const DimVector& weight() const { return beta_; }
  const std::vector<Word>& good() const { return good_; }
  std::size_t dim() const { return good_.size(); }

  const RatElt& monomial(std::size_t i) const { return mono_[i]; }
  const RatElt& lyndon(std::size_t i) const { return lyn_[i]; }
  const RatElt& pbw(std::size_t i) const { return pbw_[i]; }
  const RatElt& canonical(std::size_t i) const { return can_[i]; }
  const RatElt& dual_pbw(std::size_t i) const { return dual_pbw_[i]; }
  const RatElt& dual_canonical(std::size_t i) const { return dual_can_[i]; }
  const std::vector<RatElt>& family(BasisKind k) const {
    switch (k) {
      case BasisKind::monomial: return mono_;
      case BasisKind::lyndon: return lyn_;
      case BasisKind::pbw: return pbw_;
      case BasisKind::canonical: return can_;
      case BasisKind::dual_pbw: return dual_pbw_;
      case BasisKind::dual_canonical: return dual_can_;
    }
    throw std::logic_error("family: bad kind");
  }

  const LaurentPoly& kappa_at(std::size_t i) const { return tkappa_[i]; }

  /// theta-m coordinates of the lyndon family (triangular, Lemma-trans-ml shape).
  const Mat<RationalQ>& trans_lyndon_monomial() const { return lm_; }
  /// bar matrix on the corrected PBW family (unitriangular over Z[q^{+-1}]).
  const Mat<RationalQ>& trans_bar_pbw() const { return bar_pbw_; }
  /// canonical in terms of PBW (unitriangular, off-diagonals in qZ[q]).
  const Mat<RationalQ>& trans_can_pbw() const { return can_pbw_; }
  /// Gram matrix of the canonical family under the pairing.
  const Mat<RationalQ>& gram_canonical() const { return gram_can_; }
  const Mat<RationalQ>& gram_monomial() const { return gram_mono_; }

  const BasisDiagnostics& diagnostics() const { return diag_; }

  /// theta-m coordinates of y; throws OutsideModuleImage on nonzero residual.
  std::vector<RationalQ> expand_coords(const RatElt& y) const {
    std::vector<RationalQ> b(dim());
    for (std::size_t r = 0; r < dim(); ++r) b[r] = y.coeff(good_[r]);
    std::vector<RationalQ> x(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      RationalQ s;
      for (std::size_t j = 0; j < dim(); ++j) s += ginv_[i][j] * b[j];
      x[i] = s;
    }
    // residual over every word of the weight space
    RatElt resid = y;
    for (std::size_t i = 0; i < dim(); ++i) {
      RatElt sub = mono_[i];
      sub.scale(x[i]);
      resid -= sub;
    }
    if (!resid.is_zero()) throw OutsideModuleImage("element is not in the module image at weight " + beta_.str());
    return x;
  }
  std::vector<RationalQ> expand_coords(const ThetaElt& y) const { return expand_coords(RatElt::from(y)); }

  /// F-monomial coordinates (the monomial basis realizes F_{sigma(nu)} v_0).
  LowerElt expand_in_monomials(const RatElt& y) const {
    const auto x = expand_coords(y);
    LowerElt out;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      Word rev = good_[i];
      std::reverse(rev.letters.begin(), rev.letters.end());
      out.fcoords.emplace(rev, x[i]);
    }
    return out;
  }
  LowerElt expand_in_monomials(const ThetaElt& y) const { return expand_in_monomials(RatElt::from(y)); }

  /// Bilinear pairing of two module elements.
  RationalQ pair(const RatElt& x, const RatElt& y) const {
    const auto cx = expand_coords(x);
    RationalQ s;
    for (std::size_t i = 0; i < dim(); ++i) s += cx[i] * y.coeff(good_[i]);
    return s;
  }

  /// Bar involution: conjugate the F-monomial coordinates and resynthesize.
  RatElt bar_lower(const RatElt& y) const {
    const auto x = expand_coords(y);
    RatElt out;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      RatElt sub = mono_[i];
      sub.scale(x[i].bar());
      out += sub;
    }
    return out;
  }
  ThetaElt bar_lower(const ThetaElt& y) const { return bar_lower(RatElt::from(y)).to_theta(); }

 private:
  void build() {
    if (!is_self_dual(beta_) || !beta_.nonnegative())
      throw std::invalid_argument("WeightSpace: weight must be self-dual and nonnegative");
    good_ = theta_good_words(beta_);
    const std::size_t g = good_.size();

    for (const Word& nu : good_) {
      mono_.push_back(RatElt::from(theta_monomial(nu)));
      lyn_.push_back(RatElt::from(theta_lyndon_elt(nu)));
      tkappa_.push_back(theta_kappa(nu));
      if (is_lyndon(nu)) {
        const ShuffleElt b = xi_eval(lyndon_bracket(nu));
        diag_.bracket_scalars.emplace_back(nu, b.coeff(nu));
      }
    }

    Mat<RationalQ> gm(g, std::vector<RationalQ>(g));
    for (std::size_t r = 0; r < g; ++r)
      for (std::size_t c = 0; c < g; ++c) gm[r][c] = mono_[c].coeff(good_[r]);
    ginv_ = rq_inverse(gm);

    // lyndon family in theta-m coordinates (rows), then raw PBW = lyn / kappa
    lm_.assign(g, {});
    Mat<RationalQ> p0(g, std::vector<RationalQ>(g));
    for (std::size_t i = 0; i < g; ++i) {
      lm_[i] = expand_coords(lyn_[i]);
      for (std::size_t j = 0; j < g; ++j) p0[i][j] = lm_[i][j] / RationalQ(tkappa_[i]);
    }

    // diagonal unit making the family bar-unitriangular
    Mat<RationalQ> d0 = rq_mul(bar_entrywise(p0), rq_inverse(p0));
    std::vector<LaurentPoly> unit(g);
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (!d0[i][j].is_zero())
          throw std::logic_error("bar matrix on raw PBW family is not triangular at weight " + beta_.str());
      const RationalQ& dd = d0[i][i];
      if (!dd.is_laurent()) throw std::logic_error("bar diagonal not a unit at " + good_[i].str());
      const LaurentPoly dl = dd.as_laurent();
      if (!dl.is_monomial() || dl.lead_coeff() != 1 || dl.max_exp() % 2 != 0)
        throw std::logic_error("bar diagonal is not an even positive q-power at " + good_[i].str());
      unit[i] = LaurentPoly::q_power(dl.max_exp() / 2);
    }

    pbw_.resize(g);
    Mat<RationalQ> pe(g, std::vector<RationalQ>(g));
    for (std::size_t i = 0; i < g; ++i) {
      RatElt cand = lyn_[i];
      cand.scale(RationalQ(unit[i]) / RationalQ(tkappa_[i]));
      // sign: the lowest-degree coefficient of the index word is positive
      const RationalQ lead = cand.coeff(good_[i]);
      bool flip = false;
      if (!lead.is_zero() && lead.is_laurent()) flip = lead.as_laurent().trail_coeff() < 0;
      if (flip) {
        cand.scale(RationalQ(LaurentPoly(Int(-1))));
        unit[i] = -unit[i];
      }
      diag_.pbw_units.emplace_back(good_[i], unit[i]);
      if (!cand.all_laurent()) diag_.inexact_pbw.push_back(good_[i]);
      pbw_[i] = std::move(cand);
      for (std::size_t j = 0; j < g; ++j) pe[i][j] = RationalQ(unit[i]) * p0[i][j];
    }

    bar_pbw_ = rq_mul(bar_entrywise(pe), rq_inverse(pe));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        if (j < i && !bar_pbw_[i][j].is_zero())
          throw std::logic_error("bar(PBW) not triangular at weight " + beta_.str());
        if (j == i && !(bar_pbw_[i][j] == RationalQ::one()))
          throw std::logic_error("bar(PBW) not unitriangular at weight " + beta_.str());
        if (!bar_pbw_[i][j].is_laurent())
          throw std::logic_error("bar(PBW) has a non-integral entry at weight " + beta_.str());
      }

    // canonical basis by the triangular bar fixed point, largest word first
    Mat<LaurentPoly> b(g, std::vector<LaurentPoly>(g));
    for (std::size_t ii = g; ii-- > 0;) {
      std::vector<LaurentPoly> row(g);
      row[ii] = LaurentPoly::one();
      // delta = bar(e_ii) - e_ii, supported strictly above ii
      std::vector<LaurentPoly> delta(g);
      for (std::size_t j = 0; j < g; ++j) delta[j] = bar_pbw_[ii][j].as_laurent();
      delta[ii] -= LaurentPoly::one();
      // write delta in the canonical rows already built and take q-positive
      // parts; ascending order makes delta[j] the exact coordinate at step j
      for (std::size_t j = ii + 1; j < g; ++j) {
        const LaurentPoly h = delta[j];
        if (h.is_zero()) continue;
        if (!(h.bar() == -h))
          throw std::logic_error("canonical solver: non-bar-odd obstruction at weight " + beta_.str());
        LaurentPoly gamma;
        for (const auto& [e, c] : h.terms())
          if (e > 0) gamma.add_term(e, c);
        for (std::size_t t = 0; t < g; ++t) {
          row[t] += gamma * b[j][t];
          delta[t] -= h * b[j][t];
        }
      }
      for (std::size_t t = 0; t < g; ++t)
        if (!delta[t].is_zero()) throw std::logic_error("canonical solver: residual obstruction at weight " + beta_.str());
      b[ii] = std::move(row);
    }
    can_pbw_.assign(g, std::vector<RationalQ>(g));
    can_.resize(g);
    for (std::size_t i = 0; i < g; ++i) {
      RatElt elt;
      for (std::size_t j = 0; j < g; ++j) {
        can_pbw_[i][j] = RationalQ(b[i][j]);
        if (j != i && !b[i][j].in_q_pos())
          throw std::logic_error("canonical off-diagonal not in qZ[q] at weight " + beta_.str());
        if (b[i][j].is_zero()) continue;
        RatElt sub = pbw_[j];
        sub.scale(RationalQ(b[i][j]));
        elt += sub;
      }
      can_[i] = std::move(elt);
    }

    // duals by inverse Gram matrices
    gram_mono_.assign(g, std::vector<RationalQ>(g));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) gram_mono_[i][j] = mono_[j].coeff(good_[i]);
    dual_pbw_ = dual_family(pbw_);
    dual_can_ = dual_family(can_);
    gram_can_.assign(g, std::vector<RationalQ>(g));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) gram_can_[i][j] = pair(can_[i], can_[j]);
  }

  std::vector<RatElt> dual_family(const std::vector<RatElt>& fam) const {
    const std::size_t g = fam.size();
    Mat<RationalQ> gram(g, std::vector<RationalQ>(g));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) gram[i][j] = pair(fam[i], fam[j]);
    const Mat<RationalQ> inv = rq_inverse(gram);
    std::vector<RatElt> out(g);
    for (std::size_t j = 0; j < g; ++j) {
      RatElt elt;
      for (std::size_t i = 0; i < g; ++i) {
        if (inv[i][j].is_zero()) continue;
        RatElt sub = fam[i];
        sub.scale(inv[i][j]);
        elt += sub;
      }
      out[j] = std::move(elt);
    }
    return out;
  }

  static Mat<RationalQ> bar_entrywise(const Mat<RationalQ>& m) {
    Mat<RationalQ> r = m;
    for (auto& row : r)
      for (auto& v : row) v = v.bar();
    return r;
  }

  DimVector beta_;
  std::vector<Word> good_;
  std::vector<RatElt> mono_, lyn_, pbw_, can_, dual_pbw_, dual_can_;
  std::vector<LaurentPoly> tkappa_;
  Mat<RationalQ> ginv_, lm_, bar_pbw_, can_pbw_, gram_can_, gram_mono_;
  BasisDiagnostics diag_;
};

/// The PBW vector of a single theta-good word, through its weight space.
/// Prefer WeightSpace directly when several vectors of one weight are needed.
inline RatElt pbw_elt(const Word& nu) {
  WeightSpace ws(nu.theta_weight());
  for (std::size_t i = 0; i < ws.dim(); ++i)
    if (ws.good()[i] == nu) return ws.pbw(i);
  throw std::invalid_argument("pbw_elt: not a theta-good word: " + nu.str());
}

/// Predicted trans-ml diagonal: product over all Lyndon factors f of
/// (-1)^{len(f)-1} q^{N(|f|)}.  (The q-exponent is +N in these conventions.)
inline LaurentPoly predicted_lm_diagonal(const Word& nu) {
  int sign = 0, expo = 0;
  for (const Word& f : lyndon_factorize(nu)) {
    sign += static_cast<int>(f.size()) - 1;
    expo += n_of(f.weight());
  }
  LaurentPoly r = LaurentPoly::q_power(expo);
  if (sign % 2 != 0) r = -r;
  return r;
}

/// Finite value of a rational function at q = 0; nullopt when the limit
/// diverges.  The canonical form keeps den(0) nonzero.
inline std::optional<RationalQ> eval_at_q0(const RationalQ& x) {
  if (x.is_zero()) return RationalQ{};
  if (x.num().min_exp() < 0) return std::nullopt;
  const Int n0 = x.num().coeff(0);
  const Int d0 = x.den().coeff(0);
  if (d0 == 0) return std::nullopt;
  return RationalQ(LaurentPoly(n0), LaurentPoly(d0));
}

}  // namespace qsh
