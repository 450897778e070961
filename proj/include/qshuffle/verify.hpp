#pragma once

// Operator-identity and property suites on the shuffle side: the
// Enomoto-Kashiwara relations as identities on the module, the module axiom,
// the twisted derivation law, and the order/monotonicity properties.

#include <qshuffle/oklrsym.hpp>  // Report
#include <qshuffle/thetamod.hpp>

#include <random>
#include <string>
#include <vector>

namespace qsh {

inline std::vector<Word> words_in_window(int window, int maxlen) {
  std::vector<Letter> letters;
  for (int k = -window; k <= window; k += 2) letters.push_back(Letter(k));
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int l = 0; l < maxlen; ++l) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (Letter a : letters) {
        Word e = w;
        e.letters.push_back(a);
        next.push_back(e);
        out.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  return out;
}

/// E_i F_j = q^{-i.j} F_j E_i + delta_{ij} + delta_{theta(i) j} T_i, as an
/// identity of operators on basis words.
inline bool check_ef_relation(Letter i, Letter j, const Word& w, FramingConfig fr) {
  ThetaElt u(fr);
  u.add_term(w, LaurentPoly::one());
  ThetaElt lhs = e_op(i, f_op(j, u));
  ThetaElt rhs = f_op(j, e_op(i, u));
  rhs.scale(LaurentPoly::q_power(-cartan(i, j)));
  if (i == j) rhs += u;
  if (theta(i) == j) rhs += t_op(i, u);
  return lhs == rhs;
}

/// T_i E_j T_i^{-1} = q^{(i + theta i).j} E_j (and the F mirror).
inline bool check_t_conjugation(Letter i, Letter j, const Word& w, FramingConfig fr) {
  ThetaElt u(fr);
  u.add_term(w, LaurentPoly::one());
  const int c = cartan(i, j) + cartan(theta(i), j);
  {
    ThetaElt lhs = t_op(i, e_op(j, u));
    ThetaElt rhs = e_op(j, t_op(i, u));
    rhs.scale(LaurentPoly::q_power(c));
    if (!(lhs == rhs)) return false;
  }
  ThetaElt lhs = t_op(i, f_op(j, u));
  ThetaElt rhs = f_op(j, t_op(i, u));
  rhs.scale(LaurentPoly::q_power(-c));
  return lhs == rhs;
}

/// q-Serre for X in {E, F}: sum (-1)^k [m choose k] X_i^k X_j X_i^{m-k} = 0
/// with m = 1 - i.j.  The F-side holds on the whole word space (the star
/// action is an algebra action); the E-side is a module identity and must be
/// fed vectors from the theta-Xi image.
template <typename OpT>
bool check_q_serre(Letter i, Letter j, const ThetaElt& u, OpT&& op) {
  if (i == j) return true;
  const int m = 1 - cartan(i, j);
  ThetaElt acc(u.framing());
  for (int k = 0; k <= m; ++k) {
    ThetaElt t = u;
    for (int s = 0; s < m - k; ++s) t = op(i, t);
    t = op(j, t);
    for (int s = 0; s < k; ++s) t = op(i, t);
    LaurentPoly coeff = qbinom(m, k);
    if (k % 2 != 0) coeff = -coeff;
    t.scale(coeff);
    acc += t;
  }
  return acc.is_zero();
}

/// EK relations on all words of length <= maxlen over the letter window.
inline Report verify_ek(int window, int maxlen, const DimVector& lambda) {
  Report out;
  const FramingConfig fr{lambda};
  std::vector<Letter> letters;
  for (int k = -window; k <= window; k += 2) letters.push_back(Letter(k));
  const auto words = words_in_window(window, maxlen);

  bool ef = true, tc = true, serre_e = true, serre_f = true, tcomm = true;
  std::string wit_ef, wit_tc, wit_se, wit_sf;
  for (const Word& w : words) {
    ThetaElt bare(fr);
    bare.add_term(w, LaurentPoly::one());
    const ThetaElt image = theta_xi_word(w, fr);  // spanning vector of the module
    for (Letter i : letters)
      for (Letter j : letters) {
        if (!(t_op(i, t_op(j, bare)) == t_op(j, t_op(i, bare)))) tcomm = false;
        if (!(t_op(theta(i), bare) == t_op(i, bare))) tcomm = false;
        if (ef && !check_ef_relation(i, j, w, fr)) {
          ef = false;
          wit_ef = "i=" + std::to_string(i.k) + " j=" + std::to_string(j.k) + " word=" + w.str();
        }
        if (tc && !check_t_conjugation(i, j, w, fr)) {
          tc = false;
          wit_tc = "i=" + std::to_string(i.k) + " j=" + std::to_string(j.k) + " word=" + w.str();
        }
        if (serre_e && !check_q_serre(i, j, image, [](Letter a, const ThetaElt& u) { return e_op(a, u); })) {
          serre_e = false;
          wit_se = "i=" + std::to_string(i.k) + " j=" + std::to_string(j.k) + " word=" + w.str();
        }
        if (serre_f && !check_q_serre(i, j, bare, [](Letter a, const ThetaElt& u) { return f_op(a, u); })) {
          serre_f = false;
          wit_sf = "i=" + std::to_string(i.k) + " j=" + std::to_string(j.k) + " word=" + w.str();
        }
      }
  }
  out.add("ek", "E-F cross relation", "window " + std::to_string(window), ef, wit_ef);
  out.add("ek", "T family commutes, T_i = T_theta(i)", "window " + std::to_string(window), tcomm);
  out.add("ek", "T conjugation", "window " + std::to_string(window), tc, wit_tc);
  out.add("ek", "q-Serre for E", "window " + std::to_string(window), serre_e, wit_se);
  out.add("ek", "q-Serre for F", "window " + std::to_string(window), serre_f, wit_sf);
  return out;
}

/// Randomized property suite: module axiom, coset-sum vs recursion, the
/// twisted derivation law, shuffle associativity, sigma anti-multiplicativity
/// and the max-of-shuffle monotonicity.
inline Report verify_axioms(unsigned long seed, const DimVector& lambda, int samples = 40) {
  Report out;
  std::mt19937_64 rng(seed);
  const FramingConfig fr{lambda};
  auto rand_letter = [&]() { return Letter(2 * static_cast<int>(rng() % 4) - 3); };  // -3..3 odd
  auto rand_word = [&](int maxlen) {
    Word w;
    const int len = static_cast<int>(rng() % static_cast<unsigned long>(maxlen + 1));
    for (int t = 0; t < len; ++t) w.letters.push_back(rand_letter());
    return w;
  };

  bool assoc = true, module_axiom = true, recursion = true, qder2 = true, sigma_anti = true, mono = true;
  std::string wit;
  for (int t = 0; t < samples; ++t) {
    const Word a = rand_word(3), b = rand_word(2), c = rand_word(2);
    // shuffle associativity
    {
      const ShuffleElt x(a), y(b), z(c);
      if (!(shuffle_mul(shuffle_mul(x, y), z) == shuffle_mul(x, shuffle_mul(y, z)))) {
        assoc = false;
        wit = a.str() + " | " + b.str() + " | " + c.str();
      }
    }
    // sigma(x o y) = sigma(y) o sigma(x)
    {
      const ShuffleElt x(a), y(b);
      if (!(sigma(shuffle_mul(x, y)) == shuffle_mul(sigma(y), sigma(x)))) sigma_anti = false;
      if (!(theta_sigma(shuffle_mul(x, y)) == shuffle_mul(theta_sigma(y), theta_sigma(x)))) sigma_anti = false;
    }
    // module axiom (u * x) * y = u * (x o y)
    {
      ThetaElt u = theta_xi_word(rand_word(2), fr);
      const ShuffleElt x(b), y(c);
      if (!(star(star(u, x), y) == star(u, shuffle_mul(x, y)))) {
        module_axiom = false;
        wit = b.str() + " | " + c.str();
      }
    }
    // coset sum against the single-letter recursion
    {
      ThetaElt u(fr);
      u.add_term(a, LaurentPoly::one());
      const Letter i = rand_letter();
      if (!(star(u, ShuffleElt(Word(i))) == star_letter_recursion(u, i))) {
        recursion = false;
        wit = a.str() + " * " + std::to_string(i.k);
      }
    }
    // twisted derivation law for E_i
    {
      ThetaElt v = theta_xi_word(rand_word(2), fr);
      if (!v.is_zero()) {
        const ShuffleElt z(b);
        const Letter i = rand_letter();
        const ThetaElt lhs = e_op(i, star(v, z));
        ThetaElt rhs = star(e_op(i, v), z);
        rhs.scale(LaurentPoly::q_power(-dot(b.weight(), i)));
        rhs += star(v, right_delete(i, z));
        const ShuffleElt dz = left_delete(theta(i), z);
        if (!dz.is_zero()) {
          ThetaElt part = star(v, dz);
          part.scale(LaurentPoly::q_power(-dot(dz.weight(), i) + dot(v.mu(), i)));
          rhs += part;
        }
        if (!(lhs == rhs)) {
          qder2 = false;
          wit = "z=" + b.str() + ", i=" + std::to_string(i.k);
        }
      }
    }
  }
  // monotonicity of max under the star action on comparable pairs
  for (int t = 0; t < samples; ++t) {
    const Word mu = rand_word(2), nu = rand_word(2);
    Word mu2 = rand_word(2), nu2 = rand_word(2);
    if (mu2.size() != mu.size() || nu2.size() != nu.size()) continue;
    if (!(mu2 <= mu && nu2 <= nu && theta_reverse(nu2) <= theta_reverse(nu))) continue;
    ThetaElt um(fr), um2(fr);
    um.add_term(mu, LaurentPoly::one());
    um2.add_term(mu2, LaurentPoly::one());
    const ThetaElt p1 = star(um, ShuffleElt(nu));
    const ThetaElt p2 = star(um2, ShuffleElt(nu2));
    if (!p1.is_zero() && !p2.is_zero() && p2.max_word() > p1.max_word()) {
      mono = false;
      wit = mu.str() + "," + nu.str() + " vs " + mu2.str() + "," + nu2.str();
    }
  }

  out.add("axioms", "shuffle associativity", "", assoc, assoc ? "" : wit);
  out.add("axioms", "sigma anti-automorphisms", "", sigma_anti);
  out.add("axioms", "module axiom", "", module_axiom, module_axiom ? "" : wit);
  out.add("axioms", "coset sum vs recursion", "", recursion, recursion ? "" : wit);
  out.add("axioms", "twisted derivation law", "", qder2, qder2 ? "" : wit);
  out.add("axioms", "max-of-shuffle monotonicity", "", mono, mono ? "" : wit);
  return out;
}

}  // namespace qsh
