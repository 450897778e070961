#include <qshuffle/thetamod.hpp>
#include <qshuffle/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qsh;

namespace {

Word W(std::initializer_list<int> ks) {
  Word w;
  for (int k : ks) w.letters.push_back(Letter(k));
  return w;
}

ThetaElt elt(std::initializer_list<std::pair<Word, LaurentPoly>> ts, FramingConfig fr = {}) {
  ThetaElt x(fr);
  for (const auto& [w, c] : ts) x.add_term(w, c);
  return x;
}

const LaurentPoly one = LaurentPoly::one();
const LaurentPoly q = LaurentPoly::q_power(1);
const LaurentPoly q2 = LaurentPoly::q_power(2);
const LaurentPoly qm1 = LaurentPoly::q_power(-1);
const LaurentPoly qm2 = LaurentPoly::q_power(-2);

Word random_word(std::mt19937_64& rng, int maxlen) {
  Word w;
  const int len = static_cast<int>(rng() % static_cast<unsigned long>(maxlen + 1));
  for (int t = 0; t < len; ++t) w.letters.push_back(Letter(2 * static_cast<int>(rng() % 4) - 3));
  return w;
}

FramingConfig fr_of(std::initializer_list<std::pair<int, int>> ls) {
  FramingConfig fr;
  for (const auto& [k, m] : ls) fr.lambda.add(Letter(k), m);
  return fr;
}

}  // namespace

TEST_CASE("vacuum star single letters") {
  const ThetaElt vac = ThetaElt::vacuum();
  CHECK(star(vac, ShuffleElt(W({1}))) == elt({{W({1}), one}, {W({-1}), one}}));
  CHECK(star(vac, ShuffleElt::unit()) == vac);

  const FramingConfig fr = fr_of({{1, 1}});
  CHECK(star(ThetaElt::vacuum(fr), ShuffleElt(W({1}))) == elt({{W({1}), one}, {W({-1}), q}}, fr));
}

TEST_CASE("star against the recursion oracle") {
  std::mt19937_64 rng(17);
  for (const FramingConfig& fr : {FramingConfig{}, fr_of({{1, 1}}), fr_of({{1, 1}, {3, 2}})}) {
    for (int t = 0; t < 60; ++t) {
      ThetaElt u(fr);
      u.add_term(random_word(rng, 3), one);
      const Letter i(2 * static_cast<int>(rng() % 4) - 3);
      CHECK(star(u, ShuffleElt(Word(i))) == star_letter_recursion(u, i));
    }
  }
}

TEST_CASE("module axiom") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 30; ++t) {
    const ThetaElt u = theta_xi_word(random_word(rng, 2));
    const ShuffleElt x(random_word(rng, 2)), y(random_word(rng, 2));
    CHECK(star(star(u, x), y) == star(u, shuffle_mul(x, y)));
  }
}

TEST_CASE("right deletion on the module") {
  const ThetaElt x = elt({{W({1, -1}), one}});
  CHECK(right_delete_mod(Letter(-1), x) == elt({{W({1}), one}}));
  CHECK(right_delete_mod(Letter(1), x).is_zero());
  CHECK(right_delete_mod(Letter(1), ThetaElt::vacuum()).is_zero());
}

TEST_CASE("monomial and Lyndon elements") {
  CHECK(theta_monomial(W({1})) == elt({{W({1}), one}, {W({-1}), one}}));
  CHECK(theta_monomial(Word{}) == ThetaElt::vacuum());

  const LaurentPoly u = one + qm2;
  CHECK(theta_monomial(W({1, -1})) ==
        elt({{W({1, -1}), u}, {W({-1, -1}), u}, {W({-1, 1}), q * u}, {W({1, 1}), q * u}}));
  CHECK(theta_lyndon_elt(W({1, -1})) == elt({{W({1, -1}), u * (q - qm1)}, {W({-1, -1}), u * (q - qm1)}}));
  // for theta-Lyndon nu the element theta-l_nu peaks at nu
  CHECK(theta_lyndon_elt(W({1, -1})).max_word() == W({1, -1}));
}

TEST_CASE("theta-goodness oracle by rank") {
  DimVector b1 = W({1}).theta_weight();
  CHECK(theta_good_bruteforce(b1) == std::vector<Word>{W({1})});
  CHECK(theta_good_bruteforce(DimVector{}) == std::vector<Word>{Word{}});

  DimVector b2 = W({1, 1}).theta_weight();
  const auto tg = theta_good_bruteforce(b2);
  CHECK(tg == std::vector<Word>{W({1, -1}), W({1, 1})});
  CHECK(tg == theta_good_words(b2));

  // nonzero framing enlarges the module: both single letters become
  // theta-good at lambda = alpha_1 (the rank-one Gram matrix is invertible)
  const auto tg_fr = theta_good_bruteforce(b1, fr_of({{1, 1}}));
  CHECK(tg_fr.size() == 2);
}

TEST_CASE("Enomoto-Kashiwara operators on small vectors") {
  const ThetaElt vac = ThetaElt::vacuum();
  CHECK(e_op(Letter(1), f_op(Letter(1), vac)) == vac);
  CHECK(t_op(Letter(1), vac) == vac);
  // the delta_{theta(i) j} T_i term
  CHECK(e_op(Letter(1), f_op(Letter(-1), vac)) == vac);

  // E_i F_i on a one-letter vector
  ThetaElt u = elt({{W({1}), one}});
  const ThetaElt lhs = e_op(Letter(1), f_op(Letter(1), u));
  ThetaElt rhs = f_op(Letter(1), e_op(Letter(1), u));
  rhs.scale(qm2);
  rhs += u;
  CHECK(lhs == rhs);
}

TEST_CASE("ek_apply dispatch") {
  const ThetaElt u = theta_monomial(W({1}));
  CHECK(ek_apply(EkGen::E, Letter(1), u) == e_op(Letter(1), u));
  CHECK(ek_apply(EkGen::F, Letter(-1), u) == f_op(Letter(-1), u));
  CHECK(ek_apply(EkGen::T, Letter(3), u) == t_op(Letter(3), u));
}

TEST_CASE("kappa normalizations") {
  CHECK(theta_kappa(W({1})) == one);
  CHECK(theta_kappa(W({1, -1})) == q + qm1);
  CHECK(theta_kappa(W({1, 1})) == q + qm1);
  CHECK(kappa(W({1, 1})) == q + qm1);
  CHECK(kappa(W({1, -1})) == one);
  CHECK(s_of(W({1, 1})) == 1);
  CHECK(theta_s_of(W({1, -1})) == 1);
  CHECK(theta_s_of(W({1, 1})) == 0);
  // two copies of the symmetric factor: [4]!! = [4][2]
  CHECK(theta_kappa(W({1, -1, 1, -1})) == qdblfact(4));
}

TEST_CASE("standard elements") {
  CHECK(standard_elt(Word{}) == ThetaElt::vacuum());
  CHECK(standard_elt(W({1})) == elt({{W({1}), one}, {W({-1}), one}}));

  const LaurentPoly u = one + qm2;
  CHECK(standard_elt(W({1, -1})) == elt({{W({1, -1}), q * u}, {W({-1, -1}), q * u}}));
  CHECK(standard_elt(W({1, 1})) ==
        elt({{W({1, 1}), q * u}, {W({-1, 1}), q * u}, {W({1, -1}), q2 * u}, {W({-1, -1}), q2 * u}}));
  for (const Word& nu : {W({1}), W({1, -1}), W({1, 1}), W({3, 1}), W({1, 3})}) {
    const ThetaElt d = standard_elt(nu);
    CHECK(d.max_word() == nu);
    CHECK(d.coeff(nu) == theta_kappa(nu));
  }
  CHECK_THROWS_AS(standard_elt(W({-1})), std::invalid_argument);
}

TEST_CASE("costandard elements") {
  CostandardDiagnostic diag;
  const ThetaElt n1 = costandard_elt(W({1}), &diag);
  CHECK(n1 == elt({{W({-1}), one}, {W({1}), one}}));
  CHECK(n1.max_word_prime() == W({1}));
  CHECK(diag.pinned_exponent == diag.grading_exponent);

  for (const Word& nu : {W({1}), W({1, -1}), W({1, 1}), W({3, 1}), W({1, 3}), W({1, 3, 1})}) {
    const ThetaElt nd = costandard_elt(nu);
    CHECK(nd.max_word_prime() == nu);
    CHECK(nd.coeff(nu) == theta_kappa(nu));
  }
}

TEST_CASE("intertwiner degree against stepwise evaluation") {
  std::mt19937_64 rng(23);
  const DimVector tl;  // lambda = 0
  auto step_degree = [&](const SignedPerm& w, const Word& mu) {
    int deg = 0;
    Word cur = mu;
    auto rw = reduced_word(w);
    for (auto it = rw.rbegin(); it != rw.rend(); ++it) {
      const int g = *it;
      if (g == 0) {
        deg += cur[0] == theta(cur[0]) ? -2 : static_cast<int>(tl[cur[0]]);
        cur.letters[0] = theta(cur.letters[0]);
      } else {
        const Letter a = cur[static_cast<std::size_t>(g) - 1], b = cur[static_cast<std::size_t>(g)];
        deg += a == b ? -2 : arrow_bar(a, b);
        std::swap(cur.letters[static_cast<std::size_t>(g) - 1], cur.letters[static_cast<std::size_t>(g)]);
      }
    }
    return deg;
  };
  // all of W_2 and a sample of W_3
  for (int n = 2; n <= 3; ++n) {
    for (int t = 0; t < 200; ++t) {
      std::vector<int> im;
      std::vector<int> pool;
      for (int i = 1; i <= n; ++i) pool.push_back(i);
      std::shuffle(pool.begin(), pool.end(), rng);
      for (int v : pool) im.push_back(rng() % 2 ? v : -v);
      const SignedPerm w(im);
      Word mu;
      for (int i = 0; i < n; ++i) mu.letters.push_back(Letter(2 * static_cast<int>(rng() % 4) - 3));
      CHECK(tau_degree(w, mu, tl) == step_degree(w, mu));
    }
  }
}

TEST_CASE("property suites") {
  // randomized module/shuffle axioms and a small EK window
  for (unsigned long seed : {1ul, 99ul}) {
    const Report r = verify_axioms(seed, DimVector{});
    for (const auto& e : r.entries) {
      INFO(e.which << " " << e.witness);
      CHECK(e.pass);
    }
  }
  const Report ek = verify_ek(3, 2, parse_dimvector("1:1,3:1"));
  for (const auto& e : ek.entries) {
    INFO(e.which << " " << e.witness);
    CHECK(e.pass);
  }
}

TEST_CASE("left factors of theta-good words are theta-good") {
  for (const DimVector& beta : {W({1, 1}).theta_weight(), W({1, 3}).theta_weight(), W({1, 1, 3}).theta_weight()}) {
    const auto tg = theta_good_words(beta);
    for (const Word& nu : tg) {
      CHECK(is_good(nu));
      for (std::size_t cut = 1; cut < nu.size(); ++cut) {
        const Word left = nu.prefix(cut);
        const auto tg_left = theta_good_words(left.theta_weight());
        CHECK(std::find(tg_left.begin(), tg_left.end(), left) != tg_left.end());
      }
    }
  }
}
