#include <qshuffle/shuffle.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace qsh;

namespace {

Word W(std::initializer_list<int> ks) {
  Word w;
  for (int k : ks) w.letters.push_back(Letter(k));
  return w;
}

ShuffleElt elt(std::initializer_list<std::pair<Word, LaurentPoly>> ts) {
  ShuffleElt x;
  for (const auto& [w, c] : ts) x.add_term(w, c);
  return x;
}

const LaurentPoly one = LaurentPoly::one();
const LaurentPoly q = LaurentPoly::q_power(1);
const LaurentPoly qm1 = LaurentPoly::q_power(-1);

Word random_word(std::mt19937_64& rng, int maxlen) {
  Word w;
  const int len = static_cast<int>(rng() % static_cast<unsigned long>(maxlen + 1));
  for (int t = 0; t < len; ++t) w.letters.push_back(Letter(2 * static_cast<int>(rng() % 4) - 3));
  return w;
}

}  // namespace

TEST_CASE("shuffle products of single letters") {
  const ShuffleElt a1(W({1}));
  CHECK(shuffle_mul(a1, a1) == elt({{W({1, 1}), one + LaurentPoly::q_power(-2)}}));
  CHECK(shuffle_mul(ShuffleElt(W({3})), a1) == elt({{W({3, 1}), one}, {W({1, 3}), q}}));
  CHECK(shuffle_mul(a1, ShuffleElt::unit()) == a1);
  CHECK(shuffle_mul(ShuffleElt::unit(), a1) == a1);
}

TEST_CASE("shuffle associativity on random words") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const ShuffleElt x(random_word(rng, 3)), y(random_word(rng, 2)), z(random_word(rng, 2));
    CHECK(shuffle_mul(shuffle_mul(x, y), z) == shuffle_mul(x, shuffle_mul(y, z)));
  }
}

TEST_CASE("deletion operators") {
  const ShuffleElt x(W({3, 1}));
  CHECK(right_delete(Letter(1), x) == ShuffleElt(W({3})));
  CHECK(left_delete(Letter(1), x).is_zero());
  CHECK(left_delete(Letter(3), x) == ShuffleElt(W({1})));
  CHECK(right_delete(Letter(1), ShuffleElt::unit()).is_zero());
}

TEST_CASE("twisted Leibniz rules for deletions") {
  // e'_i(x o y) = e'_i(x) o y + q^{-i.|x|} x o e'_i(y), and the right mirror
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const Word a = random_word(rng, 3), b = random_word(rng, 3);
    const ShuffleElt x(a), y(b);
    const Letter i(2 * static_cast<int>(rng() % 4) - 3);
    {
      ShuffleElt lhs = left_delete(i, shuffle_mul(x, y));
      ShuffleElt rhs = shuffle_mul(left_delete(i, x), y);
      ShuffleElt part = shuffle_mul(x, left_delete(i, y));
      part.scale(LaurentPoly::q_power(-dot(a.weight(), i)));
      rhs += part;
      CHECK(lhs == rhs);
    }
    {
      ShuffleElt lhs = right_delete(i, shuffle_mul(x, y));
      ShuffleElt rhs = shuffle_mul(x, right_delete(i, y));
      ShuffleElt part = shuffle_mul(right_delete(i, x), y);
      part.scale(LaurentPoly::q_power(-dot(b.weight(), i)));
      rhs += part;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("sigma and theta-sigma") {
  CHECK(sigma(ShuffleElt(W({3, 1}))) == ShuffleElt(W({1, 3})));
  CHECK(theta_sigma(ShuffleElt(W({3, 1}))) == ShuffleElt(W({-1, -3})));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const ShuffleElt x(random_word(rng, 3)), y(random_word(rng, 3));
    CHECK(sigma(shuffle_mul(x, y)) == shuffle_mul(sigma(y), sigma(x)));
    CHECK(theta_sigma(shuffle_mul(x, y)) == shuffle_mul(theta_sigma(y), theta_sigma(x)));
  }
}

TEST_CASE("free algebra evaluation") {
  CHECK(xi_eval_word(W({1, 3})) == elt({{W({1, 3}), one}, {W({3, 1}), q}}));
  CHECK(xi_eval(FreeElt::unit()) == ShuffleElt::unit());
  CHECK(xi_eval_word(W({1, 1})) == elt({{W({1, 1}), one + LaurentPoly::q_power(-2)}}));
  // homomorphism from concatenation to the shuffle product
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const Word a = random_word(rng, 2), b = random_word(rng, 2);
    CHECK(xi_eval(FreeElt(a) * FreeElt(b)) == shuffle_mul(xi_eval_word(a), xi_eval_word(b)));
  }
}

TEST_CASE("Lyndon brackets") {
  CHECK(lyndon_bracket(W({1})) == FreeElt(W({1})));
  {
    FreeElt expect(W({1, 3}));
    expect += FreeElt(W({3, 1}), -qm1);
    CHECK(lyndon_bracket(W({3, 1})) == expect);
  }
  CHECK(xi_eval(lyndon_bracket(W({3, 1}))) == elt({{W({3, 1}), q - qm1}}));

  // min(word support of [nu]) = nu, and on good Lyndon words the evaluation
  // is a single scalar multiple of nu
  const std::vector<int> alpha{-5, -3, -1, 1, 3, 5};
  std::vector<Word> lyn;
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= 4; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (int a : alpha) {
        Word e = w;
        e.letters.push_back(Letter(a));
        next.push_back(e);
        if (is_lyndon(e)) lyn.push_back(e);
      }
    layer = std::move(next);
  }
  for (const Word& nu : lyn) {
    const FreeElt b = lyndon_bracket(nu);
    CHECK(b.min_word() == nu);
    const ShuffleElt ev = xi_eval(b);
    if (!ev.is_zero()) CHECK(ev.min_word() == nu);
    if (is_good_lyndon(nu)) {
      REQUIRE(!ev.is_zero());
      CHECK(ev.terms().size() == 1);
      // observed scalar (q - q^-1)^{len-1}; the displayed [2]^{len-1} does not
      // match the pinned product conventions and is only surfaced in
      // diagnostics downstream
      LaurentPoly scal = LaurentPoly::one();
      for (std::size_t t = 1; t < nu.size(); ++t) scal *= (q - qm1);
      CHECK(ev.coeff(nu) == scal);
    }
  }
}

TEST_CASE("goodness oracle by rank") {
  DimVector b13 = W({1, 3}).weight();
  auto got = good_words_bruteforce(b13);
  CHECK(got == good_words(b13));

  CHECK(good_words_bruteforce(W({1}).weight()) == std::vector<Word>{W({1})});
  CHECK(good_words_bruteforce(W({1, 1}).weight()) == std::vector<Word>{W({1, 1})});

  // agreement with the explicit enumeration: heights up to 5 across a
  // window straddling the involution fixed point
  ShuffleRankOracle oracle;
  for (int cm1 = 0; cm1 <= 2; ++cm1)
    for (int c1 = 0; c1 <= 3; ++c1)
      for (int c3 = 0; c3 <= 3; ++c3)
        for (int c5 = 0; c5 <= 2; ++c5) {
          const int h = cm1 + c1 + c3 + c5;
          if (h == 0 || h > 5) continue;
          DimVector b;
          b.add(Letter(-1), cm1);
          b.add(Letter(1), c1);
          b.add(Letter(3), c3);
          b.add(Letter(5), c5);
          CHECK(oracle.good_words(b) == good_words(b));
        }
}
