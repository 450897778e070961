#include <qshuffle/laurent.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qsh;

namespace {

LaurentPoly parse_terms(std::initializer_list<std::pair<int, long>> ts) {
  LaurentPoly p;
  for (const auto& [e, c] : ts) p.add_term(e, Int(c));
  return p;
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  const int nterms = static_cast<int>(rng() % 5);
  for (int t = 0; t < nterms; ++t)
    p.add_term(static_cast<int>(rng() % 9) - 4, Int(static_cast<long>(rng() % 11) - 5));
  return p;
}

}  // namespace

TEST_CASE("bar negates exponents and is an involution") {
  CHECK(parse_terms({{1, 1}, {0, 1}}).bar() == parse_terms({{-1, 1}, {0, 1}}));
  CHECK(LaurentPoly::zero().bar() == LaurentPoly::zero());
  CHECK(parse_terms({{2, 1}, {-1, -3}}).bar() == parse_terms({{-2, 1}, {1, -3}}));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
  }
}

TEST_CASE("quantum integers and factorials") {
  CHECK(qint(2) == parse_terms({{1, 1}, {-1, 1}}));
  CHECK(qfact(2) == parse_terms({{1, 1}, {-1, 1}}));
  CHECK(qfact(0) == LaurentPoly::one());
  // [4][2] expanded by polynomial multiplication
  CHECK(qdblfact(4) == qint(4) * qint(2));
  CHECK(qdblfact(4) == parse_terms({{4, 1}, {2, 2}, {0, 2}, {-2, 2}, {-4, 1}}));
  CHECK_THROWS_AS(qfact(-1), std::invalid_argument);
  for (int n = 0; n <= 6; ++n) CHECK(qint(n).is_bar_invariant());
  CHECK(qbinom(4, 2) == parse_terms({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
}

TEST_CASE("exact division") {
  // (1+q^-2) / (q+q^-1) = q^-1
  CHECK(exact_div(parse_terms({{0, 1}, {-2, 1}}), parse_terms({{1, 1}, {-1, 1}})) == LaurentPoly::q_power(-1));
  const LaurentPoly p = parse_terms({{3, 2}, {0, -1}});
  CHECK(exact_div(p, LaurentPoly::one()) == p);
  try {
    exact_div(parse_terms({{1, 1}, {-1, -1}}), parse_terms({{1, 1}, {-1, 1}}));
    FAIL("expected inexact");
  } catch (const InexactDivision& e) {
    CHECK(!e.remainder.is_zero());
  }

  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const LaurentPoly a = random_poly(rng);
    LaurentPoly b = random_poly(rng);
    if (b.is_zero()) b = LaurentPoly::one();
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("RationalQ canonical form") {
  const RationalQ half(qint(2), qint(2) * qint(2));
  CHECK(half == RationalQ(LaurentPoly::one(), qint(2)));
  CHECK(!half.is_laurent());
  const RationalQ unit(qint(3) * LaurentPoly::q_power(2), LaurentPoly::q_power(2));
  CHECK(unit.is_laurent());
  CHECK(unit.as_laurent() == qint(3));
  // round trip through arithmetic
  const RationalQ x(qint(2), qint(3));
  CHECK(x + x == RationalQ(qint(2) * LaurentPoly(Int(2)), qint(3)));
  CHECK((x / x) == RationalQ::one());
  CHECK(x - x == RationalQ{});
  CHECK(x.bar().bar() == x);
}

TEST_CASE("Laurent string form") {
  CHECK(parse_terms({{-2, 1}, {0, 1}, {1, 3}}).str() == "q^-2+1+3q");
  CHECK(LaurentPoly::zero().str() == "0");
  CHECK(parse_terms({{0, 1}, {2, -1}}).str() == "1-q^2");
}
