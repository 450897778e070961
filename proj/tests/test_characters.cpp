#include <qshuffle/characters.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace qsh;

namespace {

Word W(std::initializer_list<int> ks) {
  Word w;
  for (int k : ks) w.letters.push_back(Letter(k));
  return w;
}

ThetaElt elt(std::initializer_list<std::pair<Word, LaurentPoly>> ts) {
  ThetaElt x;
  for (const auto& [w, c] : ts) x.add_term(w, c);
  return x;
}

const LaurentPoly one = LaurentPoly::one();
const LaurentPoly q = LaurentPoly::q_power(1);
const LaurentPoly qm1 = LaurentPoly::q_power(-1);

DimVector theta_w(std::initializer_list<std::pair<int, int>> pos) {
  DimVector b;
  for (const auto& [k, m] : pos) b.add(Letter(k), m);
  return symmetrize(b);
}

}  // namespace

TEST_CASE("trivial and one-dimensional tables") {
  const CharTable t0 = simple_chars(DimVector{});
  REQUIRE(t0.words.size() == 1);
  CHECK(t0.simples[0] == ThetaElt::vacuum());
  CHECK(t0.decomp[0][0] == one);

  const CharTable t1 = simple_chars(theta_w({{1, 1}}));
  REQUIRE(t1.words.size() == 1);
  CHECK(t1.simples[0] == elt({{W({1}), one}, {W({-1}), one}}));
  CHECK(t1.standards[0] == t1.simples[0]);
}

TEST_CASE("golden 2x2 table") {
  const CharTable t = simple_chars(theta_w({{1, 2}}));
  REQUIRE(t.words.size() == 2);
  CHECK(t.words[0] == W({1, -1}));
  CHECK(t.words[1] == W({1, 1}));

  CHECK(t.simples[0] == elt({{W({1, -1}), q + qm1}, {W({-1, -1}), q + qm1}}));
  CHECK(t.simples[1] == elt({{W({1, 1}), q + qm1}, {W({-1, 1}), q + qm1}}));
  CHECK(t.decomp[0][0] == one);
  CHECK(t.decomp[1][1] == one);
  CHECK(t.decomp[1][0] == q);
  CHECK(t.decomp[0][1].is_zero());

  // the symmetric word's standard module is already simple
  CHECK(t.standards[0] == t.simples[0]);
}

TEST_CASE("characters match the dual canonical basis where proved") {
  for (const DimVector& beta : {theta_w({{1, 1}}), theta_w({{1, 2}}), theta_w({{1, 1}, {3, 1}})}) {
    const CharTable t = simple_chars(beta);
    WeightSpace ws(beta);
    for (std::size_t i = 0; i < t.words.size(); ++i) {
      if (theta_reverse(t.words[i]) == t.words[i] ||
          split_symmetric(t.words[i]).second.empty()) {  // symmetric theta-good word
        CHECK(RatElt::from(t.simples[i]) == ws.dual_canonical(i));
      }
    }
  }
}

TEST_CASE("table invariants on larger weights") {
  // the last weight contains xi_2 and exercises the bar-odd multiplicity
  // extraction (a naive coefficient read-off is non-integral there)
  for (const DimVector& beta : {theta_w({{1, 2}, {3, 1}}), theta_w({{1, 3}}), theta_w({{1, 1}, {3, 1}, {5, 1}}),
                                theta_w({{1, 2}, {3, 2}})}) {
    const CharTable t = simple_chars(beta);
    const std::size_t g = t.words.size();
    CHECK(Int(static_cast<long>(g)) == tkpf(beta));
    for (std::size_t i = 0; i < g; ++i) {
      CHECK(t.decomp[i][i] == one);
      CHECK(t.simples[i].bar_symmetric_coeffs());
      CHECK(t.simples[i].max_word() == t.words[i]);
      CHECK(t.simples[i].coeff(t.words[i]) == theta_kappa(t.words[i]));
      for (std::size_t j = i + 1; j < g; ++j) CHECK(t.decomp[i][j].is_zero());
      for (std::size_t j = 0; j < g; ++j) CHECK(t.decomp[i][j].nonneg_coeffs());
      // standard = simple for theta-Lyndon or symmetric words
      if (is_theta_lyndon(t.words[i]) || split_symmetric(t.words[i]).second.empty())
        CHECK(t.standards[i] == t.simples[i]);
    }
  }
}

TEST_CASE("dimension tables") {
  const DimReport r1 = dim_table(theta_w({{1, 1}}));
  CHECK(r1.simple_count == 1);
  const DimReport r2 = dim_table(theta_w({{1, 2}}));
  CHECK(r2.simple_count == 2);
  const DimReport r0 = dim_table(DimVector{});
  CHECK(r0.simple_count == 1);
  CHECK(r2.dims_at_one[0] == 4);  // (q+q^-1) on two words at q=1
}
