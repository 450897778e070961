#include <qshuffle/words.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

using namespace qsh;

namespace {

Word W(std::initializer_list<int> ks) {
  Word w;
  for (int k : ks) w.letters.push_back(Letter(k));
  return w;
}

/// every word over the window alphabet of exactly the given length
std::vector<Word> all_words(const std::vector<int>& alphabet, int len) {
  std::vector<Word> out{Word{}};
  for (int t = 0; t < len; ++t) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (int a : alphabet) {
        Word e = w;
        e.letters.push_back(Letter(a));
        next.push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

bool is_aperiodic(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; periodic && i + p < n; ++i) periodic = w[i] == w[i + p];
    if (periodic) return false;
  }
  return true;
}

Word rotate(const Word& w, std::size_t r) {
  Word out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) out.letters.push_back(w[(i + r) % n]);
  return out;
}

/// all signed permutations of {1..n}
std::vector<SignedPerm> full_group(int n) {
  std::vector<int> base(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i + 1;
  std::sort(base.begin(), base.end());
  std::vector<SignedPerm> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> im = base;
      for (int t = 0; t < n; ++t)
        if (mask & (1u << t)) im[static_cast<std::size_t>(t)] = -im[static_cast<std::size_t>(t)];
      out.emplace_back(im);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

bool in_parabolic(const SignedPerm& w, int m, bool signed_head) {
  const int n = static_cast<int>(w.n());
  for (int i = 1; i <= n; ++i) {
    const int v = w(i);
    if (i <= m) {
      if (std::abs(v) > m) return false;
      if (!signed_head && v < 0) return false;
    } else {
      if (v <= m) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("anti-lex order") {
  CHECK(antilex_cmp(W({3, 1}), W({1, 3})) < 0);  // last letters decide
  CHECK(antilex_cmp(W({3, 1}), W({3})) < 0);
  CHECK(antilex_cmp(W({1}), W({1})) == 0);
  CHECK(antilex_cmp(W({1}), W({1, 1})) < 0);  // tails are smaller
  CHECK(antilex_cmp(W({1, 1}), W({1, -1})) > 0);
}

TEST_CASE("lexprime order") {
  // pinned by max'(costandard) = nu: leftmost scan, standard letter order
  CHECK(lexprime_cmp(W({-1}), W({1})) < 0);
  CHECK(lexprime_cmp(W({1, -1}), W({1, 1})) < 0);
  CHECK(lexprime_cmp(W({1}), W({1, 3})) < 0);
}

TEST_CASE("signed permutations act on words") {
  CHECK(theta_reverse(W({1, -1})) == W({1, -1}));
  CHECK(theta_reverse(W({3, 1})) == W({-1, -3}));
  // s_0 flips the first letter
  SignedPerm s0({-1, 2});
  CHECK(weyl_act(s0, W({1, 3})) == W({-1, 3}));
  SignedPerm s1({2, 1});
  CHECK(weyl_act(s1, W({1, 3})) == W({3, 1}));
  CHECK_THROWS_AS(weyl_act(s1, W({1})), std::invalid_argument);
  // composition and inverse against the action
  const Word w3 = W({1, -3, 5});
  for (const auto& a : full_group(3)) {
    CHECK(a.inverse() * a == SignedPerm::identity(3));
    for (const auto& b : full_group(3)) CHECK(weyl_act(a * b, w3) == weyl_act(a, weyl_act(b, w3)));
  }
}

TEST_CASE("reduced words and length") {
  for (const auto& w : full_group(3)) {
    const auto rw = reduced_word(w);
    CHECK(static_cast<int>(rw.size()) == w.length());
    SignedPerm acc = SignedPerm::identity(3);
    for (int g : rw) {
      std::vector<int> im = acc.images;
      if (g == 0)
        im[0] = -im[0];
      else
        std::swap(im[static_cast<std::size_t>(g - 1)], im[static_cast<std::size_t>(g)]);
      // right multiplication by s_g permutes positions
      acc = SignedPerm(im);
    }
    CHECK(acc == w);
  }
}

TEST_CASE("Lyndon words and factorization") {
  CHECK(is_lyndon(W({3, 1})));
  CHECK(!is_lyndon(W({1, 3})));
  CHECK(is_lyndon(W({1})));
  CHECK(!is_lyndon(Word{}));

  const auto f = lyndon_factorize(W({1, 3}));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == W({1}));
  CHECK(f[1] == W({3}));

  const auto single = lyndon_factorize(W({3, 1}));
  REQUIRE(single.size() == 1);

  // exhaustive: factors Lyndon, weakly increasing left to right, concatenation
  // reproduces the word, and the factorization is the unique such one
  const std::vector<int> alpha{-3, -1, 1, 3};
  for (int len = 1; len <= 5; ++len) {
    for (const Word& w : all_words(alpha, len)) {
      const auto fs = lyndon_factorize(w);
      Word cat;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        CHECK(is_lyndon(fs[i]));
        if (i + 1 < fs.size()) CHECK(fs[i] <= fs[i + 1]);
        cat = cat.concat(fs[i]);
      }
      CHECK(cat == w);
    }
  }
}

TEST_CASE("one Lyndon rotation per aperiodic necklace") {
  const std::vector<int> alpha{-3, -1, 1, 3};
  for (int len = 1; len <= 6; ++len) {
    std::set<std::vector<int>> seen;  // canonical necklace representative
    for (const Word& w : all_words(alpha, len)) {
      if (!is_aperiodic(w)) continue;
      int count = 0;
      for (std::size_t r = 0; r < w.size(); ++r)
        if (is_lyndon(rotate(w, r))) ++count;
      CHECK(count == 1);
    }
  }
}

TEST_CASE("standard factorization") {
  const auto [l, r] = standard_factorize(W({3, 1}));
  CHECK(l == W({3}));
  CHECK(r == W({1}));
  CHECK_THROWS_AS(standard_factorize(W({1})), std::invalid_argument);
  CHECK_THROWS_AS(standard_factorize(W({1, 3})), std::invalid_argument);
  // good Lyndon words split off a single letter on the left
  const auto [l2, r2] = standard_factorize(W({5, 3, 1}));
  CHECK(l2 == W({5}));
  CHECK(r2 == W({3, 1}));
}

TEST_CASE("good words") {
  DimVector b = W({1, 3}).weight();
  const auto gl = good_lyndon_words(b);
  REQUIRE(gl.size() == 1);
  CHECK(gl[0] == W({3, 1}));

  const auto gw = good_words(b);
  REQUIRE(gw.size() == 2);
  CHECK(gw[0] == W({3, 1}));
  CHECK(gw[1] == W({1, 3}));

  CHECK(good_words(DimVector{}) == std::vector<Word>{Word{}});
  CHECK(is_good(W({1, 3})));
  CHECK(!is_good(W({3, 3, 1})));  // Lyndon but not descending by 2
  CHECK(!is_good(W({5, 1})));
}

TEST_CASE("theta-Lyndon words") {
  CHECK(xi(1) == W({1, -1}));
  CHECK(xi(2) == W({3, 1, -1, -3}));
  CHECK(is_theta_lyndon(W({1})));
  CHECK(!is_theta_lyndon(W({-1})));
  CHECK(is_theta_lyndon(xi(1)));
  CHECK(is_theta_lyndon(W({3, 1})));
  CHECK(!is_theta_lyndon(W({-1, -3})));

  // xi chain is decreasing: xi(k) > xi(l) iff k < l
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) CHECK((xi(k) > xi(l)) == (k < l));

  // weight map hits each BC+ root once on the window
  DimVector big;
  for (int k = -7; k <= 7; k += 2) big.add(Letter(k), 4);
  std::map<DimVector, int> hits;
  for (const RootBC& r : bc_roots_inside(big)) {
    const Word w = theta_lyndon_word(r);
    CHECK(is_theta_lyndon(w));
    CHECK(w.theta_weight() == r.weight());
    hits[r.weight()]++;
  }
  for (const auto& [wt, c] : hits) CHECK(c == 1);
}

TEST_CASE("theta-good enumeration matches tkpf") {
  for (int c1 = 0; c1 <= 2; ++c1)
    for (int c3 = 0; c3 <= 2; ++c3) {
      if (c1 + c3 == 0 || c1 + c3 > 4) continue;
      DimVector b;
      b.add(Letter(1), c1);
      b.add(Letter(3), c3);
      b = symmetrize(b);
      const auto words = theta_good_words(b);
      CHECK(Int(static_cast<long>(words.size())) == tkpf(b));
      for (const Word& w : words) CHECK(w.theta_weight() == b);
      CHECK(std::is_sorted(words.begin(), words.end(), AntilexLess{}));
    }
  DimVector b2;
  b2.add(Letter(1), 2);
  b2.add(Letter(-1), 2);
  const auto tg = theta_good_words(b2);
  REQUIRE(tg.size() == 2);
  CHECK(tg[0] == W({1, -1}));
  CHECK(tg[1] == W({1, 1}));
}

TEST_CASE("symmetric and theta-Lyndon words are minimal in their weight class") {
  for (int c1 = 0; c1 <= 2; ++c1)
    for (int c3 = 0; c3 <= 2; ++c3) {
      if (c1 + c3 == 0 || c1 + c3 > 3) continue;
      DimVector b;
      b.add(Letter(1), c1);
      b.add(Letter(3), c3);
      b = symmetrize(b);
      const auto tg = theta_good_words(b);
      for (const Word& nu : tg) {
        const bool sym = split_symmetric(nu).first == nu;
        if (sym || is_theta_lyndon(nu)) CHECK(nu == tg.front());
      }
    }
}

TEST_CASE("split symmetric") {
  const Word nu = xi(1).concat(W({1}));  // factors xi_1 < (1)
  const auto [sym, nonsym] = split_symmetric(nu);
  CHECK(sym == xi(1));
  CHECK(nonsym == W({1}));
}

TEST_CASE("coset representatives") {
  CHECK(coset_reps(CosetKind::sym, 1, 1).size() == 2);
  CHECK(coset_reps(CosetKind::hyperoct, 0, 1).size() == 2);
  CHECK(coset_reps(CosetKind::hyperoct, 2, 2).size() == 24);

  // against brute force: group elements of minimal length in their coset
  for (int n = 1; n <= 4; ++n) {
    const auto group = full_group(n);
    for (int m = 0; m <= n; ++m) {
      for (CosetKind kind : {CosetKind::sym, CosetKind::hyperoct}) {
        if (kind == CosetKind::sym && m == 0) continue;  // head must stay unsigned
        std::map<std::set<std::vector<int>>, SignedPerm> minimal;
        for (const auto& w : group) {
          if (kind == CosetKind::sym) {
            bool unsigned_all = true;
            for (int v : w.images) unsigned_all = unsigned_all && v > 0;
            if (!unsigned_all) continue;
          }
          // coset w * P
          std::set<std::vector<int>> coset;
          for (const auto& p : group) {
            if (!in_parabolic(p, m, kind == CosetKind::hyperoct)) continue;
            if (kind == CosetKind::sym) {
              bool unsigned_all = true;
              for (int v : p.images) unsigned_all = unsigned_all && v > 0;
              if (!unsigned_all) continue;
            }
            coset.insert((w * p).images);
          }
          auto it = minimal.find(coset);
          if (it == minimal.end() || w.length() < it->second.length())
            minimal.insert_or_assign(coset, w);
        }
        std::set<std::vector<int>> expect, got;
        for (const auto& [c, w] : minimal) expect.insert(w.images);
        for (const auto& w : coset_reps(kind, m, n - m)) got.insert(w.images);
        CHECK(expect == got);
      }
    }
  }
}
