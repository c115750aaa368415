/* Copyright 2026 The hopfint Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "hopfint/serialize.hpp"
#include "hopfint/words.hpp"

using namespace hopfint;
using namespace hopfint::words;

namespace {

Word W(std::initializer_list<int> v) { return make_word(std::vector<int>(v)); }

WordLC sum(std::initializer_list<std::pair<Word, Rational>> terms) {
  WordLC x;
  for (const auto& [w, c] : terms) x.add(w, c);
  return x;
}

// Oracle: choose which output positions carry the letters of u.
WordLC shuffle_oracle(const Word& u, const Word& v) {
  const int n = u.length(), m = v.length();
  WordLC out;
  for (unsigned mask = 0; mask < (1u << (n + m)); ++mask) {
    if (std::popcount(mask) != n) continue;
    Word w;
    int i = 0, j = 0;
    for (int p = 0; p < n + m; ++p) {
      w.letters.push_back((mask >> p) & 1 ? u.letters[static_cast<std::size_t>(i++)]
                                          : v.letters[static_cast<std::size_t>(j++)]);
    }
    out.add(w, 1);
  }
  return out;
}

// Oracle: filter every map [m+n] -> [r] for surjective, increasing on both blocks.
WordLC quasi_shuffle_oracle(const Word& u, const Word& v, const Alphabet& alph,
                            const Rational& theta) {
  const int m = u.length(), n = v.length();
  const Word all = concat(u, v);
  WordLC out;
  for (int r = std::max(m, n); r <= m + n; ++r) {
    std::vector<int> f(static_cast<std::size_t>(m + n), 0);
    while (true) {
      bool ok = true;
      for (int i = 1; i < m; ++i) ok = ok && f[i - 1] < f[i];
      for (int i = m + 1; i < m + n; ++i) ok = ok && f[i - 1] < f[i];
      std::vector<int> slot(static_cast<std::size_t>(r), 0);
      for (int i = 0; i < m + n && ok; ++i) {
        int& s = slot[static_cast<std::size_t>(f[i])];
        s = s == 0 ? all.letters[i] : alph.multiply(s, all.letters[i]);
      }
      for (int s : slot) ok = ok && s != 0;
      if (ok) out.add(make_word(slot), pow(-theta, m + n - r));
      std::size_t k = 0;
      while (k < f.size() && ++f[k] == r) f[k++] = 0;
      if (k == f.size()) break;
    }
  }
  return out;
}

WordLC random_lc(const Alphabet& a, Rng& rng, int max_len, int terms = 2) {
  WordLC x;
  for (int i = 0; i < terms; ++i) x.add(a.random_word(uniform_int(rng, 1, max_len), rng), random_rational(rng));
  return x;
}

auto hl = [](const WordLC& a, const WordLC& b) { return half_shuffle_left(a, b); };
auto hr = [](const WordLC& a, const WordLC& b) { return half_shuffle_right(a, b); };
auto sh = [](const WordLC& a, const WordLC& b) { return shuffle(a, b); };

}  // namespace

TEST(Shuffle, Examples) {
  // f1=1, f2=2, g1=3, g2=4
  EXPECT_EQ(shuffle(W({1, 2}), W({3, 4})),
            sum({{W({1, 2, 3, 4}), 1}, {W({1, 3, 2, 4}), 1}, {W({1, 3, 4, 2}), 1},
                 {W({3, 4, 1, 2}), 1}, {W({3, 1, 4, 2}), 1}, {W({3, 1, 2, 4}), 1}}));
  // f=1, g=2
  EXPECT_EQ(shuffle(W({1, 2}), W({1})), sum({{W({1, 1, 2}), 2}, {W({1, 2, 1}), 1}}));
  EXPECT_EQ(shuffle(W({1, 2}), Word()), WordLC(W({1, 2})));
  EXPECT_EQ(shuffle(Word(), Word()), WordLC(Word()));
}

TEST(Shuffle, MatchesOracleAndLaws) {
  Alphabet a = Alphabet::plain(3);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    Word u = a.random_word(uniform_int(rng, 0, 4), rng), v = a.random_word(uniform_int(rng, 0, 4), rng);
    EXPECT_EQ(shuffle(u, v), shuffle_oracle(u, v));
    EXPECT_EQ(shuffle(u, v), shuffle(v, u));
  }
  for (int i = 0; i < 30; ++i) {
    WordLC x = random_lc(a, rng, 2), y = random_lc(a, rng, 2), z = random_lc(a, rng, 1);
    EXPECT_EQ(shuffle(shuffle(x, y), z), shuffle(x, shuffle(y, z)));
  }
}

TEST(QuasiShuffle, Examples) {
  Alphabet a = Alphabet::multiplicative(3);
  const int x = 2, y = 3, z = 5;
  for (Rational theta : {Rational(1), Rational(-1), Rational(2, 3)}) {
    EXPECT_EQ(quasi_shuffle(W({x}), W({y}), a, theta),
              sum({{W({x, y}), 1}, {W({y, x}), 1}, {W({x * y}), -theta}}));
    // No θ² term at word level; (y, x•z) carries -θ.
    EXPECT_EQ(quasi_shuffle(W({x}), W({y, z}), a, theta),
              sum({{W({x, y, z}), 1}, {W({y, x, z}), 1}, {W({y, z, x}), 1},
                   {W({x * y, z}), -theta}, {W({y, x * z}), -theta}}));
  }
  EXPECT_THROW(quasi_shuffle(W({1}), W({2}), Alphabet::plain(2), 1), UnsupportedInstance);
}

TEST(QuasiShuffle, MatchesSurjectionEnumeration) {
  Rng rng(2);
  for (auto alph : {Alphabet::multiplicative(3), Alphabet::harmonic(3)}) {
    for (int i = 0; i < 60; ++i) {
      Word u = alph.random_word(uniform_int(rng, 0, 3), rng);
      Word v = alph.random_word(uniform_int(rng, 0, 3), rng);
      Rational theta = random_rational(rng);
      EXPECT_EQ(quasi_shuffle(u, v, alph, theta), quasi_shuffle_oracle(u, v, alph, theta));
    }
  }
  // Distinct prime letters make every surjection its own word: count them.
  Alphabet a = Alphabet::multiplicative(6);
  const auto& g = a.generators();
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      Word u{std::vector<int>(g.begin(), g.begin() + m)};
      Word v{std::vector<int>(g.begin() + m, g.begin() + m + n)};
      auto q = quasi_shuffle(u, v, a, 1);
      // Delannoy numbers D(m, n) count the (m, n) quasi-shuffles.
      Rational delannoy;
      for (int k = 0; k <= std::min(m, n); ++k) delannoy += binomial(m, k) * binomial(n, k) * pow(Rational(2), k);
      EXPECT_EQ(Rational(static_cast<long>(q.size())), delannoy);
    }
  }
}

TEST(QuasiShuffle, CommutativeAssociativeAndDegenerates) {
  Rng rng(3);
  Alphabet a = Alphabet::harmonic(3);
  for (int i = 0; i < 30; ++i) {
    WordLC x = random_lc(a, rng, 2), y = random_lc(a, rng, 2), z = random_lc(a, rng, 1);
    Rational t = random_rational(rng);
    EXPECT_EQ(quasi_shuffle(x, y, a, t), quasi_shuffle(y, x, a, t));
    EXPECT_EQ(quasi_shuffle(quasi_shuffle(x, y, a, t), z, a, t),
              quasi_shuffle(x, quasi_shuffle(y, z, a, t), a, t));
  }
  for (int i = 0; i < 200; ++i) {
    Word u = a.random_word(uniform_int(rng, 0, 3), rng), v = a.random_word(uniform_int(rng, 0, 3), rng);
    EXPECT_EQ(quasi_shuffle(u, v, a, 0), shuffle(u, v));
  }
}

TEST(Alphabet, LetterProductAndDegrees) {
  Rng rng(4);
  for (auto alph : {Alphabet::multiplicative(4), Alphabet::harmonic(4)}) {
    for (int i = 0; i < 50; ++i) {
      int x = alph.random_letter(rng), y = alph.random_letter(rng), z = alph.random_letter(rng);
      EXPECT_EQ(alph.multiply(x, y), alph.multiply(y, x));
      EXPECT_EQ(alph.multiply(alph.multiply(x, y), z), alph.multiply(x, alph.multiply(y, z)));
      EXPECT_EQ(alph.degree(alph.multiply(x, y)), alph.degree(x) + alph.degree(y));
    }
  }
  EXPECT_EQ(Alphabet::multiplicative(3).generators(), (std::vector<int>{2, 3, 5}));
  EXPECT_EQ(Alphabet::harmonic(3).degree(W({1, 3})), 4);
  EXPECT_THROW(Alphabet::plain(2).multiply(1, 2), UnsupportedInstance);
}

TEST(HalfShuffle, ExamplesAndSplit) {
  EXPECT_EQ(half_shuffle_left(W({1}), W({2})), WordLC(W({1, 2})));
  EXPECT_EQ(half_shuffle_right(W({1}), W({2})), WordLC(W({2, 1})));
  EXPECT_EQ(half_shuffle_left(W({1, 2}), Word()), WordLC(W({1, 2})));
  EXPECT_THROW(half_shuffle_left(Word(), W({1})), MalformedInput);
  EXPECT_THROW(half_shuffle_right(W({1}), Word()), MalformedInput);
  Alphabet a = Alphabet::plain(3);
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Word u = a.random_word(uniform_int(rng, 1, 4), rng), v = a.random_word(uniform_int(rng, 1, 4), rng);
    EXPECT_EQ(half_shuffle_left(u, v) + half_shuffle_right(u, v), shuffle(u, v));
    EXPECT_EQ(half_shuffle_left(u, v), half_shuffle_right(v, u));
  }
}

TEST(HalfShuffle, CommutativeAndNoncommutativeAxioms) {
  Alphabet a = Alphabet::plain(3);
  Rng rng(6);
  for (int i = 0; i < 60; ++i) {
    WordLC x = random_lc(a, rng, 2), y = random_lc(a, rng, 1), z = random_lc(a, rng, 1);
    EXPECT_EQ(hl(hl(x, y), z), hl(x, hl(y, z) + hl(z, y)));
    EXPECT_EQ(hl(hl(x, y), z), hl(x, sh(y, z)));
    EXPECT_EQ(hr(x, hl(y, z)), hl(hr(x, y), z));
    EXPECT_EQ(hr(x, hr(y, z)), hr(sh(x, y), z));
  }
}

TEST(HalfShuffle, WeightedHalfProducts) {
  Rng rng(7);
  Alphabet a = Alphabet::harmonic(3);
  for (int i = 0; i < 60; ++i) {
    Word x = a.random_word(uniform_int(rng, 1, 2), rng);
    Word y = a.random_word(uniform_int(rng, 1, 2), rng);
    Word z = a.random_word(uniform_int(rng, 1, 2), rng);
    Rational t = random_rational(rng);
    auto ql = [&](const WordLC& p, const WordLC& q) {
      return lincomb_bilinear([&](const Word& u, const Word& v) { return quasi_half_left(u, v, a, t); }, p, q);
    };
    EXPECT_EQ(quasi_half_left(x, y, a, t) + quasi_half_right(x, y, a, t) - t * quasi_dot(x, y, a, t),
              quasi_shuffle(x, y, a, t));
    WordLC lhs = ql(ql(WordLC(x), WordLC(y)), WordLC(z));
    WordLC inner = quasi_half_left(y, z, a, t) + quasi_half_left(z, y, a, t) - t * quasi_dot(y, z, a, t);
    EXPECT_EQ(lhs, ql(WordLC(x), inner));
  }
}

TEST(PreLieFromShuffle, WordModel) {
  // In the commutative word model x ≻ y = y ≺ x, so the product vanishes.
  EXPECT_TRUE(shuffle_to_prelie(WordLC(W({1})), WordLC(W({2}))).is_zero());
  EXPECT_EQ(hr(WordLC(W({1})), WordLC(W({2}))), WordLC(W({2, 1})));
  EXPECT_THROW(shuffle_to_prelie(WordLC(Word()), WordLC(W({1}))), MalformedInput);
}

TEST(PreLieFromShuffle, PermutationModel) {
  auto left = [](const perm::PermLC& a, const perm::PermLC& b) { return perm::half_shuffle_left(a, b); };
  auto right = [](const perm::PermLC& a, const perm::PermLC& b) { return perm::half_shuffle_right(a, b); };
  auto pl = [&](const perm::PermLC& a, const perm::PermLC& b) {
    return prelie_from_half_shuffles(a, b, left, right);
  };
  Rng rng(8);
  auto rnd = [&] {
    perm::PermLC x;
    for (int t = 0; t < 2; ++t) x.add(perm::random_permutation(uniform_int(rng, 1, 3), rng), random_rational(rng));
    return x;
  };
  for (int i = 0; i < 100; ++i) {
    perm::PermLC x = rnd(), y = rnd(), z = rnd();
    EXPECT_EQ(pl(x, pl(y, z)) - pl(pl(x, y), z), pl(y, pl(x, z)) - pl(pl(y, x), z));
    EXPECT_EQ(pl(x, y) - pl(y, x), perm::lie_bracket(x, y));
  }
  perm::PermLC one(perm::Permutation({1}));
  perm::PermLC expect(perm::Permutation({1, 2}));
  expect.add(perm::Permutation({2, 1}), -1);
  EXPECT_EQ(pl(one, one), expect);
}

TEST(FreeShuffleBasis, SizesAndRank) {
  const int catalan[] = {0, 1, 2, 5, 14, 42, 132};
  for (int k = 1; k <= 6; ++k) {
    auto b = free_shuffle_basis(k);
    EXPECT_EQ(static_cast<int>(b.expressions.size()), catalan[k]);
    EXPECT_EQ(b.rank, catalan[k]) << "size " << k;
    for (const auto& e : b.evaluations) EXPECT_EQ(e.homogeneous_degree(), k);
  }
  auto b2 = free_shuffle_basis(2);
  EXPECT_EQ(b2.expressions, (std::vector<std::string>{"(x≻x)", "(x≺x)"}));
  EXPECT_EQ(b2.evaluations[0], perm::PermLC(perm::Permutation({1, 2})));
  EXPECT_EQ(b2.evaluations[1], perm::PermLC(perm::Permutation({2, 1})));
  EXPECT_THROW(free_shuffle_basis(7), MalformedInput);
}

TEST(WordSerialize, RoundTrip) {
  auto q = quasi_shuffle(W({2, 3}), W({5}), Alphabet::multiplicative(3), 1);
  EXPECT_EQ(deserialize<Word>(serialize(q)), q);
  EXPECT_EQ(encode(W({1, 12})), "(x1,x12)");
  EXPECT_EQ(encode(Word()), "()");
  EXPECT_THROW(BasisTraits<Word>::decode("(y1)"), MalformedInput);
}
