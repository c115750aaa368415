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

#include <string>

#include "hopfint/linalg.hpp"
#include "hopfint/permutations.hpp"
#include "hopfint/random.hpp"
#include "hopfint/serialize.hpp"
#include "hopfint/series.hpp"

using namespace hopfint;
using perm::Permutation;
using perm::PermLC;

namespace {

Permutation P(std::initializer_list<int> v) { return Permutation(std::vector<int>(v)); }

std::string random_digits(Rng& rng, int len) {
  std::string s(1, static_cast<char>('1' + uniform_int(rng, 0, 8)));
  for (int i = 1; i < len; ++i) s += static_cast<char>('0' + uniform_int(rng, 0, 9));
  return s;
}

PermLC random_perm_lc(Rng& rng, int terms, int max_deg, int min_deg = 0) {
  PermLC x;
  for (int i = 0; i < terms; ++i) {
    x.add(perm::random_permutation(uniform_int(rng, min_deg, max_deg), rng), random_rational(rng));
  }
  return x;
}

auto mr = [](const PermLC& a, const PermLC& b) { return perm::mr_product(a, b); };

}  // namespace

TEST(Rational, LowestTermsAndSign) {
  Rational r(6, -4);
  EXPECT_EQ(r.fraction_str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).fraction_str(), "0/1");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational::parse("1/0"), MalformedInput);
  EXPECT_THROW(Rational::parse("x"), MalformedInput);
  EXPECT_THROW(Rational(1) / Rational(0), MalformedInput);
}

TEST(Rational, ExactOnBigInputs) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    mpz_class a(random_digits(rng, 40)), b(random_digits(rng, 35));
    mpz_class c(random_digits(rng, 30)), d(random_digits(rng, 45));
    Rational lhs = (Rational::from_integers(a, b) + Rational::from_integers(c, d)) *
                   Rational::from_integers(b * d, 1);
    EXPECT_EQ(lhs, Rational::from_integers(a * d + c * b, 1));
  }
}

TEST(LinComb, AddCancelsAndPrunes) {
  Permutation s = P({2, 1});
  PermLC a(s, 2), b(s, -2);
  EXPECT_TRUE(lincomb_add(a, b).is_zero());
  EXPECT_EQ(lincomb_add(PermLC(s), PermLC(s)), PermLC(s, 2));

  Permutation x = P({1}), y = P({1, 2});
  PermLC u;
  u.add(x, Rational(1, 2));
  u.add(y, Rational(1, 3));
  PermLC v(y, Rational(1, 6));
  PermLC expect;
  expect.add(x, Rational(1, 2));
  expect.add(y, Rational(1, 2));
  EXPECT_EQ(u + v, expect);
  EXPECT_EQ((u - u).size(), 0u);
}

TEST(LinComb, BilinearExamples) {
  auto f = [](const Permutation& a, const Permutation& b) { return perm::mr_product(a, b); };
  PermLC one(P({1}));
  PermLC expect;
  expect.add(P({1, 2}), 1);
  expect.add(P({2, 1}), 1);
  EXPECT_EQ(lincomb_bilinear(f, one, one), expect);
  EXPECT_TRUE(lincomb_bilinear(f, PermLC(), one).is_zero());
  Permutation x = P({2, 1}), y = P({1});
  EXPECT_EQ(lincomb_bilinear(f, PermLC(x, 2), PermLC(y, 3)), Rational(6) * f(x, y));
}

TEST(LinComb, BilinearDistributesOverAdd) {
  Rng rng(3);
  auto f = [](const Permutation& a, const Permutation& b) { return perm::mr_product(a, b); };
  for (int i = 0; i < 50; ++i) {
    PermLC a = random_perm_lc(rng, 3, 3), b = random_perm_lc(rng, 3, 3), c = random_perm_lc(rng, 3, 3);
    EXPECT_EQ(lincomb_bilinear(f, a + b, c), lincomb_bilinear(f, a, c) + lincomb_bilinear(f, b, c));
    EXPECT_EQ(lincomb_bilinear(f, a, b + c), lincomb_bilinear(f, a, b) + lincomb_bilinear(f, a, c));
  }
}

TEST(LinComb, HomogeneousDegree) {
  PermLC x(P({1, 2}));
  x.add(P({2, 1}), 3);
  EXPECT_EQ(x.homogeneous_degree(), 2);
  x.add(P({1}), 1);
  EXPECT_FALSE(x.homogeneous_degree().has_value());
  EXPECT_EQ(x.component(1), PermLC(P({1})));
}

TEST(Series, ExpOfZeroIsOne) {
  TruncatedSeries<PermLC> zero(4);
  auto e = series_exp(zero, mr, perm::perm_unit());
  EXPECT_EQ(e, series_constant(4, PermLC(), perm::perm_unit()));
}

TEST(Series, LogOfDescentUnitSeriesDegreeTwo) {
  auto lg = series_log(perm::descent_unit_series(4), mr, perm::perm_unit());
  // (s-1) - (s-1)^2/2 in degree 2: (12) - ((12)+(21))/2.
  PermLC expect;
  expect.add(P({1, 2}), Rational(1, 2));
  expect.add(P({2, 1}), Rational(-1, 2));
  EXPECT_EQ(lg[2], expect);
  EXPECT_EQ(lg[1], PermLC(P({1})));
  EXPECT_TRUE(lg[0].is_zero());
}

TEST(Series, ExpLogInverse) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    TruncatedSeries<PermLC> s(5);
    for (int t = 0; t < 3; ++t) {
      auto p = perm::random_permutation(uniform_int(rng, 1, 3), rng);
      s[p.size()].add(p, random_rational(rng));
    }
    ASSERT_TRUE(series_is_graded(s));
    auto e = series_exp(s, mr, perm::perm_unit());
    EXPECT_EQ(series_log(e, mr, perm::perm_unit()), s);
    auto l = series_log(perm::descent_unit_series(5) + s, mr, perm::perm_unit());
    EXPECT_EQ(series_exp(l, mr, perm::perm_unit()), perm::descent_unit_series(5) + s);
  }
}

TEST(Series, PreconditionsAndCutoffs) {
  auto one = perm::descent_unit_series(3);
  EXPECT_THROW(series_exp(one, mr, perm::perm_unit()), MalformedInput);
  TruncatedSeries<PermLC> zero(3);
  EXPECT_THROW(series_log(zero, mr, perm::perm_unit()), MalformedInput);
  EXPECT_THROW(zero[4], CutoffExceeded);

  auto a = perm::descent_unit_series(5);
  auto b = perm::descent_unit_series(3);
  EXPECT_EQ((a + b).cutoff(), 3);
  EXPECT_EQ(series_mul(a, b, mr).cutoff(), 3);
  EXPECT_EQ(series_mul(b, a, mr).cutoff(), 3);
}

TEST(Serialize, JsonFormatAndOrder) {
  PermLC x;
  x.add(P({2, 1}), Rational(-1, 2));
  x.add(P({1, 2}), Rational(1, 2));
  x.add(P({1}), 3);
  EXPECT_EQ(serialize(x),
            R"js([{"basis":"(1)","coeff":"3/1"},{"basis":"(1,2)","coeff":"1/2"},)js"
            R"js({"basis":"(2,1)","coeff":"-1/2"}])js");
  EXPECT_EQ(to_text(x), "3*(1) + 1/2*(1,2) - 1/2*(2,1)");
  EXPECT_EQ(to_latex(x), "3\\,(1) + \\frac{1}{2}\\,(12) - \\frac{1}{2}\\,(21)");
  EXPECT_EQ(serialize(PermLC()), "[]");
  EXPECT_EQ(to_text(PermLC()), "0");
}

TEST(Serialize, RoundTripAndDeterminism) {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    PermLC x = random_perm_lc(rng, 6, 5);
    std::string s = serialize(x);
    EXPECT_EQ(deserialize<Permutation>(s), x);
    EXPECT_EQ(serialize(deserialize<Permutation>(s)), s);
  }
  auto d = perm::mr_coproduct(P({2, 3, 1}));
  EXPECT_EQ(deserialize<perm::PermTensor>(serialize(d)), d);
  EXPECT_THROW(deserialize<Permutation>("{"), MalformedInput);
  EXPECT_THROW(deserialize<Permutation>(R"js([{"basis":"(1,1)","coeff":"1/1"}])js"), MalformedInput);
}

TEST(LinAlg, RankOfSmallFamilies) {
  std::vector<PermLC> fam{PermLC(P({1, 2})), PermLC(P({2, 1})), PermLC(P({1, 2})) + PermLC(P({2, 1}))};
  EXPECT_EQ(rank(fam), 2);
  EXPECT_EQ(rank(std::vector<PermLC>{}), 0);
  EXPECT_EQ(exact_rank({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}), 2);
}
