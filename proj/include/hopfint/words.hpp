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
#ifndef HOPFINT_WORDS_HPP
#define HOPFINT_WORDS_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hopfint/lincomb.hpp"
#include "hopfint/permutations.hpp"
#include "hopfint/random.hpp"

namespace hopfint::words {

// Letters are positive integers, printed as "x<id>".
using Letter = int;

struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

}  // namespace hopfint::words

namespace hopfint {

// Degree here is the word length; weighted degrees come from the alphabet.
template <>
struct BasisTraits<words::Word> {
  static std::string encode(const words::Word& w);
  static words::Word decode(std::string_view s);
  static int degree(const words::Word& w) { return w.length(); }
  static std::string latex(const words::Word& w);
};

}  // namespace hopfint

namespace hopfint::words {

using WordLC = LinComb<Word>;

// Generator letters with degrees, and an optional commutative associative
// letter product used by quasi-shuffles.
class Alphabet {
 public:
  enum class Kind { kPlain, kHarmonic, kMultiplicative };

  // x1..xn, degree 1, no letter product.
  static Alphabet plain(int size);
  // z_i = x<i> of degree i with z_i • z_j = z_{i+j}.
  static Alphabet harmonic(int size);
  // Generators are the first `size` primes; a letter is a product of generators,
  // encoded by that integer, and • multiplies ids.
  static Alphabet multiplicative(int size);

  Kind kind() const { return kind_; }
  const std::vector<Letter>& generators() const { return generators_; }
  bool has_product() const { return kind_ != Kind::kPlain; }
  // Throws UnsupportedInstance without a letter product.
  Letter multiply(Letter a, Letter b) const;
  int degree(Letter a) const;
  int degree(const Word& w) const;
  Letter random_letter(Rng& rng) const;
  Word random_word(int length, Rng& rng) const;

 private:
  Alphabet(Kind kind, std::vector<Letter> gens) : kind_(kind), generators_(std::move(gens)) {}
  Kind kind_;
  std::vector<Letter> generators_;
};

Word make_word(std::vector<Letter> letters);
Word concat(const Word& a, const Word& b);

WordLC shuffle(const Word& u, const Word& v);
WordLC shuffle(const WordLC& a, const WordLC& b);

// Σ_r (-θ)^{m+n-r} over quasi-shuffle surjections onto r slots.
WordLC quasi_shuffle(const Word& u, const Word& v, const Alphabet& alphabet, const Rational& theta);
WordLC quasi_shuffle(const WordLC& a, const WordLC& b, const Alphabet& alphabet,
                     const Rational& theta);

// u ≺ v: interleavings starting with the first letter of u. u must be nonempty.
WordLC half_shuffle_left(const Word& u, const Word& v);
// u ≻ v = v ≺ u. v must be nonempty.
WordLC half_shuffle_right(const Word& u, const Word& v);
WordLC half_shuffle_left(const WordLC& a, const WordLC& b);
WordLC half_shuffle_right(const WordLC& a, const WordLC& b);

// Weighted versions: u ≺ v = u_1 (u' ⋆ v), u · v = (u_1 • v_1)(u' ⋆ v'), so that
// u ⋆ v = u ≺ v + u ≻ v - θ u · v.
WordLC quasi_half_left(const Word& u, const Word& v, const Alphabet& alphabet,
                       const Rational& theta);
WordLC quasi_half_right(const Word& u, const Word& v, const Alphabet& alphabet,
                        const Rational& theta);
WordLC quasi_dot(const Word& u, const Word& v, const Alphabet& alphabet, const Rational& theta);

// x ▷ y = x ≻ y - y ≺ x for any pair of half-shuffles on LinComb<B>.
template <class B, class Left, class Right>
LinComb<B> prelie_from_half_shuffles(const LinComb<B>& x, const LinComb<B>& y, Left&& left,
                                     Right&& right) {
  return right(x, y) - left(y, x);
}

// The word-model instance; rejects the empty word.
WordLC shuffle_to_prelie(const WordLC& x, const WordLC& y);

struct FreeShuffleBasis {
  int size = 0;
  std::vector<std::string> expressions;
  std::vector<perm::PermLC> evaluations;  // x ↦ (1) in the permutation model
  int rank = 0;
};

// Expressions x | y≻x | x≺z | y≻x≺z with `size` copies of x. Requires size ≤ 6.
FreeShuffleBasis free_shuffle_basis(int size);

}  // namespace hopfint::words

#endif  // HOPFINT_WORDS_HPP
