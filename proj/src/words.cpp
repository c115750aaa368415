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
#include "hopfint/words.hpp"

#include <map>
#include <utility>

#include "hopfint/linalg.hpp"
#include "text_util.hpp"

namespace hopfint {

std::string BasisTraits<words::Word>::encode(const words::Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ',';
    s += 'x' + std::to_string(w.letters[i]);
  }
  return s + ")";
}

words::Word BasisTraits<words::Word>::decode(std::string_view s) {
  std::vector<words::Letter> letters;
  for (auto part : detail::split_top_level(detail::strip_brackets(s, '(', ')'), ',')) {
    if (part.size() < 2 || part.front() != 'x') {
      throw MalformedInput("letter '" + std::string(part) + "' is not of the form x<id>");
    }
    letters.push_back(detail::parse_int(part.substr(1)));
  }
  return words::make_word(std::move(letters));
}

std::string BasisTraits<words::Word>::latex(const words::Word& w) {
  if (w.empty()) return "\\varepsilon";
  std::string s;
  for (auto l : w.letters) s += "x_{" + std::to_string(l) + "}";
  return s;
}

}  // namespace hopfint

namespace hopfint::words {

namespace {

std::vector<Letter> first_primes(int count) {
  std::vector<Letter> ps;
  for (int c = 2; static_cast<int>(ps.size()) < count; ++c) {
    bool prime = true;
    for (int p : ps) {
      if (p * p > c) break;
      if (c % p == 0) prime = false;
    }
    if (prime) ps.push_back(c);
  }
  return ps;
}

Word tail(const Word& w, std::size_t from) {
  return Word{std::vector<Letter>(w.letters.begin() + static_cast<std::ptrdiff_t>(from),
                                  w.letters.end())};
}

WordLC prepend(Letter a, const WordLC& x) {
  WordLC out;
  for (const auto& [w, c] : x) {
    Word p;
    p.letters.reserve(w.letters.size() + 1);
    p.letters.push_back(a);
    p.letters.insert(p.letters.end(), w.letters.begin(), w.letters.end());
    out.add(std::move(p), c);
  }
  return out;
}

// Recursion on suffix positions (i, j); without an alphabet this is the plain shuffle.
class Merger {
 public:
  Merger(const Word& u, const Word& v, const Alphabet* alphabet, const Rational& theta)
      : u_(u), v_(v), alphabet_(alphabet), theta_(theta) {}

  const WordLC& run(std::size_t i, std::size_t j) {
    auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    WordLC out;
    if (i == u_.letters.size()) {
      out.add(tail(v_, j), 1);
    } else if (j == v_.letters.size()) {
      out.add(tail(u_, i), 1);
    } else {
      out = prepend(u_.letters[i], run(i + 1, j));
      out += prepend(v_.letters[j], run(i, j + 1));
      if (alphabet_ && !theta_.is_zero()) {
        Letter ab = alphabet_->multiply(u_.letters[i], v_.letters[j]);
        out.add_scaled(prepend(ab, run(i + 1, j + 1)), -theta_);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const Word& u_;
  const Word& v_;
  const Alphabet* alphabet_;
  Rational theta_;
  std::map<std::pair<std::size_t, std::size_t>, WordLC> memo_;
};

void require_letter_product(const Alphabet& alphabet) {
  if (!alphabet.has_product()) {
    throw UnsupportedInstance("quasi-shuffle needs an alphabet with a letter product");
  }
}

}  // namespace

Alphabet Alphabet::plain(int size) {
  if (size < 1) throw MalformedInput("alphabet needs at least one letter");
  std::vector<Letter> g;
  for (int i = 1; i <= size; ++i) g.push_back(i);
  return Alphabet(Kind::kPlain, std::move(g));
}

Alphabet Alphabet::harmonic(int size) {
  Alphabet a = plain(size);
  a.kind_ = Kind::kHarmonic;
  return a;
}

Alphabet Alphabet::multiplicative(int size) {
  if (size < 1) throw MalformedInput("alphabet needs at least one letter");
  return Alphabet(Kind::kMultiplicative, first_primes(size));
}

Letter Alphabet::multiply(Letter a, Letter b) const {
  switch (kind_) {
    case Kind::kHarmonic:
      return a + b;
    case Kind::kMultiplicative:
      return a * b;
    case Kind::kPlain:
      break;
  }
  throw UnsupportedInstance("alphabet has no letter product");
}

int Alphabet::degree(Letter a) const {
  if (a < 1) throw MalformedInput("letters are positive");
  switch (kind_) {
    case Kind::kPlain:
      return 1;
    case Kind::kHarmonic:
      return a;
    case Kind::kMultiplicative: {
      int d = 0;
      for (Letter p : generators_) {
        while (a % p == 0) {
          a /= p;
          ++d;
        }
      }
      if (a != 1) throw MalformedInput("letter is not a product of generators");
      return d;
    }
  }
  return 1;
}

int Alphabet::degree(const Word& w) const {
  int d = 0;
  for (Letter a : w.letters) d += degree(a);
  return d;
}

Letter Alphabet::random_letter(Rng& rng) const {
  return generators_[static_cast<std::size_t>(
      uniform_int(rng, 0, static_cast<int>(generators_.size()) - 1))];
}

Word Alphabet::random_word(int length, Rng& rng) const {
  Word w;
  for (int i = 0; i < length; ++i) w.letters.push_back(random_letter(rng));
  return w;
}

Word make_word(std::vector<Letter> letters) {
  for (Letter a : letters) {
    if (a < 1) throw MalformedInput("letters are positive");
  }
  return Word{std::move(letters)};
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

WordLC shuffle(const Word& u, const Word& v) { return Merger(u, v, nullptr, 0).run(0, 0); }

WordLC shuffle(const WordLC& a, const WordLC& b) {
  return lincomb_bilinear([](const Word& x, const Word& y) { return shuffle(x, y); }, a, b);
}

WordLC quasi_shuffle(const Word& u, const Word& v, const Alphabet& alphabet,
                     const Rational& theta) {
  require_letter_product(alphabet);
  return Merger(u, v, &alphabet, theta).run(0, 0);
}

WordLC quasi_shuffle(const WordLC& a, const WordLC& b, const Alphabet& alphabet,
                     const Rational& theta) {
  return lincomb_bilinear(
      [&](const Word& x, const Word& y) { return quasi_shuffle(x, y, alphabet, theta); }, a, b);
}

WordLC half_shuffle_left(const Word& u, const Word& v) {
  if (u.empty()) throw MalformedInput("left half-shuffle with the empty word on the left");
  return prepend(u.letters.front(), shuffle(tail(u, 1), v));
}

WordLC half_shuffle_right(const Word& u, const Word& v) {
  if (v.empty()) throw MalformedInput("right half-shuffle with the empty word on the right");
  return half_shuffle_left(v, u);
}

WordLC half_shuffle_left(const WordLC& a, const WordLC& b) {
  return lincomb_bilinear([](const Word& x, const Word& y) { return half_shuffle_left(x, y); },
                          a, b);
}

WordLC half_shuffle_right(const WordLC& a, const WordLC& b) {
  return lincomb_bilinear([](const Word& x, const Word& y) { return half_shuffle_right(x, y); },
                          a, b);
}

WordLC quasi_half_left(const Word& u, const Word& v, const Alphabet& alphabet,
                       const Rational& theta) {
  if (u.empty()) throw MalformedInput("left half-product with the empty word on the left");
  return prepend(u.letters.front(), quasi_shuffle(tail(u, 1), v, alphabet, theta));
}

WordLC quasi_half_right(const Word& u, const Word& v, const Alphabet& alphabet,
                        const Rational& theta) {
  if (v.empty()) throw MalformedInput("right half-product with the empty word on the right");
  return quasi_half_left(v, u, alphabet, theta);
}

WordLC quasi_dot(const Word& u, const Word& v, const Alphabet& alphabet, const Rational& theta) {
  if (u.empty() || v.empty()) throw MalformedInput("letter product with the empty word");
  require_letter_product(alphabet);
  Letter ab = alphabet.multiply(u.letters.front(), v.letters.front());
  return prepend(ab, quasi_shuffle(tail(u, 1), tail(v, 1), alphabet, theta));
}

WordLC shuffle_to_prelie(const WordLC& x, const WordLC& y) {
  for (const auto* z : {&x, &y}) {
    if (!z->coeff(Word()).is_zero()) throw MalformedInput("pre-Lie product on the empty word");
  }
  auto left = [](const WordLC& a, const WordLC& b) { return half_shuffle_left(a, b); };
  auto right = [](const WordLC& a, const WordLC& b) { return half_shuffle_right(a, b); };
  return prelie_from_half_shuffles(x, y, left, right);
}

FreeShuffleBasis free_shuffle_basis(int size) {
  if (size < 1 || size > 6) throw MalformedInput("free shuffle basis supports sizes 1..6");
  struct Entry {
    std::string expr;
    perm::PermLC value;
  };
  const perm::PermLC x(perm::Permutation({1}));
  std::vector<std::vector<Entry>> by_size(static_cast<std::size_t>(size) + 1);
  by_size[1].push_back({"x", x});
  for (int k = 2; k <= size; ++k) {
    auto& cur = by_size[static_cast<std::size_t>(k)];
    for (const auto& y : by_size[static_cast<std::size_t>(k - 1)]) {
      cur.push_back({"(" + y.expr + "≻x)", perm::half_shuffle_right(y.value, x)});
    }
    for (const auto& z : by_size[static_cast<std::size_t>(k - 1)]) {
      cur.push_back({"(x≺" + z.expr + ")", perm::half_shuffle_left(x, z.value)});
    }
    for (int a = 1; a + 1 < k; ++a) {
      for (const auto& y : by_size[static_cast<std::size_t>(a)]) {
        perm::PermLC yx = perm::half_shuffle_right(y.value, x);
        for (const auto& z : by_size[static_cast<std::size_t>(k - 1 - a)]) {
          cur.push_back({"(" + y.expr + "≻x≺" + z.expr + ")", perm::half_shuffle_left(yx, z.value)});
        }
      }
    }
  }
  FreeShuffleBasis out;
  out.size = size;
  for (auto& e : by_size[static_cast<std::size_t>(size)]) {
    out.expressions.push_back(std::move(e.expr));
    out.evaluations.push_back(std::move(e.value));
  }
  out.rank = rank(out.evaluations);
  return out;
}

}  // namespace hopfint::words
