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
#ifndef HOPFINT_LINCOMB_HPP
#define HOPFINT_LINCOMB_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "hopfint/errors.hpp"
#include "hopfint/rational.hpp"

namespace hopfint {

// Specialized per basis type. Required members:
//   static std::string encode(const B&);      canonical string
//   static B decode(std::string_view);        inverse of encode
//   static int degree(const B&);
//   static std::string latex(const B&);
template <class B>
struct BasisTraits;

template <class B>
std::string encode(const B& b) {
  return BasisTraits<B>::encode(b);
}

template <class B>
int degree(const B& b) {
  return BasisTraits<B>::degree(b);
}

// Finite formal sum of basis elements with nonzero rational coefficients.
template <class B>
class LinComb {
 public:
  using basis_type = B;
  using map_type = std::map<B, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(const B& b, const Rational& c = 1) { add(b, c); }

  void add(const B& b, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add(B&& b, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(b), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  // this += c * other
  void add_scaled(const LinComb& other, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [b, k] : other.terms_) add(b, k * c);
  }

  const Rational& coeff(const B& b) const {
    static const Rational zero;
    auto it = terms_.find(b);
    return it == terms_.end() ? zero : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
  friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
  LinComb operator-() const {
    LinComb r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
  }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  // Restriction to the terms of one degree.
  LinComb component(int d) const {
    LinComb r;
    for (const auto& [b, c] : terms_) {
      if (hopfint::degree(b) == d) r.terms_.emplace(b, c);
    }
    return r;
  }

  // Common degree of all terms; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& kv : terms_) {
      int e = hopfint::degree(kv.first);
      if (d && *d != e) return std::nullopt;
      d = e;
    }
    return d;
  }

 private:
  map_type terms_;
};

template <class B>
LinComb<B> lincomb_add(const LinComb<B>& a, const LinComb<B>& b) {
  return a + b;
}

// Linear extension of f : B -> LinComb<C>.
template <class B, class F>
auto lincomb_map(F&& f, const LinComb<B>& a) {
  using R = decltype(f(std::declval<const B&>()));
  R out;
  for (const auto& [b, c] : a) out.add_scaled(f(b), c);
  return out;
}

// Bilinear extension of f : B x C -> LinComb<D>.
template <class B, class C, class F>
auto lincomb_bilinear(F&& f, const LinComb<B>& a, const LinComb<C>& b) {
  using R = decltype(f(std::declval<const B&>(), std::declval<const C&>()));
  R out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) out.add_scaled(f(x, y), cx * cy);
  }
  return out;
}

// Pure tensor of two basis elements.
template <class A, class B>
struct Tensor {
  A left;
  B right;

  friend bool operator==(const Tensor& x, const Tensor& y) {
    return x.left == y.left && x.right == y.right;
  }
  friend bool operator<(const Tensor& x, const Tensor& y) {
    if (x.left < y.left) return true;
    if (y.left < x.left) return false;
    return x.right < y.right;
  }
};

template <class A, class B>
struct BasisTraits<Tensor<A, B>> {
  static constexpr std::string_view kSep = "\xE2\x8A\x97";  // U+2297

  static std::string encode(const Tensor<A, B>& t) {
    return BasisTraits<A>::encode(t.left) + std::string(kSep) + BasisTraits<B>::encode(t.right);
  }
  static Tensor<A, B> decode(std::string_view s) {
    // Left encodings never contain the separator, so the first hit splits.
    auto pos = s.find(kSep);
    if (pos == std::string_view::npos) throw MalformedInput("tensor without separator");
    return {BasisTraits<A>::decode(s.substr(0, pos)),
            BasisTraits<B>::decode(s.substr(pos + kSep.size()))};
  }
  static int degree(const Tensor<A, B>& t) {
    return BasisTraits<A>::degree(t.left) + BasisTraits<B>::degree(t.right);
  }
  static std::string latex(const Tensor<A, B>& t) {
    return BasisTraits<A>::latex(t.left) + " \\otimes " + BasisTraits<B>::latex(t.right);
  }
};

template <class A, class B>
LinComb<Tensor<A, B>> tensor(const LinComb<A>& a, const LinComb<B>& b) {
  LinComb<Tensor<A, B>> out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) out.add(Tensor<A, B>{x, y}, cx * cy);
  }
  return out;
}

// (a ⊗ b)(c ⊗ d) = ac ⊗ bd, extended bilinearly.
template <class A, class B, class MulA, class MulB>
LinComb<Tensor<A, B>> tensor_mul(const LinComb<Tensor<A, B>>& x, const LinComb<Tensor<A, B>>& y,
                                 MulA&& mul_a, MulB&& mul_b) {
  LinComb<Tensor<A, B>> out;
  for (const auto& [s, cs] : x) {
    for (const auto& [t, ct] : y) {
      out.add_scaled(tensor(mul_a(s.left, t.left), mul_b(s.right, t.right)), cs * ct);
    }
  }
  return out;
}

template <class A, class B>
LinComb<Tensor<B, A>> tensor_flip(const LinComb<Tensor<A, B>>& x) {
  LinComb<Tensor<B, A>> out;
  for (const auto& [t, c] : x) out.add(Tensor<B, A>{t.right, t.left}, c);
  return out;
}

// Triple tensors are nested on the right: a ⊗ (b ⊗ c).
template <class A, class B, class C>
using Tensor3 = Tensor<A, Tensor<B, C>>;

// (Δ ⊗ id)Δ and (id ⊗ Δ)Δ for a coproduct delta : B -> LinComb<Tensor<B, B>>.
template <class B, class Delta>
LinComb<Tensor3<B, B, B>> coproduct_left_iterate(const LinComb<B>& x, Delta&& delta) {
  LinComb<Tensor3<B, B, B>> out;
  for (const auto& [b, c] : x) {
    for (const auto& [t, ct] : delta(b)) {
      for (const auto& [u, cu] : delta(t.left)) {
        out.add(Tensor3<B, B, B>{u.left, Tensor<B, B>{u.right, t.right}}, c * ct * cu);
      }
    }
  }
  return out;
}

template <class B, class Delta>
LinComb<Tensor3<B, B, B>> coproduct_right_iterate(const LinComb<B>& x, Delta&& delta) {
  LinComb<Tensor3<B, B, B>> out;
  for (const auto& [b, c] : x) {
    for (const auto& [t, ct] : delta(b)) {
      for (const auto& [u, cu] : delta(t.right)) {
        out.add(Tensor3<B, B, B>{t.left, Tensor<B, B>{u.left, u.right}}, c * ct * cu);
      }
    }
  }
  return out;
}

}  // namespace hopfint

#endif  // HOPFINT_LINCOMB_HPP
