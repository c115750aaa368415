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
#ifndef HOPFINT_ROTA_BAXTER_HPP
#define HOPFINT_ROTA_BAXTER_HPP

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hopfint/errors.hpp"
#include "hopfint/permutations.hpp"
#include "hopfint/random.hpp"
#include "hopfint/rational.hpp"
#include "hopfint/series.hpp"
#include "hopfint/words.hpp"

namespace Eigen {

template <>
struct NumTraits<hopfint::Rational> : GenericNumTraits<hopfint::Rational> {
  using Real = hopfint::Rational;
  using NonInteger = hopfint::Rational;
  using Nested = hopfint::Rational;
  using Literal = hopfint::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace hopfint::rb {

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

bool is_zero(const Matrix& m);
// Rows as "[[a,b],[c,d]]".
std::string format_matrix(const Matrix& m);
// Entries in [-3, 3].
Matrix random_matrix(int size, Rng& rng);

// ---------------------------------------------------------------------------
// Instances. Each exposes Element, theta(), commutative(), zero(), one(),
// mul(), apply() (the operator R), random() and format(). Elements support
// +, -, Rational * and ==. Constructors validate the Rota-Baxter relation on
// 100 random pairs and throw MalformedInput if it fails.

// n×n rational matrices with R = projection onto the upper triangle
// (diagonal included) or onto the strictly lower triangle; weight 1.
class TriangularProjector {
 public:
  using Element = Matrix;
  enum class Part { kUpper, kStrictlyLower };

  explicit TriangularProjector(int size, Part part = Part::kUpper);

  std::string name() const { return "triangular"; }
  int size() const { return size_; }
  Part part() const { return part_; }
  Rational theta() const { return 1; }
  bool commutative() const { return size_ == 1; }
  Element zero() const { return Matrix::Zero(size_, size_); }
  Element one() const { return Matrix::Identity(size_, size_); }
  Element mul(const Element& a, const Element& b) const { return a.lazyProduct(b); }
  Element apply(const Element& a) const;
  Element random(Rng& rng) const { return random_matrix(size_, rng); }
  std::string format(const Element& a) const { return format_matrix(a); }

 private:
  int size_;
  Part part_;
};

// Length-M sequences (f_1, ..., f_M) of polynomials in letters x1, x2, ...
// A monomial is a word; in the commutative case its letters are sorted.
// Terms of total degree above the cap are dropped, which is a quotient by
// an ideal, so all identities hold exactly.
struct Sequence {
  std::vector<words::WordLC> entries;

  // Missing entries count as zero.
  friend bool operator==(const Sequence& a, const Sequence& b);
  Sequence& operator+=(const Sequence& o);
  Sequence& operator-=(const Sequence& o);
  friend Sequence operator+(Sequence a, const Sequence& b) { return a += b; }
  friend Sequence operator-(Sequence a, const Sequence& b) { return a -= b; }
  friend Sequence operator*(const Rational& c, Sequence a);
};

// R(f)_k = f_1 + ... + f_{k-1}, weight -1.
class SequenceAlgebra {
 public:
  using Element = Sequence;

  static SequenceAlgebra summation(int length, int degree_cap, bool commutative);
  // Noncommutative letters, generated as a Rota-Baxter algebra by x = (x1, ..., xM).
  static SequenceAlgebra free_rb(int length, int degree_cap);

  std::string name() const { return free_ ? "free" : "summation"; }
  int length() const { return length_; }
  int degree_cap() const { return degree_cap_; }
  Rational theta() const { return -1; }
  bool commutative() const { return commutative_; }
  Element zero() const;
  Element one() const;
  Element mul(const Element& a, const Element& b) const;
  Element apply(const Element& a) const;
  Element random(Rng& rng) const;
  std::string format(const Element& a) const;

  // (x1, ..., xM).
  Element generator() const;
  // Single polynomial p in every slot.
  Element constant(const words::WordLC& p) const;

 private:
  SequenceAlgebra(int length, int degree_cap, bool commutative, bool free);
  words::WordLC poly_mul(const words::WordLC& a, const words::WordLC& b) const;

  int length_;
  int degree_cap_;
  bool commutative_;
  bool free_;
};

// Finite Laurent polynomial Σ c_k ε^k.
struct Laurent {
  std::map<int, Rational> coeffs;

  static Laurent monomial(int k, const Rational& c = 1);
  const Rational& coeff(int k) const;
  friend bool operator==(const Laurent&, const Laurent&) = default;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Rational& c, Laurent a);
};

// Laurent polynomials split into pole part ε^{-1}Q[ε^{-1}] and regular part
// Q[ε]; R is one of the two projections, weight 1. Products are exact; the
// window [ε^{-K}, ε^N] bounds sampled elements and is reported by in_window().
class LaurentMinimalSubtraction {
 public:
  using Element = Laurent;
  enum class Projection { kPole, kRegular };

  LaurentMinimalSubtraction(int pole_order, int regular_order,
                            Projection projection = Projection::kPole);

  std::string name() const { return "laurent"; }
  int pole_order() const { return pole_order_; }
  int regular_order() const { return regular_order_; }
  Projection projection() const { return projection_; }
  Rational theta() const { return 1; }
  bool commutative() const { return true; }
  Element zero() const { return Laurent(); }
  Element one() const { return Laurent::monomial(0); }
  Element mul(const Element& a, const Element& b) const;
  Element apply(const Element& a) const;
  Element random(Rng& rng) const;
  std::string format(const Element& a) const;
  bool in_window(const Element& a) const;

 private:
  int pole_order_;
  int regular_order_;
  Projection projection_;
};

// Σ_k A_k t^k with d×d rational coefficients; missing coefficients are zero.
struct MatrixPolynomial {
  std::vector<Matrix> coeffs;

  friend bool operator==(const MatrixPolynomial& a, const MatrixPolynomial& b);
  MatrixPolynomial& operator+=(const MatrixPolynomial& o);
  MatrixPolynomial& operator-=(const MatrixPolynomial& o);
  friend MatrixPolynomial operator+(MatrixPolynomial a, const MatrixPolynomial& b) {
    return a += b;
  }
  friend MatrixPolynomial operator-(MatrixPolynomial a, const MatrixPolynomial& b) {
    return a -= b;
  }
  friend MatrixPolynomial operator*(const Rational& c, MatrixPolynomial a);
};

// R(f)(t) = ∫_0^t f, weight 0. Dimension 1 is the scalar, commutative case.
class PolynomialIntegration {
 public:
  using Element = MatrixPolynomial;

  explicit PolynomialIntegration(int dim = 1);

  std::string name() const { return "integration"; }
  int dim() const { return dim_; }
  Rational theta() const { return 0; }
  bool commutative() const { return dim_ == 1; }
  Element zero() const { return MatrixPolynomial(); }
  Element one() const { return monomial(0, Matrix::Identity(dim_, dim_)); }
  Element mul(const Element& a, const Element& b) const;
  Element apply(const Element& a) const;
  Element random(Rng& rng) const;
  std::string format(const Element& a) const;

  Element monomial(int k, const Matrix& coeff) const;
  // c t^k times the identity.
  Element power(int k, const Rational& c = 1) const;

 private:
  int dim_;
};

template <class I>
concept RotaBaxterInstance = requires(const I& inst, const typename I::Element& x, Rng& rng) {
  { inst.theta() } -> std::convertible_to<Rational>;
  { inst.commutative() } -> std::convertible_to<bool>;
  { inst.zero() } -> std::convertible_to<typename I::Element>;
  { inst.one() } -> std::convertible_to<typename I::Element>;
  { inst.mul(x, x) } -> std::convertible_to<typename I::Element>;
  { inst.apply(x) } -> std::convertible_to<typename I::Element>;
  { inst.random(rng) } -> std::convertible_to<typename I::Element>;
  { inst.format(x) } -> std::convertible_to<std::string>;
};

template <class I>
using Elem = typename I::Element;

// ---------------------------------------------------------------------------
// Elementary maps.

template <class I>
Elem<I> scaled(const Rational& c, const Elem<I>& x) {
  Elem<I> r = c * x;
  return r;
}

// R̃ = θ id - R.
template <RotaBaxterInstance I>
Elem<I> tilde(const I& inst, const Elem<I>& x) {
  Elem<I> r = inst.theta() * x;
  Elem<I> rx = inst.apply(x);
  return r - rx;
}

// B = R - R̃ = 2R - θ id.
template <RotaBaxterInstance I>
Elem<I> modified(const I& inst, const Elem<I>& x) {
  Elem<I> r = Rational(2) * inst.apply(x);
  Elem<I> t = inst.theta() * x;
  return r - t;
}

template <RotaBaxterInstance I>
Elem<I> commutator(const I& inst, const Elem<I>& x, const Elem<I>& y) {
  Elem<I> a = inst.mul(x, y);
  Elem<I> b = inst.mul(y, x);
  return a - b;
}

template <RotaBaxterInstance I>
bool is_zero(const I& inst, const Elem<I>& x) {
  return x == inst.zero();
}

// ---------------------------------------------------------------------------
// Rota-Baxter relation.

// P(x)P(y) - P(P(x)y + xP(y) - θxy) for a map P.
template <RotaBaxterInstance I, class Map>
Elem<I> relation_residual(const I& inst, Map&& p, const Elem<I>& x, const Elem<I>& y) {
  const Elem<I> px = p(x);
  const Elem<I> py = p(y);
  Elem<I> inner = inst.mul(px, y);
  inner = inner + inst.mul(x, py);
  inner = inner - scaled<I>(inst.theta(), inst.mul(x, y));
  Elem<I> lhs = inst.mul(px, py);
  Elem<I> rhs = p(inner);
  return lhs - rhs;
}

template <class E>
struct RbResiduals {
  E relation;     // for R
  E partner;      // for R̃
  E mixed_left;   // R(x)R̃(y) - R(xR̃(y)) - R̃(R(x)y)
  E mixed_right;  // R̃(x)R(y) - R̃(xR(y)) - R(R̃(x)y)
};

template <RotaBaxterInstance I>
RbResiduals<Elem<I>> rb_check(const I& inst, const Elem<I>& x, const Elem<I>& y) {
  auto r = [&](const Elem<I>& v) { return Elem<I>(inst.apply(v)); };
  auto t = [&](const Elem<I>& v) { return tilde(inst, v); };
  RbResiduals<Elem<I>> out{relation_residual(inst, r, x, y), relation_residual(inst, t, x, y),
                           inst.zero(), inst.zero()};
  const Elem<I> rx = r(x), ry = r(y), tx = t(x), ty = t(y);
  out.mixed_left = inst.mul(rx, ty);
  out.mixed_left = out.mixed_left - r(inst.mul(x, ty));
  out.mixed_left = out.mixed_left - t(inst.mul(rx, y));
  out.mixed_right = inst.mul(tx, ry);
  out.mixed_right = out.mixed_right - t(inst.mul(x, ry));
  out.mixed_right = out.mixed_right - r(inst.mul(tx, y));
  return out;
}

template <RotaBaxterInstance I>
bool vanishes(const I& inst, const RbResiduals<Elem<I>>& r) {
  return is_zero(inst, r.relation) && is_zero(inst, r.partner) && is_zero(inst, r.mixed_left) &&
         is_zero(inst, r.mixed_right);
}

template <RotaBaxterInstance I, std::size_t N>
bool vanishes(const I& inst, const std::array<Elem<I>, N>& rs) {
  for (const auto& r : rs) {
    if (!is_zero(inst, r)) return false;
  }
  return true;
}

// Throws MalformedInput unless rb_check vanishes on `samples` random pairs.
template <RotaBaxterInstance I>
void require_rota_baxter(const I& inst, int samples = 100, std::uint64_t seed = 20260101) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const Elem<I> x = inst.random(rng);
    const Elem<I> y = inst.random(rng);
    if (!vanishes(inst, rb_check(inst, x, y))) {
      throw MalformedInput("operator fails the Rota-Baxter relation on " + inst.format(x) +
                           ", " + inst.format(y));
    }
  }
}

// ---------------------------------------------------------------------------
// Derived products.

// x ∗_θ y = R(x)y + xR(y) - θxy.
template <RotaBaxterInstance I>
Elem<I> double_product(const I& inst, const Elem<I>& x, const Elem<I>& y) {
  Elem<I> r = inst.mul(inst.apply(x), y);
  r = r + inst.mul(x, inst.apply(y));
  return r - scaled<I>(inst.theta(), inst.mul(x, y));
}

// (x ∗ y) ∗ z - x ∗ (y ∗ z).
template <RotaBaxterInstance I>
Elem<I> double_associativity(const I& inst, const Elem<I>& x, const Elem<I>& y,
                             const Elem<I>& z) {
  Elem<I> a = double_product(inst, double_product(inst, x, y), z);
  Elem<I> b = double_product(inst, x, double_product(inst, y, z));
  return a - b;
}

// {R(x ∗ y) - R(x)R(y), R̃(x ∗ y) + R̃(x)R̃(y)}.
template <RotaBaxterInstance I>
std::array<Elem<I>, 2> morphism_residuals(const I& inst, const Elem<I>& x, const Elem<I>& y) {
  const Elem<I> s = double_product(inst, x, y);
  Elem<I> a = inst.apply(s);
  a = a - inst.mul(inst.apply(x), inst.apply(y));
  Elem<I> b = tilde(inst, s);
  b = b + inst.mul(tilde(inst, x), tilde(inst, y));
  return {a, b};
}

template <class E>
struct HalfProducts {
  E left;   // x ≺ y = xR(y)
  E right;  // x ≻ y = R(x)y
  E dot;    // x · y = xy
};

template <RotaBaxterInstance I>
HalfProducts<Elem<I>> half_products(const I& inst, const Elem<I>& x, const Elem<I>& y) {
  return {inst.mul(x, inst.apply(y)), inst.mul(inst.apply(x), y), inst.mul(x, y)};
}

// The three shuffle axioms for ≺, ≻ with ∗ = ≺ + ≻, as residuals.
template <class E, class Left, class Right>
std::array<E, 3> shuffle_axioms(Left&& left, Right&& right, const E& a, const E& b, const E& c) {
  const E bc = left(b, c) + right(b, c);
  const E ab = left(a, b) + right(a, b);
  E r1 = left(left(a, b), c);
  r1 = r1 - left(a, bc);
  E r2 = right(a, left(b, c));
  r2 = r2 - left(right(a, b), c);
  E r3 = right(a, right(b, c));
  r3 = r3 - right(ab, c);
  return {r1, r2, r3};
}

// Shuffle axioms for xR(y), R(x)y; they vanish when θ = 0.
template <RotaBaxterInstance I>
std::array<Elem<I>, 3> shuffle_axiom_residuals(const I& inst, const Elem<I>& a, const Elem<I>& b,
                                               const Elem<I>& c) {
  auto left = [&](const Elem<I>& x, const Elem<I>& y) { return half_products(inst, x, y).left; };
  auto right = [&](const Elem<I>& x, const Elem<I>& y) {
    return half_products(inst, x, y).right;
  };
  return shuffle_axioms<Elem<I>>(left, right, a, b, c);
}

// Shuffle axioms for x ≺ y = xR(y) - θxy = -xR̃(y) and x ≻ y = R(x)y, whose
// sum is ∗_θ; they vanish for every weight.
template <RotaBaxterInstance I>
std::array<Elem<I>, 3> link_axiom_residuals(const I& inst, const Elem<I>& a, const Elem<I>& b,
                                            const Elem<I>& c) {
  auto left = [&](const Elem<I>& x, const Elem<I>& y) {
    Elem<I> r = inst.mul(x, tilde(inst, y));
    return scaled<I>(-1, r);
  };
  auto right = [&](const Elem<I>& x, const Elem<I>& y) {
    return Elem<I>(inst.mul(inst.apply(x), y));
  };
  return shuffle_axioms<Elem<I>>(left, right, a, b, c);
}

// The six quasi-shuffle axioms with ∗ = ∗_θ = ≺ + ≻ - θ·, as residuals.
template <RotaBaxterInstance I>
std::array<Elem<I>, 6> quasi_shuffle_axiom_residuals(const I& inst, const Elem<I>& a,
                                                     const Elem<I>& b, const Elem<I>& c) {
  auto left = [&](const Elem<I>& x, const Elem<I>& y) { return half_products(inst, x, y).left; };
  auto right = [&](const Elem<I>& x, const Elem<I>& y) {
    return half_products(inst, x, y).right;
  };
  auto dot = [&](const Elem<I>& x, const Elem<I>& y) { return Elem<I>(inst.mul(x, y)); };
  auto star = [&](const Elem<I>& x, const Elem<I>& y) { return double_product(inst, x, y); };
  std::array<Elem<I>, 6> r{
      left(left(a, b), c) - left(a, star(b, c)),  dot(right(a, b), c) - right(a, dot(b, c)),
      right(a, right(b, c)) - right(star(a, b), c), dot(left(a, b), c) - dot(a, right(b, c)),
      left(right(a, b), c) - right(a, left(b, c)), left(dot(a, b), c) - dot(a, left(b, c))};
  return r;
}

// x •_θ y = R(x)y + yR̃(x).
template <RotaBaxterInstance I>
Elem<I> prelie_product(const I& inst, const Elem<I>& x, const Elem<I>& y) {
  Elem<I> r = inst.mul(inst.apply(x), y);
  return r + inst.mul(y, tilde(inst, x));
}

// (x▷y)▷z - x▷(y▷z) - (y▷x)▷z + y▷(x▷z).
template <class E, class P>
E prelie_identity_residual(P&& p, const E& x, const E& y, const E& z) {
  E r = p(p(x, y), z);
  r = r - p(x, p(y, z));
  r = r - p(p(y, x), z);
  return r + p(y, p(x, z));
}

template <RotaBaxterInstance I>
Elem<I> prelie_residual(const I& inst, const Elem<I>& x, const Elem<I>& y, const Elem<I>& z) {
  auto p = [&](const Elem<I>& a, const Elem<I>& b) { return prelie_product(inst, a, b); };
  return prelie_identity_residual<Elem<I>>(p, x, y, z);
}

template <class E>
struct PostLieProducts {
  E triangle;        // x ▷ y = [R(x), y]
  E bracket;         // [x, y]^θ = -θ[x, y]
  E double_bracket;  // [R(x), y] + [x, R(y)] - θ[x, y]
};

template <RotaBaxterInstance I>
Elem<I> triangle(const I& inst, const Elem<I>& x, const Elem<I>& y) {
  return commutator(inst, inst.apply(x), y);
}

template <RotaBaxterInstance I>
Elem<I> theta_bracket(const I& inst, const Elem<I>& x, const Elem<I>& y) {
  return scaled<I>(-inst.theta(), commutator(inst, x, y));
}

template <RotaBaxterInstance I>
Elem<I> double_bracket(const I& inst, const Elem<I>& x, const Elem<I>& y) {
  Elem<I> r = commutator(inst, inst.apply(x), y);
  r = r + commutator(inst, x, inst.apply(y));
  return r - scaled<I>(inst.theta(), commutator(inst, x, y));
}

template <RotaBaxterInstance I>
PostLieProducts<Elem<I>> postlie_products(const I& inst, const Elem<I>& x, const Elem<I>& y) {
  return {triangle(inst, x, y), theta_bracket(inst, x, y), double_bracket(inst, x, y)};
}

// Both post-Lie axioms for ▷ over the bracket [-,-]^θ, as residuals.
template <RotaBaxterInstance I>
std::array<Elem<I>, 2> postlie_axiom_residuals(const I& inst, const Elem<I>& x, const Elem<I>& y,
                                               const Elem<I>& z) {
  auto tr = [&](const Elem<I>& a, const Elem<I>& b) { return triangle(inst, a, b); };
  auto br = [&](const Elem<I>& a, const Elem<I>& b) { return theta_bracket(inst, a, b); };
  Elem<I> r1 = tr(x, br(y, z));
  r1 = r1 - br(tr(x, y), z);
  r1 = r1 - br(y, tr(x, z));
  Elem<I> r2 = tr(br(x, y), z);
  r2 = r2 - tr(x, tr(y, z));
  r2 = r2 + tr(tr(x, y), z);
  r2 = r2 + tr(y, tr(x, z));
  r2 = r2 - tr(tr(y, x), z);
  return {r1, r2};
}

// Cyclic sum of [[x, y], z] for the bracket B.
template <class E, class Bracket>
E jacobi_residual(Bracket&& b, const E& x, const E& y, const E& z) {
  E r = b(b(x, y), z);
  r = r + b(b(y, z), x);
  return r + b(b(z, x), y);
}

template <RotaBaxterInstance I>
Elem<I> double_bracket_jacobi(const I& inst, const Elem<I>& x, const Elem<I>& y,
                              const Elem<I>& z) {
  auto b = [&](const Elem<I>& a, const Elem<I>& c) { return double_bracket(inst, a, c); };
  return jacobi_residual<Elem<I>>(b, x, y, z);
}

// R(⟦x, y⟧_θ) - [R(x), R(y)].
template <RotaBaxterInstance I>
Elem<I> double_bracket_morphism(const I& inst, const Elem<I>& x, const Elem<I>& y) {
  Elem<I> r = inst.apply(double_bracket(inst, x, y));
  return r - commutator(inst, inst.apply(x), inst.apply(y));
}

template <class E>
struct ModifiedResiduals {
  E associative;     // B(x)B(y) - B(B(x)y + xB(y)) + θ²xy
  E lie;             // the same with commutators
  E star_split;      // x ∗_θ y - ½(B(x)y + xB(y))
  E bracket_split;   // ⟦x, y⟧_θ - ½([B(x), y] + [x, B(y)])
};

template <RotaBaxterInstance I>
ModifiedResiduals<Elem<I>> modified_map_checks(const I& inst, const Elem<I>& x,
                                               const Elem<I>& y) {
  const Elem<I> bx = modified(inst, x);
  const Elem<I> by = modified(inst, y);
  const Rational t2 = inst.theta() * inst.theta();
  Elem<I> assoc = inst.mul(bx, by);
  Elem<I> inner = inst.mul(bx, y);
  inner = inner + inst.mul(x, by);
  assoc = assoc - modified(inst, inner);
  assoc = assoc + scaled<I>(t2, inst.mul(x, y));
  Elem<I> lie = commutator(inst, bx, by);
  Elem<I> linner = commutator(inst, bx, y);
  linner = linner + commutator(inst, x, by);
  lie = lie - modified(inst, linner);
  lie = lie + scaled<I>(t2, commutator(inst, x, y));
  Elem<I> star = double_product(inst, x, y);
  star = star - scaled<I>(Rational(1, 2), inner);
  Elem<I> brk = double_bracket(inst, x, y);
  brk = brk - scaled<I>(Rational(1, 2), linner);
  return {assoc, lie, star, brk};
}

template <RotaBaxterInstance I>
bool vanishes(const I& inst, const ModifiedResiduals<Elem<I>>& r) {
  return is_zero(inst, r.associative) && is_zero(inst, r.lie) && is_zero(inst, r.star_split) &&
         is_zero(inst, r.bracket_split);
}

// ---------------------------------------------------------------------------
// Series in λ over an instance.

template <class I>
using Series = TruncatedSeries<Elem<I>>;

template <RotaBaxterInstance I>
Series<I> series_product(const I& inst, const Series<I>& a, const Series<I>& b) {
  return series_mul(a, b, [&](const Elem<I>& u, const Elem<I>& v) {
    return Elem<I>(inst.mul(u, v));
  });
}

template <RotaBaxterInstance I, class Map>
Series<I> series_map(const Series<I>& s, Map&& f) {
  Series<I> r(s.cutoff(), s.zero());
  for (int d = 0; d <= s.cutoff(); ++d) r[d] = f(s[d]);
  return r;
}

// λx truncated at λ^N.
template <RotaBaxterInstance I>
Series<I> lambda_series(const I& inst, const Elem<I>& x, int cutoff) {
  if (cutoff < 1) throw MalformedInput("series cutoff must be at least 1");
  Series<I> s(cutoff, inst.zero());
  s[1] = x;
  return s;
}

template <RotaBaxterInstance I>
Series<I> series_one(const I& inst, int cutoff) {
  return series_constant(cutoff, inst.zero(), inst.one());
}

template <RotaBaxterInstance I>
bool vanishes(const I& inst, const Series<I>& s) {
  for (int d = 0; d <= s.cutoff(); ++d) {
    if (!is_zero(inst, s[d])) return false;
  }
  return true;
}

template <RotaBaxterInstance I>
Series<I> series_exp_in(const I& inst, const Series<I>& s) {
  return series_exp(s, [&](const Elem<I>& u, const Elem<I>& v) { return Elem<I>(inst.mul(u, v)); },
                    inst.one());
}

template <RotaBaxterInstance I>
Series<I> series_log_in(const I& inst, const Series<I>& s) {
  return series_log(s, [&](const Elem<I>& u, const Elem<I>& v) { return Elem<I>(inst.mul(u, v)); },
                    inst.one());
}

// ---------------------------------------------------------------------------
// Atkinson factorisation.

template <class E>
struct AtkinsonSolution {
  TruncatedSeries<E> left;           // ℓ = 1 + λR(ℓx)
  TruncatedSeries<E> right;          // r = 1 + λR̃(xr)
  TruncatedSeries<E> left_inverse;   // 1 - λR(xr)
  TruncatedSeries<E> right_inverse;  // 1 - λR̃(ℓx)
};

template <RotaBaxterInstance I>
AtkinsonSolution<Elem<I>> atkinson_solve(const I& inst, const Elem<I>& x, int cutoff) {
  if (cutoff < 1) throw MalformedInput("series cutoff must be at least 1");
  AtkinsonSolution<Elem<I>> s{series_one(inst, cutoff), series_one(inst, cutoff),
                              series_one(inst, cutoff), series_one(inst, cutoff)};
  for (int n = 1; n <= cutoff; ++n) {
    const Elem<I> lx = inst.mul(s.left[n - 1], x);
    const Elem<I> xr = inst.mul(x, s.right[n - 1]);
    s.left[n] = inst.apply(lx);
    s.right[n] = tilde(inst, xr);
    s.left_inverse[n] = scaled<I>(-1, inst.apply(xr));
    s.right_inverse[n] = scaled<I>(-1, tilde(inst, lx));
  }
  return s;
}

template <class E>
struct AtkinsonResiduals {
  TruncatedSeries<E> factorization;  // ℓ⁻¹ r⁻¹ - (1 - λθx)
  TruncatedSeries<E> left;           // ℓ ℓ⁻¹ - 1
  TruncatedSeries<E> right;          // r r⁻¹ - 1
};

template <RotaBaxterInstance I>
AtkinsonResiduals<Elem<I>> atkinson_residuals(const I& inst, const AtkinsonSolution<Elem<I>>& s,
                                              const Elem<I>& x) {
  const int n = s.left.cutoff();
  Series<I> target = series_one(inst, n);
  target[1] = target[1] - scaled<I>(inst.theta(), x);
  return {series_product(inst, s.left_inverse, s.right_inverse) - target,
          series_product(inst, s.left, s.left_inverse) - series_one(inst, n),
          series_product(inst, s.right, s.right_inverse) - series_one(inst, n)};
}

template <RotaBaxterInstance I>
bool vanishes(const I& inst, const AtkinsonResiduals<Elem<I>>& r) {
  return vanishes(inst, r.factorization) && vanishes(inst, r.left) && vanishes(inst, r.right);
}

// ---------------------------------------------------------------------------
// Bogoliubov recursion.

template <class E>
struct BogoliubovSolution {
  TruncatedSeries<E> f;          // counterterm series, f_0 = 1
  TruncatedSeries<E> h_inverse;  // h⁻¹, constant term 1
};

// Needs θ = 1, R(1) = 0, R∘R = R (checked on the inputs and on random
// samples) and x_0 = 0. Otherwise throws UnsupportedInstance or MalformedInput.
template <RotaBaxterInstance I>
BogoliubovSolution<Elem<I>> bogoliubov(const I& inst, const Series<I>& x) {
  if (!(inst.theta() == Rational(1))) throw UnsupportedInstance("Bogoliubov recursion needs weight 1");
  if (!is_zero(inst, inst.apply(inst.one()))) {
    throw UnsupportedInstance("Bogoliubov recursion needs R(1) = 0");
  }
  if (!is_zero(inst, x[0])) throw MalformedInput("graded input must have no degree-0 part");
  auto idempotent_on = [&](const Elem<I>& v) {
    const Elem<I> rv = inst.apply(v);
    return inst.apply(rv) == rv;
  };
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    if (!idempotent_on(inst.random(rng))) {
      throw UnsupportedInstance("Bogoliubov recursion needs an idempotent operator");
    }
  }
  for (int d = 0; d <= x.cutoff(); ++d) {
    if (!idempotent_on(x[d])) {
      throw UnsupportedInstance("Bogoliubov recursion needs an idempotent operator");
    }
  }
  const int n = x.cutoff();
  BogoliubovSolution<Elem<I>> s{series_one(inst, n), series_one(inst, n)};
  for (int k = 1; k <= n; ++k) {
    Elem<I> arg = x[k];
    for (int i = 1; i < k; ++i) arg = arg + inst.mul(s.f[i], x[k - i]);
    s.f[k] = inst.apply(arg);
    s.h_inverse[k] = scaled<I>(-1, tilde(inst, arg));
  }
  return s;
}

// f(1 - x) - h⁻¹.
template <RotaBaxterInstance I>
Series<I> bogoliubov_residual(const I& inst, const BogoliubovSolution<Elem<I>>& s,
                              const Series<I>& x) {
  Series<I> one_minus_x = series_one(inst, x.cutoff()) - x;
  return series_product(inst, s.f, one_minus_x) - s.h_inverse;
}

// ---------------------------------------------------------------------------
// Spitzer and the pre-Lie Magnus expansion.

// Σ_{n≤N} θ^{n-1} (λx)^n / n = -θ⁻¹ log(1 - θλx).
template <RotaBaxterInstance I>
Series<I> spitzer_omega(const I& inst, const Elem<I>& x, int cutoff) {
  Series<I> s(cutoff, inst.zero());
  Elem<I> power = inst.one();
  for (int n = 1; n <= cutoff; ++n) {
    power = inst.mul(power, x);
    s[n] = scaled<I>(pow(inst.theta(), n - 1) / Rational(n), power);
  }
  return s;
}

// log(1 + Σ R^{(m)}(λx)) - R(Σ θ^{n-1}(λx)^n / n). Commutative instances only.
template <RotaBaxterInstance I>
Series<I> spitzer_residual(const I& inst, const Elem<I>& x, int cutoff) {
  if (!inst.commutative()) throw UnsupportedInstance("Spitzer identity needs a commutative instance");
  Series<I> lhs = atkinson_solve(inst, x, cutoff).left;
  Series<I> rhs = series_map<I>(spitzer_omega(inst, x, cutoff),
                                [&](const Elem<I>& v) { return Elem<I>(inst.apply(v)); });
  return series_log_in(inst, lhs) - rhs;
}

// Solves Ω = λx + Σ_{n>0} (B_n/n!) L^n(λx), L(y) = (-Ω) ▷ y, for any
// pre-Lie product ▷, one degree at a time.
template <class V, class PreLie>
TruncatedSeries<V> prelie_magnus_series(const V& x, const V& zero, PreLie&& pl, int cutoff) {
  if (cutoff < 1) throw MalformedInput("series cutoff must be at least 1");
  TruncatedSeries<V> omega(cutoff, zero);
  omega[1] = x;
  for (int k = 2; k <= cutoff; ++k) {
    // Components of degree < k suffice: each application of L raises degree.
    TruncatedSeries<V> power(k, zero);
    power[1] = x;
    V next = zero;
    for (int n = 1; n < k; ++n) {
      TruncatedSeries<V> applied(k, zero);
      for (int i = 1; i < k; ++i) {
        if (omega[i] == zero) continue;
        for (int j = 1; i + j <= k; ++j) {
          if (power[j] == zero) continue;
          V term = pl(omega[i], power[j]);
          applied[i + j] = applied[i + j] - term;
        }
      }
      power = applied;
      V scaled_term = (bernoulli(n) / factorial(n)) * power[k];
      next = next + scaled_term;
    }
    omega[k] = next;
  }
  return omega;
}

template <RotaBaxterInstance I>
Series<I> prelie_magnus(const I& inst, const Elem<I>& x, int cutoff) {
  return prelie_magnus_series(
      x, inst.zero(), [&](const Elem<I>& a, const Elem<I>& b) { return prelie_product(inst, a, b); },
      cutoff);
}

// exp(R(Ω'(λx))) - ℓ, with ℓ the Atkinson left series.
template <RotaBaxterInstance I>
Series<I> prelie_magnus_residual(const I& inst, const Elem<I>& x, int cutoff) {
  Series<I> omega = prelie_magnus(inst, x, cutoff);
  Series<I> r_omega =
      series_map<I>(omega, [&](const Elem<I>& v) { return Elem<I>(inst.apply(v)); });
  return series_exp_in(inst, r_omega) - atkinson_solve(inst, x, cutoff).left;
}

// ---------------------------------------------------------------------------
// Bohnenblust-Spitzer.

// Cycles (a_0 a_1 ... a_{m-1}) with σ(a_i) = a_{i+1}.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  // Every cycle starts with its maximum, first entries increase, entries cover [n].
  bool is_canonical() const;
  perm::Permutation to_permutation() const;
  // "(32)(541)" when every entry is a single digit, "(3,2)(5,4,1)" otherwise.
  std::string str() const;
  // Accepts both forms of str().
  static CycleDecomposition parse(std::string_view text);
  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

CycleDecomposition canonical_cycles(const perm::Permutation& sigma);

// Set partitions of [n], blocks in increasing order of minima.
std::vector<std::vector<std::vector<int>>> set_partitions(int n);

inline constexpr int kBohnenblustMax = 7;

// ∗_θ-product over the cycles (a_0 ... a_{m-1}) of ((F_a0 • F_a1) • ...) • F_a(m-1).
template <RotaBaxterInstance I>
Elem<I> bohnenblust_term(const I& inst, const std::vector<Elem<I>>& fs,
                         const CycleDecomposition& sigma) {
  Elem<I> term = inst.zero();
  bool first = true;
  for (const auto& cycle : sigma.cycles) {
    Elem<I> c = fs.at(static_cast<std::size_t>(cycle[0] - 1));
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      c = prelie_product(inst, c, fs.at(static_cast<std::size_t>(cycle[i] - 1)));
    }
    term = first ? c : double_product(inst, term, c);
    first = false;
  }
  return term;
}

template <class E>
struct BohnenblustSpitzer {
  E lhs;                         // Σ_σ R(...R(R(F_σ1)F_σ2)...)F_σn
  E rhs;                         // Σ_σ ∗_θ over cycles of ((F_a0 • F_a1) • ...) • F_a(m-1)
  std::optional<E> partitions;   // commutative set-partition form
};

template <RotaBaxterInstance I>
BohnenblustSpitzer<Elem<I>> bohnenblust_spitzer(const I& inst, const std::vector<Elem<I>>& fs) {
  const int n = static_cast<int>(fs.size());
  if (n < 1) throw MalformedInput("Bohnenblust-Spitzer needs at least one element");
  if (n > kBohnenblustMax) {
    throw CutoffExceeded("Bohnenblust-Spitzer supports n <= " + std::to_string(kBohnenblustMax));
  }
  auto f = [&](int i) -> const Elem<I>& { return fs[static_cast<std::size_t>(i - 1)]; };
  BohnenblustSpitzer<Elem<I>> out{inst.zero(), inst.zero(), std::nullopt};

  // Depth-first over prefixes, sharing R(...)F partial products.
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto extend = [&](auto&& self, const Elem<I>& acc, int depth) -> void {
    if (depth == n) {
      out.lhs = out.lhs + acc;
      return;
    }
    const Elem<I> racc = inst.apply(acc);
    for (int j = 1; j <= n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      self(self, Elem<I>(inst.mul(racc, f(j))), depth + 1);
      used[static_cast<std::size_t>(j)] = false;
    }
  };
  for (int j = 1; j <= n; ++j) {
    used[static_cast<std::size_t>(j)] = true;
    extend(extend, f(j), 1);
    used[static_cast<std::size_t>(j)] = false;
  }

  for (const auto& sigma : perm::all_permutations(n)) {
    out.rhs = out.rhs + bohnenblust_term(inst, fs, canonical_cycles(sigma));
  }

  if (inst.commutative()) {
    Elem<I> sum = inst.zero();
    for (const auto& blocks : set_partitions(n)) {
      Elem<I> term = inst.zero();
      bool first = true;
      for (const auto& block : blocks) {
        Elem<I> prod = f(block[0]);
        for (std::size_t i = 1; i < block.size(); ++i) prod = inst.mul(prod, f(block[i]));
        const int b = static_cast<int>(block.size());
        prod = scaled<I>(pow(inst.theta(), b - 1) * factorial(b - 1), prod);
        term = first ? prod : double_product(inst, term, prod);
        first = false;
      }
      sum = sum + term;
    }
    out.partitions = sum;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Words over the instance and time-ordered products.

// R(w_1 R(w_2 ... R(w_k))); the empty word maps to 1.
template <RotaBaxterInstance I>
Elem<I> iterated_integral(const I& inst, const std::vector<Elem<I>>& letters) {
  if (letters.empty()) return inst.one();
  Elem<I> acc = inst.apply(letters.back());
  for (std::size_t i = letters.size() - 1; i-- > 0;) acc = inst.apply(inst.mul(letters[i], acc));
  return acc;
}

// {w_1, ..., w_n} v for a pre-Lie product ▷, by the inductive definition.
template <class E, class PreLie>
E brace(const std::vector<E>& ws, const E& v, PreLie&& pl) {
  if (ws.empty()) return v;
  if (ws.size() == 1) return pl(ws[0], v);
  const E& last = ws.back();
  std::vector<E> head(ws.begin(), ws.end() - 1);
  E r = pl(last, brace(head, v, pl));
  for (std::size_t i = 0; i < head.size(); ++i) {
    std::vector<E> changed = head;
    changed[i] = pl(last, head[i]);
    r = r - brace(changed, v, pl);
  }
  return r;
}

// T[v_1, ..., v_n] = Σ_σ v_σ1 ≺ (v_σ2 ≺ (... ≺ v_σn)), x ≺ y = xR(y).
template <RotaBaxterInstance I>
Elem<I> time_ordered(const I& inst, const std::vector<Elem<I>>& vs) {
  if (vs.empty()) throw MalformedInput("time-ordered product of nothing");
  const int n = static_cast<int>(vs.size());
  Elem<I> sum = inst.zero();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  do {
    Elem<I> acc = vs[static_cast<std::size_t>(order.back())];
    for (int i = n - 2; i >= 0; --i) {
      acc = inst.mul(vs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])],
                     inst.apply(acc));
    }
    sum = sum + acc;
  } while (std::next_permutation(order.begin(), order.end()));
  return sum;
}

// Image of the monomial v_1 ⋯ v_n of the enveloping algebra (k[V], ∗) in
// (V, ∗_0), from w_1⋯w_m v = (w_1⋯w_m) ∗ v - Σ_{S≠∅} w_{S^c} ({w_S} v).
// Weight 0 only.
template <RotaBaxterInstance I>
Elem<I> iota(const I& inst, const std::vector<Elem<I>>& vs) {
  if (!(inst.theta() == Rational(0))) throw UnsupportedInstance("iota needs a weight-0 instance");
  if (vs.empty()) throw MalformedInput("iota is defined on the augmentation ideal");
  if (vs.size() == 1) return vs[0];
  auto pl = [&](const Elem<I>& a, const Elem<I>& b) { return prelie_product(inst, a, b); };
  const std::vector<Elem<I>> ws(vs.begin(), vs.end() - 1);
  const Elem<I>& v = vs.back();
  Elem<I> r = double_product(inst, iota(inst, ws), v);
  const std::uint32_t m = static_cast<std::uint32_t>(ws.size());
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<Elem<I>> chosen, rest;
    for (std::uint32_t i = 0; i < m; ++i) ((mask >> i) & 1u ? chosen : rest).push_back(ws[i]);
    rest.push_back(brace(chosen, v, pl));
    r = r - iota(inst, rest);
  }
  return r;
}

template <RotaBaxterInstance I>
Elem<I> iota_time_ordered_residual(const I& inst, const std::vector<Elem<I>>& vs) {
  Elem<I> r = iota(inst, vs);
  return r - time_ordered(inst, vs);
}

// ---------------------------------------------------------------------------
// Free Rota-Baxter algebra on one generator.

struct FreeGenerators {
  Sequence elementary;  // R^{(n)}(x)
  Sequence power_sum;   // R(x^n)
};

// Throws CutoffExceeded unless 1 <= n <= min(M, N).
FreeGenerators free_rb_generators(const SequenceAlgebra& alg, int n);

// R^{(n)}(x) = R(R^{(n-1)}(x) x), R^{(0)}(x) = 1.
Sequence iterated_generator(const SequenceAlgebra& alg, int n);

// R^{(c_1)}(x) ⋯ R^{(c_k)}(x).
Sequence spitzer_monomial(const SequenceAlgebra& alg, const std::vector<int>& composition);

// Δ(R^{(c_1)} ⋯ R^{(c_k)}) with Δ R^{(n)} = Σ_i R^{(i)} ⊗ R^{(n-i)}, as
// pairs of compositions with multiplicity (zero parts dropped).
std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> spitzer_coproduct(
    const std::vector<int>& composition);

// A sequence as one linear combination over (slot, monomial) pairs.
using SlotWord = std::pair<int, words::Word>;
LinComb<SlotWord> flatten(const Sequence& s);

struct SpitzerDescentCheck {
  int degree = 0;
  int compositions = 0;     // 2^{n-1}
  int descent_rank = 0;     // rank of the 1_c in the permutation algebra
  int spitzer_rank = 0;     // rank of the R^{(c)}(x) in the free algebra
  bool coproduct_matches = false;  // Δ_MR(1_c) equals the image of Δ(R^{(c)})
};

// Compares the descent algebra and the Spitzer subalgebra in degree n.
SpitzerDescentCheck spitzer_descent_check(const SequenceAlgebra& alg, int n);

}  // namespace hopfint::rb

#endif  // HOPFINT_ROTA_BAXTER_HPP
