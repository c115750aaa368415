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
#ifndef HOPFINT_PERMUTATIONS_HPP
#define HOPFINT_PERMUTATIONS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hopfint/lincomb.hpp"
#include "hopfint/random.hpp"
#include "hopfint/series.hpp"

namespace hopfint::perm {

// One-line notation (σ(1), ..., σ(n)). The empty permutation is the unit.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  // σ(i), 1-based.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& values() const { return values_; }
  Permutation inverse() const;
  // (σ∘τ)(i) = σ(τ(i)).
  Permutation compose(const Permutation& tau) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

}  // namespace hopfint::perm

namespace hopfint {

template <>
struct BasisTraits<perm::Permutation> {
  static std::string encode(const perm::Permutation& p);
  static perm::Permutation decode(std::string_view s);
  static int degree(const perm::Permutation& p) { return p.size(); }
  static std::string latex(const perm::Permutation& p);
};

}  // namespace hopfint

namespace hopfint::perm {

using PermLC = LinComb<Permutation>;
using PermTensor = Tensor<Permutation, Permutation>;

// Subset of [n-1].
struct DescentSet {
  int n = 0;
  std::vector<int> positions;

  static DescentSet make(int n, std::vector<int> positions);
  static DescentSet from_mask(int n, std::uint32_t mask);
  // Bit i-1 set iff i is in the set.
  std::uint32_t mask() const;
  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

DescentSet descent_set(const Permutation& sigma);
std::uint32_t descent_mask(const Permutation& sigma);
Permutation standardize(const std::vector<int>& seq);
std::vector<Permutation> all_permutations(int n);
Permutation random_permutation(int n, Rng& rng);

PermLC mr_product(const Permutation& sigma, const Permutation& beta);
PermLC mr_product(const PermLC& a, const PermLC& b);
PermLC lie_bracket(const PermLC& a, const PermLC& b);

// Left keeps the overall maximum in σ's block, right puts it in β's block.
PermLC half_shuffle_left(const Permutation& sigma, const Permutation& beta);
PermLC half_shuffle_right(const Permutation& sigma, const Permutation& beta);
PermLC half_shuffle_left(const PermLC& a, const PermLC& b);
PermLC half_shuffle_right(const PermLC& a, const PermLC& b);

PermLC insertion_product(const Permutation& alpha, const Permutation& beta);

LinComb<PermTensor> mr_coproduct(const Permutation& sigma);
LinComb<PermTensor> mr_coproduct(const PermLC& x);
// Componentwise product on the tensor square.
LinComb<PermTensor> mr_tensor_product(const LinComb<PermTensor>& x,
                                      const LinComb<PermTensor>& y);

PermLC solomon_D(const DescentSet& a);
PermLC solomon_Deq(const DescentSet& a);
PermLC solomon_D(int n, const std::vector<int>& positions);
PermLC solomon_Deq(int n, const std::vector<int>& positions);
// D_{=S} for every S ⊆ [n-1], indexed by mask.
std::vector<PermLC> descent_classes(int n);

// 1_{i1} * ... * 1_{ik} as an iterated product, checked against D_{{i1, i1+i2, ...}}.
PermLC descent_generator_product(const std::vector<int>& parts);
PermLC descent_generator_closed_form(const std::vector<int>& parts);

// Parts of the composition of n whose partial sums form the set given by mask.
std::vector<int> composition_from_mask(int n, std::uint32_t mask);
std::uint32_t mask_from_composition(const std::vector<int>& parts);

// Coefficients c_S of x = Σ c_S D_{=S} for a homogeneous x of degree n in the
// descent algebra. Throws MalformedInput when x is not constant on descent classes.
std::map<std::uint32_t, Rational> descent_eq_coefficients(const PermLC& x, int n);

struct BchForms {
  PermLC d_form;
  PermLC deq_form;
};
BchForms bch_forms(int n);
PermLC bch_element(int n);

// 1 + Σ_{k=1}^{N} 1_k, graded by degree.
TruncatedSeries<PermLC> descent_unit_series(int cutoff);
PermLC perm_unit();

// Right-nested bracket [w1,[w2,[...,wn]]] on a word covering [n].
struct LieMonomial {
  std::vector<int> word;
  static LieMonomial make(std::vector<int> word);
};

PermLC lie_expand(const LieMonomial& m);
// Coefficients on the basis [σ(1),[...,[σ(n-1),n]]], σ ∈ S_{n-1}; throws NotLie.
std::map<Permutation, Rational> lie_basis_coeffs(const PermLC& x, int n);

}  // namespace hopfint::perm

#endif  // HOPFINT_PERMUTATIONS_HPP
