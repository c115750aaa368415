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
#include "hopfint/permutations.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "text_util.hpp"

namespace hopfint {

std::string BasisTraits<perm::Permutation>::encode(const perm::Permutation& p) {
  return "(" + detail::join_ints(p.values()) + ")";
}

perm::Permutation BasisTraits<perm::Permutation>::decode(std::string_view s) {
  std::vector<int> values;
  for (auto part : detail::split_top_level(detail::strip_brackets(s, '(', ')'), ',')) {
    values.push_back(detail::parse_int(part));
  }
  return perm::Permutation(std::move(values));
}

// Digits run together, "(312)", unless some value needs two digits.
std::string BasisTraits<perm::Permutation>::latex(const perm::Permutation& p) {
  if (p.size() >= 10) return "(" + detail::join_ints(p.values()) + ")";
  std::string s = "(";
  for (int v : p.values()) s += static_cast<char>('0' + v);
  return s + ")";
}

}  // namespace hopfint

namespace hopfint::perm {

namespace {

constexpr int kMaxDegree = 31;

// Places σ on the value set `chosen` and β on its complement.
Permutation merge_blocks(const Permutation& sigma, const Permutation& beta,
                         const std::vector<char>& chosen) {
  std::vector<int> in, out;
  for (std::size_t v = 0; v < chosen.size(); ++v) {
    (chosen[v] ? in : out).push_back(static_cast<int>(v) + 1);
  }
  std::vector<int> gamma;
  gamma.reserve(chosen.size());
  for (int x : sigma.values()) gamma.push_back(in[static_cast<std::size_t>(x - 1)]);
  for (int x : beta.values()) gamma.push_back(out[static_cast<std::size_t>(x - 1)]);
  return Permutation(std::move(gamma));
}

void require_nonempty(const Permutation& a, const Permutation& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw MalformedInput("half-shuffles are not defined on the empty permutation");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n > kMaxDegree) throw MalformedInput("permutation too long");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw MalformedInput("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& tau) const {
  if (tau.size() != size()) throw MalformedInput("composing permutations of different size");
  std::vector<int> out;
  out.reserve(values_.size());
  for (int t : tau.values_) out.push_back((*this)(t));
  return Permutation(std::move(out));
}

DescentSet DescentSet::make(int n, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw MalformedInput("repeated descent position");
  }
  for (int p : positions) {
    if (p < 1 || p > n - 1) {
      throw MalformedInput("descent position " + std::to_string(p) + " not in [" +
                           std::to_string(n - 1) + "]");
    }
  }
  return DescentSet{n, std::move(positions)};
}

DescentSet DescentSet::from_mask(int n, std::uint32_t mask) {
  std::vector<int> pos;
  for (int i = 1; i < n; ++i) {
    if (mask & (1u << (i - 1))) pos.push_back(i);
  }
  if (n >= 1 && (mask >> (n - 1)) != 0) throw MalformedInput("mask outside [n-1]");
  return DescentSet{n, std::move(pos)};
}

std::uint32_t DescentSet::mask() const {
  std::uint32_t m = 0;
  for (int p : positions) m |= 1u << (p - 1);
  return m;
}

std::uint32_t descent_mask(const Permutation& sigma) {
  std::uint32_t m = 0;
  for (int i = 1; i < sigma.size(); ++i) {
    if (sigma(i) > sigma(i + 1)) m |= 1u << (i - 1);
  }
  return m;
}

DescentSet descent_set(const Permutation& sigma) {
  return DescentSet::from_mask(sigma.size(), descent_mask(sigma));
}

Permutation standardize(const std::vector<int>& seq) {
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw MalformedInput("standardize needs distinct entries");
  }
  std::vector<int> out;
  out.reserve(seq.size());
  for (int v : seq) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                   sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
  }
  return Permutation(std::move(v));
}

PermLC mr_product(const Permutation& sigma, const Permutation& beta) {
  const int n = sigma.size(), m = beta.size();
  PermLC out;
  detail::for_each_subset(n + m, n, [&](const std::vector<char>& chosen) {
    out.add(merge_blocks(sigma, beta, chosen), 1);
  });
  return out;
}

PermLC mr_product(const PermLC& a, const PermLC& b) {
  return lincomb_bilinear([](const Permutation& x, const Permutation& y) { return mr_product(x, y); },
                          a, b);
}

PermLC lie_bracket(const PermLC& a, const PermLC& b) { return mr_product(a, b) - mr_product(b, a); }

PermLC half_shuffle_left(const Permutation& sigma, const Permutation& beta) {
  require_nonempty(sigma, beta);
  const int n = sigma.size(), m = beta.size();
  PermLC out;
  detail::for_each_subset(n + m, n, [&](const std::vector<char>& chosen) {
    if (chosen.back()) out.add(merge_blocks(sigma, beta, chosen), 1);
  });
  return out;
}

PermLC half_shuffle_right(const Permutation& sigma, const Permutation& beta) {
  require_nonempty(sigma, beta);
  const int n = sigma.size(), m = beta.size();
  PermLC out;
  detail::for_each_subset(n + m, n, [&](const std::vector<char>& chosen) {
    if (!chosen.back()) out.add(merge_blocks(sigma, beta, chosen), 1);
  });
  return out;
}

PermLC half_shuffle_left(const PermLC& a, const PermLC& b) {
  return lincomb_bilinear(
      [](const Permutation& x, const Permutation& y) { return half_shuffle_left(x, y); }, a, b);
}

PermLC half_shuffle_right(const PermLC& a, const PermLC& b) {
  return lincomb_bilinear(
      [](const Permutation& x, const Permutation& y) { return half_shuffle_right(x, y); }, a, b);
}

PermLC insertion_product(const Permutation& alpha, const Permutation& beta) {
  const int n = alpha.size(), m = beta.size();
  const int mid = n + 1;
  PermLC out;
  detail::for_each_subset(n + m, n, [&](const std::vector<char>& chosen) {
    // chosen indexes the values [n+m+1] \ {n+1} in increasing order.
    std::vector<int> in, rest;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      int v = static_cast<int>(i) + 1;
      if (v >= mid) ++v;
      (chosen[i] ? in : rest).push_back(v);
    }
    std::vector<int> gamma;
    for (int x : alpha.values()) gamma.push_back(in[static_cast<std::size_t>(x - 1)]);
    gamma.push_back(mid);
    for (int x : beta.values()) gamma.push_back(rest[static_cast<std::size_t>(x - 1)]);
    out.add(Permutation(std::move(gamma)), 1);
  });
  return out;
}

LinComb<PermTensor> mr_coproduct(const Permutation& sigma) {
  LinComb<PermTensor> out;
  const int n = sigma.size();
  for (int i = 0; i <= n; ++i) {
    std::vector<int> low, high;
    for (int v : sigma.values()) (v <= i ? low : high).push_back(v);
    out.add(PermTensor{Permutation(std::move(low)), standardize(high)}, 1);
  }
  return out;
}

LinComb<PermTensor> mr_coproduct(const PermLC& x) {
  return lincomb_map([](const Permutation& p) { return mr_coproduct(p); }, x);
}

LinComb<PermTensor> mr_tensor_product(const LinComb<PermTensor>& x,
                                      const LinComb<PermTensor>& y) {
  auto mul = [](const Permutation& a, const Permutation& b) { return mr_product(a, b); };
  return tensor_mul(x, y, mul, mul);
}

std::vector<PermLC> descent_classes(int n) {
  if (n < 0) throw MalformedInput("negative degree");
  const std::size_t count = n == 0 ? 1 : (std::size_t{1} << (n - 1));
  std::vector<PermLC> classes(count);
  for (auto& p : all_permutations(n)) {
    const std::uint32_t m = descent_mask(p);
    classes[m].add(std::move(p), 1);
  }
  return classes;
}

PermLC solomon_Deq(const DescentSet& a) {
  DescentSet checked = DescentSet::make(a.n, a.positions);
  PermLC out;
  const std::uint32_t target = checked.mask();
  for (auto& p : all_permutations(a.n)) {
    if (descent_mask(p) == target) out.add(std::move(p), 1);
  }
  return out;
}

PermLC solomon_D(const DescentSet& a) {
  DescentSet checked = DescentSet::make(a.n, a.positions);
  PermLC out;
  const std::uint32_t allowed = checked.mask();
  for (auto& p : all_permutations(a.n)) {
    if ((descent_mask(p) & ~allowed) == 0) out.add(std::move(p), 1);
  }
  return out;
}

PermLC solomon_D(int n, const std::vector<int>& positions) {
  return solomon_D(DescentSet::make(n, positions));
}

PermLC solomon_Deq(int n, const std::vector<int>& positions) {
  return solomon_Deq(DescentSet::make(n, positions));
}

PermLC descent_generator_closed_form(const std::vector<int>& parts) {
  if (parts.empty()) throw MalformedInput("need at least one part");
  std::vector<int> partial;
  int total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw MalformedInput("parts must be positive");
    total += parts[i];
    if (i + 1 < parts.size()) partial.push_back(total);
  }
  return solomon_D(total, partial);
}

PermLC descent_generator_product(const std::vector<int>& parts) {
  if (parts.empty()) throw MalformedInput("need at least one part");
  PermLC acc(Permutation::identity(parts.front()));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = mr_product(acc, PermLC(Permutation::identity(parts[i])));
  }
  if (!(acc == descent_generator_closed_form(parts))) {
    throw std::logic_error("descent generator product disagrees with its closed form");
  }
  return acc;
}

std::vector<int> composition_from_mask(int n, std::uint32_t mask) {
  std::vector<int> parts;
  int last = 0;
  for (int i = 1; i < n; ++i) {
    if (mask & (1u << (i - 1))) {
      parts.push_back(i - last);
      last = i;
    }
  }
  parts.push_back(n - last);
  return parts;
}

std::uint32_t mask_from_composition(const std::vector<int>& parts) {
  std::uint32_t mask = 0;
  int total = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    total += parts[i];
    mask |= 1u << (total - 1);
  }
  return mask;
}

std::map<std::uint32_t, Rational> descent_eq_coefficients(const PermLC& x, int n) {
  std::map<std::uint32_t, Rational> coeff;
  std::map<std::uint32_t, std::size_t> seen;
  for (const auto& [p, c] : x) {
    if (p.size() != n) throw MalformedInput("element is not homogeneous of degree " + std::to_string(n));
    const std::uint32_t m = descent_mask(p);
    auto [it, inserted] = coeff.try_emplace(m, c);
    if (!inserted && it->second != c) throw MalformedInput("element is not in the descent algebra");
    ++seen[m];
  }
  auto classes = descent_classes(n);
  for (const auto& [m, k] : seen) {
    if (k != classes[m].size()) throw MalformedInput("element is not in the descent algebra");
  }
  return coeff;
}

BchForms bch_forms(int n) {
  if (n < 1) throw MalformedInput("bch_element needs n >= 1");
  const auto classes = descent_classes(n);
  const std::uint32_t full = static_cast<std::uint32_t>(classes.size()) - 1;
  BchForms forms;
  for (std::uint32_t s = 0; s <= full; ++s) {
    const int k = std::popcount(s);
    // D_S = Σ_{B ⊆ S} D_{=B}, summed over the boolean lattice below S.
    PermLC d_s;
    for (std::uint32_t b = s;; b = (b - 1) & s) {
      d_s += classes[b];
      if (b == 0) break;
    }
    const Rational sign = k % 2 == 0 ? 1 : -1;
    forms.d_form.add_scaled(d_s, sign / Rational(k + 1));
    forms.deq_form.add_scaled(classes[s], sign / (Rational(n) * binomial(n - 1, k)));
  }
  return forms;
}

PermLC bch_element(int n) {
  BchForms forms = bch_forms(n);
  if (!(forms.d_form == forms.deq_form)) {
    throw std::logic_error("BCH closed forms disagree at degree " + std::to_string(n));
  }
  return forms.d_form;
}

PermLC perm_unit() { return PermLC(Permutation()); }

TruncatedSeries<PermLC> descent_unit_series(int cutoff) {
  TruncatedSeries<PermLC> s(cutoff);
  s[0] = perm_unit();
  for (int k = 1; k <= cutoff; ++k) s[k] = PermLC(Permutation::identity(k));
  return s;
}

LieMonomial LieMonomial::make(std::vector<int> word) {
  Permutation check(word);  // validates "distinct, covering [n]"
  if (word.empty()) throw MalformedInput("empty Lie monomial");
  return LieMonomial{std::move(word)};
}

namespace {

// Expansion of [w_i,[w_{i+1},...]] as signed words.
std::map<std::vector<int>, int> expand_from(const std::vector<int>& w, std::size_t i) {
  std::map<std::vector<int>, int> out;
  if (i + 1 == w.size()) {
    out[{w[i]}] = 1;
    return out;
  }
  for (const auto& [tail, c] : expand_from(w, i + 1)) {
    std::vector<int> left{w[i]};
    left.insert(left.end(), tail.begin(), tail.end());
    std::vector<int> right = tail;
    right.push_back(w[i]);
    out[left] += c;
    out[right] -= c;
  }
  return out;
}

}  // namespace

PermLC lie_expand(const LieMonomial& m) {
  LieMonomial checked = LieMonomial::make(m.word);
  PermLC out;
  for (const auto& [word, c] : expand_from(checked.word, 0)) out.add(Permutation(word), c);
  return out;
}

std::map<Permutation, Rational> lie_basis_coeffs(const PermLC& x, int n) {
  if (n < 1) throw MalformedInput("degree must be positive");
  for (const auto& kv : x) {
    if (kv.first.size() != n) throw MalformedInput("element is not homogeneous of degree " + std::to_string(n));
  }
  std::map<Permutation, Rational> coeffs;
  PermLC rebuilt;
  for (const auto& sigma : all_permutations(n - 1)) {
    std::vector<int> word = sigma.values();
    word.push_back(n);
    const Rational& c = x.coeff(Permutation(word));
    if (c.is_zero()) continue;
    coeffs.emplace(sigma, c);
    rebuilt.add_scaled(lie_expand(LieMonomial{word}), c);
  }
  PermLC residual = x - rebuilt;
  if (!residual.is_zero()) {
    throw NotLie("re-expansion leaves " + std::to_string(residual.size()) + " nonzero terms");
  }
  return coeffs;
}

}  // namespace hopfint::perm
