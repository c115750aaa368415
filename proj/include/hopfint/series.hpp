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
#ifndef HOPFINT_SERIES_HPP
#define HOPFINT_SERIES_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "hopfint/errors.hpp"
#include "hopfint/lincomb.hpp"
#include "hopfint/rational.hpp"

namespace hopfint {

// Formal series c_0 + c_1 λ + ... + c_N λ^N. V needs +, -, Rational * V and ==.
// The zero prototype matters for carriers whose zero has a shape (matrices).
template <class V>
class TruncatedSeries {
 public:
  TruncatedSeries(int cutoff, const V& zero) : zero_(zero) {
    if (cutoff < 0) throw MalformedInput("negative cutoff");
    comps_.assign(static_cast<std::size_t>(cutoff) + 1, zero);
  }
  explicit TruncatedSeries(int cutoff) : TruncatedSeries(cutoff, V()) {}

  int cutoff() const { return static_cast<int>(comps_.size()) - 1; }
  const V& zero() const { return zero_; }

  const V& operator[](int d) const { return comps_.at(check(d)); }
  V& operator[](int d) { return comps_.at(check(d)); }

  TruncatedSeries truncated(int n) const {
    TruncatedSeries r(std::min(n, cutoff()), zero_);
    for (int d = 0; d <= r.cutoff(); ++d) r.comps_[d] = comps_[d];
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return combine(o, Rational(1)); }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return combine(o, Rational(-1)); }
  TruncatedSeries& operator*=(const Rational& c) {
    for (auto& v : comps_) v = c * v;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.cutoff() == b.cutoff() && a.comps_ == b.comps_;
  }

 private:
  std::size_t check(int d) const {
    if (d < 0 || d > cutoff()) {
      throw CutoffExceeded("degree " + std::to_string(d) + " outside series cutoff " +
                           std::to_string(cutoff()));
    }
    return static_cast<std::size_t>(d);
  }

  TruncatedSeries& combine(const TruncatedSeries& o, const Rational& sign) {
    if (o.cutoff() < cutoff()) comps_.resize(o.comps_.size());
    for (std::size_t d = 0; d < comps_.size(); ++d) comps_[d] = comps_[d] + sign * o.comps_[d];
    return *this;
  }

  V zero_;
  std::vector<V> comps_;
};

template <class V>
TruncatedSeries<V> series_constant(int cutoff, const V& zero, const V& c) {
  TruncatedSeries<V> s(cutoff, zero);
  s[0] = c;
  return s;
}

// Cauchy product; the result carries the smaller cutoff.
template <class V, class Mul>
TruncatedSeries<V> series_mul(const TruncatedSeries<V>& a, const TruncatedSeries<V>& b,
                              Mul&& mul) {
  const int n = std::min(a.cutoff(), b.cutoff());
  TruncatedSeries<V> r(n, a.zero());
  for (int i = 0; i <= n; ++i) {
    if (a[i] == a.zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] == b.zero()) continue;
      r[i + j] = r[i + j] + mul(a[i], b[j]);
    }
  }
  return r;
}

// Σ_{n≥0} s^n / n!, needs s_0 = 0.
template <class V, class Mul>
TruncatedSeries<V> series_exp(const TruncatedSeries<V>& s, Mul&& mul, const V& one) {
  if (!(s[0] == s.zero())) throw MalformedInput("exp needs a series without constant term");
  const int n = s.cutoff();
  TruncatedSeries<V> result = series_constant(n, s.zero(), one);
  TruncatedSeries<V> power = result;
  for (int k = 1; k <= n; ++k) {
    power = series_mul(power, s, mul);
    result += Rational(1) / factorial(k) * power;
  }
  return result;
}

// Σ_{n≥1} (-1)^{n-1} (s-1)^n / n, needs s_0 = 1.
template <class V, class Mul>
TruncatedSeries<V> series_log(const TruncatedSeries<V>& s, Mul&& mul, const V& one) {
  if (!(s[0] == one)) throw MalformedInput("log needs a series with constant term 1");
  const int n = s.cutoff();
  TruncatedSeries<V> u = s;
  u[0] = s.zero();
  TruncatedSeries<V> result(n, s.zero());
  TruncatedSeries<V> power = u;
  for (int k = 1; k <= n; ++k) {
    result += Rational(k % 2 == 1 ? 1 : -1, k) * power;
    if (k < n) power = series_mul(power, u, mul);
  }
  return result;
}

// Every component of a LinComb-valued series is homogeneous of its own degree.
template <class B>
bool series_is_graded(const TruncatedSeries<LinComb<B>>& s) {
  for (int d = 0; d <= s.cutoff(); ++d) {
    for (const auto& kv : s[d]) {
      if (degree(kv.first) != d) return false;
    }
  }
  return true;
}

// Splits a LinComb into a graded series, dropping degrees above the cutoff.
template <class B>
TruncatedSeries<LinComb<B>> graded_series(const LinComb<B>& x, int cutoff) {
  TruncatedSeries<LinComb<B>> s(cutoff);
  for (const auto& [b, c] : x) {
    int d = degree(b);
    if (d <= cutoff) s[d].add(b, c);
  }
  return s;
}

}  // namespace hopfint

#endif  // HOPFINT_SERIES_HPP
