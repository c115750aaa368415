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
#include "hopfint/rational.hpp"

#include <ostream>
#include <vector>

#include "hopfint/errors.hpp"

namespace hopfint {

Rational::Rational(long long n) : v_(mpz_class(std::to_string(n))) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw MalformedInput("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_integers(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw MalformedInput("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw MalformedInput("empty rational");
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    mpz_class z;
    if (part.empty() || z.set_str(part, 10) != 0) {
      throw MalformedInput("bad rational '" + s + "'");
    }
    return z;
  };
  if (slash == std::string::npos) return from_integers(parse_int(s), 1);
  return from_integers(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MalformedInput("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::string Rational::fraction_str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::latex() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  mpz_class n = v_.get_num();
  std::string sign = n < 0 ? "-" : "";
  if (n < 0) n = -n;
  return sign + "\\frac{" + n.get_str() + "}{" + v_.get_den().get_str() + "}";
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, int e) {
  if (e < 0) return pow(Rational(1) / r, -e);
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= r;
  return out;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational::from_integers(f, 1);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational::from_integers(b, 1);
}

Rational bernoulli(int n) {
  if (n < 0) throw MalformedInput("negative Bernoulli index");
  // Σ_{k=0}^{m} C(m+1, k) B_k = 0 for m ≥ 1.
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= n; ++m) {
    Rational acc;
    for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * b[static_cast<std::size_t>(k)];
    b.push_back(-acc / Rational(m + 1));
  }
  return b.back();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hopfint
