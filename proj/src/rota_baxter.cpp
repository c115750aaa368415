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
#include "hopfint/rota_baxter.hpp"

#include <algorithm>
#include <set>

#include "hopfint/linalg.hpp"
#include "hopfint/serialize.hpp"
#include "text_util.hpp"

namespace hopfint::rb {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

Matrix zero_like(const Matrix& m) { return Matrix::Zero(m.rows(), m.cols()); }

void trim(std::vector<Matrix>& coeffs) {
  while (!coeffs.empty() && is_zero(coeffs.back())) coeffs.pop_back();
}

std::string power_suffix(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

// "c*m" with the coefficient dropped when it is 1; m empty means the unit.
void append_term(std::string& out, const Rational& c, const std::string& m) {
  const Rational a = abs(c);
  if (out.empty()) {
    if (c.sign() < 0) out += "-";
  } else {
    out += c.sign() < 0 ? " - " : " + ";
  }
  if (m.empty()) {
    out += a.str();
  } else {
    if (!a.is_one()) out += a.str() + "*";
    out += m;
  }
}

}  // namespace

bool is_zero(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::string format_matrix(const Matrix& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

Matrix random_matrix(int size, Rng& rng) {
  Matrix m(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) m(i, j) = Rational(uniform_int(rng, -3, 3));
  }
  return m;
}

// ---------------------------------------------------------------------------

TriangularProjector::TriangularProjector(int size, Part part) : size_(size), part_(part) {
  if (size < 1) throw MalformedInput("matrix size must be positive");
  require_rota_baxter(*this);
}

Matrix TriangularProjector::apply(const Matrix& a) const {
  Matrix r = zero();
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) {
      const bool upper = j >= i;
      if (upper == (part_ == Part::kUpper)) r(i, j) = a(i, j);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

bool operator==(const Sequence& a, const Sequence& b) {
  const std::size_t n = std::max(a.entries.size(), b.entries.size());
  const words::WordLC zero;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = i < a.entries.size() ? a.entries[i] : zero;
    const auto& y = i < b.entries.size() ? b.entries[i] : zero;
    if (!(x == y)) return false;
  }
  return true;
}

Sequence& Sequence::operator+=(const Sequence& o) {
  if (entries.size() < o.entries.size()) entries.resize(o.entries.size());
  for (std::size_t i = 0; i < o.entries.size(); ++i) entries[i] += o.entries[i];
  return *this;
}

Sequence& Sequence::operator-=(const Sequence& o) {
  if (entries.size() < o.entries.size()) entries.resize(o.entries.size());
  for (std::size_t i = 0; i < o.entries.size(); ++i) entries[i] -= o.entries[i];
  return *this;
}

Sequence operator*(const Rational& c, Sequence a) {
  for (auto& e : a.entries) e *= c;
  return a;
}

SequenceAlgebra::SequenceAlgebra(int length, int degree_cap, bool commutative, bool free)
    : length_(length), degree_cap_(degree_cap), commutative_(commutative), free_(free) {
  if (length < 1) throw MalformedInput("sequence length must be positive");
  if (degree_cap < 1) throw MalformedInput("degree cap must be positive");
  require_rota_baxter(*this);
}

SequenceAlgebra SequenceAlgebra::summation(int length, int degree_cap, bool commutative) {
  return SequenceAlgebra(length, degree_cap, commutative, false);
}

SequenceAlgebra SequenceAlgebra::free_rb(int length, int degree_cap) {
  return SequenceAlgebra(length, degree_cap, false, true);
}

Sequence SequenceAlgebra::zero() const { return Sequence{std::vector<words::WordLC>(idx(length_))}; }

Sequence SequenceAlgebra::one() const { return constant(words::WordLC(words::Word())); }

Sequence SequenceAlgebra::constant(const words::WordLC& p) const {
  return Sequence{std::vector<words::WordLC>(idx(length_), p)};
}

Sequence SequenceAlgebra::generator() const {
  Sequence s = zero();
  for (int k = 0; k < length_; ++k) s.entries[idx(k)] = words::WordLC(words::make_word({k + 1}));
  return s;
}

words::WordLC SequenceAlgebra::poly_mul(const words::WordLC& a, const words::WordLC& b) const {
  words::WordLC out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      if (u.length() + v.length() > degree_cap_) continue;
      words::Word w = words::concat(u, v);
      if (commutative_) std::sort(w.letters.begin(), w.letters.end());
      out.add(std::move(w), cu * cv);
    }
  }
  return out;
}

Sequence SequenceAlgebra::mul(const Sequence& a, const Sequence& b) const {
  Sequence r = zero();
  for (std::size_t k = 0; k < idx(length_); ++k) {
    if (k < a.entries.size() && k < b.entries.size()) {
      r.entries[k] = poly_mul(a.entries[k], b.entries[k]);
    }
  }
  return r;
}

Sequence SequenceAlgebra::apply(const Sequence& a) const {
  Sequence r = zero();
  words::WordLC running;
  for (std::size_t k = 0; k < idx(length_); ++k) {
    r.entries[k] = running;
    if (k < a.entries.size()) running += a.entries[k];
  }
  return r;
}

Sequence SequenceAlgebra::random(Rng& rng) const {
  Sequence s = zero();
  for (auto& e : s.entries) {
    const int terms = uniform_int(rng, 0, 2);
    for (int t = 0; t < terms; ++t) {
      words::Word w;
      const int len = uniform_int(rng, 0, std::min(2, degree_cap_));
      for (int i = 0; i < len; ++i) w.letters.push_back(uniform_int(rng, 1, 3));
      if (commutative_) std::sort(w.letters.begin(), w.letters.end());
      e.add(std::move(w), random_rational(rng, 3, 2));
    }
  }
  return s;
}

std::string SequenceAlgebra::format(const Sequence& a) const {
  std::string s = "[";
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    if (k) s += "; ";
    s += to_text(a.entries[k]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

Laurent Laurent::monomial(int k, const Rational& c) {
  Laurent l;
  if (!c.is_zero()) l.coeffs[k] = c;
  return l;
}

const Rational& Laurent::coeff(int k) const {
  static const Rational zero;
  auto it = coeffs.find(k);
  return it == coeffs.end() ? zero : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.coeffs) {
    Rational& v = coeffs[k];
    v += c;
    if (v.is_zero()) coeffs.erase(k);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, c] : o.coeffs) {
    Rational& v = coeffs[k];
    v -= c;
    if (v.is_zero()) coeffs.erase(k);
  }
  return *this;
}

Laurent operator*(const Rational& c, Laurent a) {
  if (c.is_zero()) return Laurent();
  for (auto& kv : a.coeffs) kv.second *= c;
  return a;
}

LaurentMinimalSubtraction::LaurentMinimalSubtraction(int pole_order, int regular_order,
                                                     Projection projection)
    : pole_order_(pole_order), regular_order_(regular_order), projection_(projection) {
  if (pole_order < 1 || regular_order < 0) {
    throw MalformedInput("Laurent window needs pole order >= 1 and regular order >= 0");
  }
  require_rota_baxter(*this);
}

Laurent LaurentMinimalSubtraction::mul(const Laurent& a, const Laurent& b) const {
  Laurent r;
  for (const auto& [i, ci] : a.coeffs) {
    for (const auto& [j, cj] : b.coeffs) r += Laurent::monomial(i + j, ci * cj);
  }
  return r;
}

Laurent LaurentMinimalSubtraction::apply(const Laurent& a) const {
  Laurent r;
  for (const auto& [k, c] : a.coeffs) {
    if ((k < 0) == (projection_ == Projection::kPole)) r.coeffs[k] = c;
  }
  return r;
}

Laurent LaurentMinimalSubtraction::random(Rng& rng) const {
  Laurent r;
  const int terms = uniform_int(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    r += Laurent::monomial(uniform_int(rng, -pole_order_, regular_order_),
                           random_rational(rng, 4, 3));
  }
  return r;
}

std::string LaurentMinimalSubtraction::format(const Laurent& a) const {
  std::string s;
  for (const auto& [k, c] : a.coeffs) append_term(s, c, power_suffix("eps", k));
  return s.empty() ? "0" : s;
}

bool LaurentMinimalSubtraction::in_window(const Laurent& a) const {
  return a.coeffs.empty() ||
         (a.coeffs.begin()->first >= -pole_order_ && a.coeffs.rbegin()->first <= regular_order_);
}

// ---------------------------------------------------------------------------

bool operator==(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_a = i < a.coeffs.size(), in_b = i < b.coeffs.size();
    if (in_a && in_b) {
      if (!(a.coeffs[i] == b.coeffs[i])) return false;
    } else if (!is_zero(in_a ? a.coeffs[i] : b.coeffs[i])) {
      return false;
    }
  }
  return true;
}

MatrixPolynomial& MatrixPolynomial::operator+=(const MatrixPolynomial& o) {
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) {
    if (i < coeffs.size()) {
      coeffs[i] += o.coeffs[i];
    } else {
      coeffs.push_back(o.coeffs[i]);
    }
  }
  trim(coeffs);
  return *this;
}

MatrixPolynomial& MatrixPolynomial::operator-=(const MatrixPolynomial& o) {
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) {
    if (i < coeffs.size()) {
      coeffs[i] -= o.coeffs[i];
    } else {
      coeffs.push_back(-o.coeffs[i]);
    }
  }
  trim(coeffs);
  return *this;
}

MatrixPolynomial operator*(const Rational& c, MatrixPolynomial a) {
  if (c.is_zero()) return MatrixPolynomial();
  for (auto& m : a.coeffs) m *= c;
  return a;
}

PolynomialIntegration::PolynomialIntegration(int dim) : dim_(dim) {
  if (dim < 1) throw MalformedInput("coefficient dimension must be positive");
  require_rota_baxter(*this);
}

MatrixPolynomial PolynomialIntegration::mul(const MatrixPolynomial& a,
                                            const MatrixPolynomial& b) const {
  if (a.coeffs.empty() || b.coeffs.empty()) return MatrixPolynomial();
  MatrixPolynomial r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, zero_like(a.coeffs[0]));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      r.coeffs[i + j] += a.coeffs[i].lazyProduct(b.coeffs[j]);
    }
  }
  trim(r.coeffs);
  return r;
}

MatrixPolynomial PolynomialIntegration::apply(const MatrixPolynomial& a) const {
  if (a.coeffs.empty()) return MatrixPolynomial();
  MatrixPolynomial r;
  r.coeffs.push_back(zero_like(a.coeffs[0]));
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
    Matrix m = a.coeffs[k] * Rational(1, static_cast<long>(k + 1));
    r.coeffs.push_back(m);
  }
  trim(r.coeffs);
  return r;
}

MatrixPolynomial PolynomialIntegration::monomial(int k, const Matrix& coeff) const {
  if (k < 0) throw MalformedInput("negative power of t");
  if (coeff.rows() != dim_ || coeff.cols() != dim_) {
    throw MalformedInput("coefficient has the wrong dimension");
  }
  MatrixPolynomial r;
  r.coeffs.assign(idx(k) + 1, Matrix::Zero(dim_, dim_));
  r.coeffs[idx(k)] = coeff;
  trim(r.coeffs);
  return r;
}

MatrixPolynomial PolynomialIntegration::power(int k, const Rational& c) const {
  Matrix m = Matrix::Identity(dim_, dim_) * c;
  return monomial(k, m);
}

MatrixPolynomial PolynomialIntegration::random(Rng& rng) const {
  MatrixPolynomial r;
  const int deg = uniform_int(rng, 0, 2);
  for (int k = 0; k <= deg; ++k) {
    Matrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) m(i, j) = Rational(uniform_int(rng, -2, 2));
    }
    r.coeffs.push_back(m);
  }
  trim(r.coeffs);
  return r;
}

std::string PolynomialIntegration::format(const MatrixPolynomial& a) const {
  std::string s;
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
    if (is_zero(a.coeffs[k])) continue;
    const std::string t = power_suffix("t", static_cast<int>(k));
    if (dim_ == 1) {
      append_term(s, a.coeffs[k](0, 0), t);
    } else {
      if (!s.empty()) s += " + ";
      s += format_matrix(a.coeffs[k]) + (t.empty() ? "" : "*" + t);
    }
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------

bool CycleDecomposition::is_canonical() const {
  std::set<int> seen;
  int prev_first = 0;
  for (const auto& c : cycles) {
    if (c.empty()) return false;
    if (*std::max_element(c.begin(), c.end()) != c.front()) return false;
    if (c.front() <= prev_first) return false;
    prev_first = c.front();
    for (int a : c) {
      if (a < 1 || !seen.insert(a).second) return false;
    }
  }
  return seen.empty() || *seen.rbegin() == static_cast<int>(seen.size());
}

perm::Permutation CycleDecomposition::to_permutation() const {
  std::size_t n = 0;
  for (const auto& c : cycles) n += c.size();
  std::vector<int> values(n, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int a = c[i];
      if (a < 1 || idx(a) > n || values[idx(a - 1)] != 0) {
        throw MalformedInput("cycles do not describe a permutation");
      }
      values[idx(a - 1)] = c[(i + 1) % c.size()];
    }
  }
  return perm::Permutation(std::move(values));
}

std::string CycleDecomposition::str() const {
  bool digits = true;
  for (const auto& c : cycles) {
    for (int a : c) digits = digits && a < 10;
  }
  std::string s;
  for (const auto& c : cycles) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i && !digits) s += ",";
      s += std::to_string(c[i]);
    }
    s += ")";
  }
  return s;
}

CycleDecomposition CycleDecomposition::parse(std::string_view text) {
  CycleDecomposition d;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw MalformedInput("cycle must start with '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw MalformedInput("unterminated cycle");
    const std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> cycle;
    if (body.find(',') != std::string_view::npos) {
      for (auto part : detail::split_top_level(body, ',')) cycle.push_back(detail::parse_int(part));
    } else {
      for (char ch : body) {
        if (ch < '0' || ch > '9') throw MalformedInput("cycle entries must be digits");
        cycle.push_back(ch - '0');
      }
    }
    if (cycle.empty()) throw MalformedInput("empty cycle");
    d.cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return d;
}

CycleDecomposition canonical_cycles(const perm::Permutation& sigma) {
  const int n = sigma.size();
  std::vector<bool> seen(idx(n) + 1, false);
  CycleDecomposition d;
  // Scanning from n down, the first unseen entry is the maximum of its cycle.
  for (int start = n; start >= 1; --start) {
    if (seen[idx(start)]) continue;
    std::vector<int> cycle;
    for (int a = start; !seen[idx(a)]; a = sigma(a)) {
      seen[idx(a)] = true;
      cycle.push_back(a);
    }
    d.cycles.push_back(std::move(cycle));
  }
  std::reverse(d.cycles.begin(), d.cycles.end());
  return d;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  if (n < 0) throw MalformedInput("negative set size");
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  auto place = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    self(self, i + 1);
    blocks.pop_back();
  };
  place(place, 1);
  return out;
}

// ---------------------------------------------------------------------------

Sequence iterated_generator(const SequenceAlgebra& alg, int n) {
  if (n < 0) throw MalformedInput("negative generator index");
  const Sequence x = alg.generator();
  Sequence r = alg.one();
  for (int k = 1; k <= n; ++k) r = alg.apply(alg.mul(r, x));
  return r;
}

FreeGenerators free_rb_generators(const SequenceAlgebra& alg, int n) {
  if (n < 1) throw MalformedInput("generator index must be positive");
  if (n > alg.length() || n > alg.degree_cap()) {
    throw CutoffExceeded("generator index " + std::to_string(n) +
                         " exceeds the sequence length or degree cap");
  }
  const Sequence x = alg.generator();
  Sequence power = x;
  for (int k = 2; k <= n; ++k) power = alg.mul(power, x);
  return {iterated_generator(alg, n), alg.apply(power)};
}

Sequence spitzer_monomial(const SequenceAlgebra& alg, const std::vector<int>& composition) {
  Sequence r = alg.one();
  for (int part : composition) {
    if (part < 1) throw MalformedInput("composition parts must be positive");
    r = alg.mul(r, iterated_generator(alg, part));
  }
  return r;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> spitzer_coproduct(
    const std::vector<int>& composition) {
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::map<Key, Rational> acc{{Key{}, Rational(1)}};
  for (int part : composition) {
    if (part < 1) throw MalformedInput("composition parts must be positive");
    std::map<Key, Rational> next;
    for (const auto& [key, c] : acc) {
      for (int i = 0; i <= part; ++i) {
        Key k = key;
        if (i > 0) k.first.push_back(i);
        if (part - i > 0) k.second.push_back(part - i);
        next[k] += c;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

LinComb<SlotWord> flatten(const Sequence& s) {
  LinComb<SlotWord> out;
  for (std::size_t k = 0; k < s.entries.size(); ++k) {
    for (const auto& [w, c] : s.entries[k]) out.add(SlotWord{static_cast<int>(k), w}, c);
  }
  return out;
}

namespace {

perm::PermLC descent_monomial(const std::vector<int>& composition) {
  if (composition.empty()) return perm::perm_unit();
  return perm::descent_generator_product(composition);
}

}  // namespace

SpitzerDescentCheck spitzer_descent_check(const SequenceAlgebra& alg, int n) {
  if (n < 1) throw MalformedInput("degree must be positive");
  SpitzerDescentCheck out;
  out.degree = n;
  std::vector<perm::PermLC> descent;
  std::vector<LinComb<SlotWord>> spitzer;
  bool coproduct_ok = true;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    const std::vector<int> c = perm::composition_from_mask(n, mask);
    descent.push_back(descent_monomial(c));
    spitzer.push_back(flatten(spitzer_monomial(alg, c)));
    LinComb<perm::PermTensor> image;
    for (const auto& [key, k] : spitzer_coproduct(c)) {
      image.add_scaled(tensor(descent_monomial(key.first), descent_monomial(key.second)), k);
    }
    coproduct_ok = coproduct_ok && image == perm::mr_coproduct(descent.back());
  }
  out.compositions = static_cast<int>(descent.size());
  out.descent_rank = rank(descent);
  out.spitzer_rank = rank(spitzer);
  out.coproduct_matches = coproduct_ok;
  return out;
}

}  // namespace hopfint::rb
