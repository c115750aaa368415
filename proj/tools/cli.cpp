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
#include "cli.hpp"

#include <functional>
#include <variant>

#include <fmt/format.h>

#include "hopfint/errors.hpp"
#include "hopfint/permutations.hpp"
#include "hopfint/rota_baxter.hpp"
#include "hopfint/serialize.hpp"
#include "hopfint/series.hpp"
#include "hopfint/trees.hpp"
#include "hopfint/words.hpp"
#include "report.hpp"

namespace hopfint::cli {

namespace {

using rb::Elem;

class UsageError : public Error {
 public:
  using Error::Error;
};

using AnyInstance = std::variant<rb::TriangularProjector, rb::SequenceAlgebra,
                                 rb::LaurentMinimalSubtraction, rb::PolynomialIntegration>;

// Sequence algebras drop polynomial terms above this total degree.
constexpr int kSequenceDegreeCap = 6;
constexpr int kAxiomSamples = 100;
constexpr int kShuffleMaxLetters = 12;

int default_size(const std::string& name) {
  if (name == "triangular" || name == "triangular-lower") return 3;
  if (name == "summation" || name == "summation-nc" || name == "free") return 4;
  if (name == "laurent" || name == "laurent-regular") return 2;
  return 1;  // integration
}

AnyInstance make_instance(const std::string& name, int size) {
  if (size == 0) size = default_size(name);
  if (size < 1 || size > 8) throw UsageError("--size must be in 1..8");
  using rb::LaurentMinimalSubtraction;
  using rb::TriangularProjector;
  if (name == "triangular") return TriangularProjector(size);
  if (name == "triangular-lower") {
    return TriangularProjector(size, TriangularProjector::Part::kStrictlyLower);
  }
  if (name == "summation") return rb::SequenceAlgebra::summation(size, kSequenceDegreeCap, true);
  if (name == "summation-nc") {
    return rb::SequenceAlgebra::summation(size, kSequenceDegreeCap, false);
  }
  if (name == "free") return rb::SequenceAlgebra::free_rb(size, kSequenceDegreeCap);
  if (name == "laurent") return LaurentMinimalSubtraction(size, size);
  if (name == "laurent-regular") {
    return LaurentMinimalSubtraction(size, size, LaurentMinimalSubtraction::Projection::kRegular);
  }
  if (name == "integration") return rb::PolynomialIntegration(size);
  throw UsageError("unknown instance '" + name + "'");
}

template <class B>
Item lc_item(std::string name, const LinComb<B>& x) {
  return {std::move(name), to_text(x), to_latex(x), to_json(x)};
}

template <class I>
Item elem_item(std::string name, const I& inst, const Elem<I>& x) {
  std::string s = inst.format(x);
  return {std::move(name), s, "\\texttt{" + s + "}", s};
}

template <class I>
std::string series_residual(const I& inst, const rb::Series<I>& s) {
  for (int d = 0; d <= s.cutoff(); ++d) {
    if (!rb::is_zero(inst, s[d])) return fmt::format("lambda^{}: {}", d, inst.format(s[d]));
  }
  return "0";
}

template <class I>
void check_series(Report& r, const std::string& name, const I& inst, const rb::Series<I>& s) {
  const bool ok = rb::vanishes(inst, s);
  r.check(name, ok, ok ? "" : series_residual(inst, s));
}

template <class I>
void check_elem(Report& r, const std::string& name, const I& inst, const Elem<I>& x) {
  const bool ok = rb::is_zero(inst, x);
  r.check(name, ok, ok ? "" : inst.format(x));
}

template <class I, std::size_t N>
void check_array(Report& r, const std::string& name, const I& inst,
                 const std::array<Elem<I>, N>& xs) {
  for (std::size_t i = 0; i < N; ++i) {
    if (!rb::is_zero(inst, xs[i])) {
      r.check(name, false, fmt::format("component {}: {}", i + 1, inst.format(xs[i])));
      return;
    }
  }
  r.check(name, true);
}

template <class B>
void check_equal(Report& r, const std::string& name, const LinComb<B>& a, const LinComb<B>& b) {
  const bool ok = a == b;
  r.check(name, ok, ok ? "" : to_text(a - b));
}

std::string instance_label(const std::string& name, int size) {
  return fmt::format("{}(size {})", name, size == 0 ? default_size(name) : size);
}

// ---------------------------------------------------------------------------
// Combinatorial verbs.

void run_bch(const Command& cmd, int n, Report& r) {
  const auto x = perm::bch_element(n);
  r.item(lc_item(fmt::format("bch[{}]", n), x));
  const auto forms = perm::bch_forms(n);
  check_equal(r, "D-form equals D=-form", forms.d_form, forms.deq_form);
  auto mul = [](const perm::PermLC& a, const perm::PermLC& b) { return perm::mr_product(a, b); };
  const auto lg = series_log(perm::descent_unit_series(n), mul, perm::perm_unit());
  check_equal(r, "log of descent unit series", x, lg[n]);
  const auto coeffs = perm::lie_basis_coeffs(x, n);
  bool ok = coeffs.size() == perm::all_permutations(n - 1).size();
  std::string residual;
  perm::PermLC rebuilt;
  for (const auto& [sigma, c] : coeffs) {
    const int k = static_cast<int>(perm::descent_set(sigma).positions.size());
    const Rational expect = Rational(k % 2 == 0 ? 1 : -1) / (Rational(n) * binomial(n - 1, k));
    if (!(c == expect) && ok) {
      ok = false;
      residual = fmt::format("coefficient of {} is {}", encode(sigma), c.str());
    }
    std::vector<int> word = sigma.values();
    word.push_back(n);
    rebuilt.add_scaled(perm::lie_expand(perm::LieMonomial::make(word)), c);
  }
  r.check("Lie basis coefficients", ok, residual);
  check_equal(r, "Lie re-expansion", rebuilt, x);
  (void)cmd;
}

words::Word parse_word(const std::string& s) {
  if (s.empty() || s == "()") return words::Word();
  return BasisTraits<words::Word>::decode(s.front() == '(' ? s : "(" + s + ")");
}

std::pair<words::Word, words::Word> two_words(const Command& cmd) {
  if (cmd.args.size() != 2) throw UsageError(cmd.verb + " takes exactly two words, e.g. x1,x2 x3");
  auto u = parse_word(cmd.args[0]), v = parse_word(cmd.args[1]);
  if (u.length() + v.length() > kShuffleMaxLetters) {
    throw CutoffExceeded(fmt::format("{} supports at most {} letters in total", cmd.verb,
                                     kShuffleMaxLetters));
  }
  return {u, v};
}

void run_shuffle(const Command& cmd, Report& r) {
  const auto [u, v] = two_words(cmd);
  r.param("u", encode(u));
  r.param("v", encode(v));
  const auto s = words::shuffle(u, v);
  r.item(lc_item("u shuffle v", s));
  check_equal(r, "commutative", s, words::shuffle(v, u));
  Rational total = 0;
  for (const auto& [w, c] : s) total += c;
  const int n = u.length(), m = v.length();
  r.check("coefficient sum is binomial(n+m, n)", total == binomial(n + m, n),
          "sum " + total.str());
  if (n > 0 && m > 0) {
    check_equal(r, "half-shuffle split",
                words::half_shuffle_left(u, v) + words::half_shuffle_right(u, v), s);
  }
}

void run_quasishuffle(const Command& cmd, Report& r) {
  const auto [u, v] = two_words(cmd);
  int top = 1;
  for (const auto* w : {&u, &v}) {
    for (auto l : w->letters) top = std::max(top, l);
  }
  const auto alphabet = words::Alphabet::harmonic(top);
  r.param("u", encode(u));
  r.param("v", encode(v));
  r.param("theta", cmd.theta.str());
  r.param("letter product", "x_a x_b = x_(a+b)");
  const auto s = words::quasi_shuffle(u, v, alphabet, cmd.theta);
  r.item(lc_item("u quasi-shuffle v", s));
  check_equal(r, "commutative", s, words::quasi_shuffle(v, u, alphabet, cmd.theta));
  bool graded = true;
  for (const auto& [w, c] : s) graded = graded && alphabet.degree(w) == alphabet.degree(u) + alphabet.degree(v);
  r.check("weighted degree preserved", graded, "term of wrong weight");
  if (!u.empty() && !v.empty()) {
    auto split = words::quasi_half_left(u, v, alphabet, cmd.theta) +
                 words::quasi_half_right(u, v, alphabet, cmd.theta);
    split.add_scaled(words::quasi_dot(u, v, alphabet, cmd.theta), -cmd.theta);
    check_equal(r, "half-product split", split, s);
  }
  if (cmd.theta.is_zero()) check_equal(r, "weight zero is the shuffle", s, words::shuffle(u, v));
}

void run_magnus_element(int n, Report& r) {
  const auto om = trees::magnus_element(n);
  for (int d = 1; d <= n; ++d) r.item(lc_item(fmt::format("Omega[{}]", d), om[d]));
  trees::ForestSeries dots(n);
  dots[1] = trees::ForestLC(trees::Forest(trees::RootedTree::leaf()));
  const auto w = trees::log_star(trees::exp_circ(dots));
  bool ok = true, prim = true;
  std::string residual;
  for (int d = 0; d <= n; ++d) {
    if (!(w[d] == trees::as_forests(om[d])) && ok) {
      ok = false;
      residual = fmt::format("degree {}: {}", d, to_text(w[d] - trees::as_forests(om[d])));
    }
    const auto x = trees::as_forests(om[d]);
    LinComb<trees::ForestTensor> p;
    for (const auto& [f, c] : x) {
      p.add(trees::ForestTensor{f, trees::Forest()}, c);
      p.add(trees::ForestTensor{trees::Forest(), f}, c);
    }
    prim = prim && trees::gl_coproduct(x) == p;
  }
  r.check("equals log*(exp of the dot)", ok, residual);
  r.check("primitive for the Grossman-Larson coproduct", prim, "non-primitive component");
}

void run_basis(int n, Report& r) {
  const auto b = words::free_shuffle_basis(n);
  for (std::size_t i = 0; i < b.expressions.size(); ++i) {
    r.item(lc_item(b.expressions[i], b.evaluations[i]));
  }
  r.note("count", std::to_string(b.expressions.size()));
  r.note("rank", std::to_string(b.rank));
  r.check("linearly independent", b.rank == static_cast<int>(b.expressions.size()),
          fmt::format("rank {} < {}", b.rank, b.expressions.size()));
}

// ---------------------------------------------------------------------------
// Rota-Baxter verbs.

TruncatedSeries<trees::TreeLC> free_prelie_magnus(int n) {
  const trees::TreeLC x(trees::RootedTree::leaf(1));
  auto pl = [](const trees::TreeLC& a, const trees::TreeLC& b) { return trees::prelie_graft(a, b); };
  return rb::prelie_magnus_series(x, trees::TreeLC(), pl, n);
}

template <class I>
void run_magnus(const I& inst, int n, Rng& rng, Report& r) {
  const auto trees_om = free_prelie_magnus(n);
  for (int d = 1; d <= n; ++d) r.item(lc_item(fmt::format("Omega[{}] (free pre-Lie)", d), trees_om[d]));
  const auto x = inst.random(rng);
  r.item(elem_item("x", inst, x));
  const auto om = rb::prelie_magnus(inst, x, n);
  for (int d = 1; d <= n; ++d) r.item(elem_item(fmt::format("Omega[{}]", d), inst, om[d]));
  check_series(r, "exp(R(Omega)) equals Atkinson left series", inst,
               rb::prelie_magnus_residual(inst, x, n));
  if (inst.commutative()) {
    check_series(r, "commutative collapse to the Spitzer logarithm", inst,
                 om - rb::spitzer_omega(inst, x, n));
  }
}

template <class I>
void run_spitzer(const I& inst, int n, Rng& rng, Report& r) {
  const auto x = inst.random(rng);
  r.item(elem_item("x", inst, x));
  const auto om = rb::spitzer_omega(inst, x, n);
  for (int d = 1; d <= n; ++d) r.item(elem_item(fmt::format("Omega[{}]", d), inst, om[d]));
  check_series(r, "Spitzer identity", inst, rb::spitzer_residual(inst, x, n));
  check_series(r, "Bernoulli recursion gives the same logarithm", inst,
               rb::prelie_magnus(inst, x, n) - om);
}

template <class I>
void run_bohnenblust(const I& inst, int n, Rng& rng, Report& r) {
  std::vector<Elem<I>> fs;
  for (int i = 1; i <= n; ++i) {
    fs.push_back(inst.random(rng));
    r.item(elem_item(fmt::format("F[{}]", i), inst, fs.back()));
  }
  const auto bs = rb::bohnenblust_spitzer(inst, fs);
  r.item(elem_item("sum over permutations", inst, bs.lhs));
  check_elem(r, "cycle form", inst, Elem<I>(bs.lhs - bs.rhs));
  if (bs.partitions) check_elem(r, "set-partition form", inst, Elem<I>(bs.lhs - *bs.partitions));
}

template <class I>
void run_atkinson(const I& inst, int n, Rng& rng, Report& r) {
  const auto x = inst.random(rng);
  r.item(elem_item("x", inst, x));
  const auto s = rb::atkinson_solve(inst, x, n);
  for (int d = 1; d <= n; ++d) r.item(elem_item(fmt::format("l[{}]", d), inst, s.left[d]));
  for (int d = 1; d <= n; ++d) r.item(elem_item(fmt::format("r[{}]", d), inst, s.right[d]));
  const auto res = rb::atkinson_residuals(inst, s, x);
  check_series(r, "factorization", inst, res.factorization);
  check_series(r, "left inverse", inst, res.left);
  check_series(r, "right inverse", inst, res.right);
}

template <class I>
rb::Series<I> graded_input(const I& inst, int n, Rng& rng) {
  rb::Series<I> x(n, inst.zero());
  for (int d = 1; d <= n; ++d) x[d] = inst.random(rng);
  return x;
}

template <class I>
void run_bogoliubov(const I& inst, int n, Rng& rng, Report& r) {
  const auto x = graded_input(inst, n, rng);
  for (int d = 1; d <= n; ++d) r.item(elem_item(fmt::format("x[{}]", d), inst, x[d]));
  const auto s = rb::bogoliubov(inst, x);
  for (int d = 1; d <= n; ++d) r.item(elem_item(fmt::format("f[{}]", d), inst, s.f[d]));
  for (int d = 1; d <= n; ++d) {
    r.item(elem_item(fmt::format("h_inverse[{}]", d), inst, s.h_inverse[d]));
  }
  check_series(r, "f(1 - x) = h_inverse", inst, rb::bogoliubov_residual(inst, s, x));
  check_elem(r, "f[1] = R(x[1])", inst, Elem<I>(s.f[1] - inst.apply(x[1])));
  check_elem(r, "h_inverse[1] = -tilde R(x[1])", inst,
             Elem<I>(s.h_inverse[1] + rb::tilde(inst, x[1])));
}

// ---------------------------------------------------------------------------
// verify

template <class I>
void verify_axioms(const I& inst, const std::string& tag, Rng& rng, Report& r) {
  struct Tally {
    bool ok = true;
    std::string residual;
  };
  std::map<std::string, Tally> t;
  auto note = [&](const std::string& name, bool ok, int sample) {
    auto& e = t[name];
    if (!ok && e.ok) {
      e.ok = false;
      e.residual = fmt::format("sample {}", sample);
    }
  };
  for (int s = 0; s < kAxiomSamples; ++s) {
    const auto x = inst.random(rng), y = inst.random(rng), z = inst.random(rng);
    note("Rota-Baxter relation and mixed relations", rb::vanishes(inst, rb::rb_check(inst, x, y)), s);
    note("R and -tilde R are morphisms of the double product",
         rb::vanishes(inst, rb::morphism_residuals(inst, x, y)), s);
    note("double product associative", rb::is_zero(inst, rb::double_associativity(inst, x, y, z)), s);
    note("pre-Lie identity", rb::is_zero(inst, rb::prelie_residual(inst, x, y, z)), s);
    note("post-Lie axioms", rb::vanishes(inst, rb::postlie_axiom_residuals(inst, x, y, z)), s);
    note("double bracket Jacobi", rb::is_zero(inst, rb::double_bracket_jacobi(inst, x, y, z)), s);
    note("R is a Lie morphism of the double bracket",
         rb::is_zero(inst, rb::double_bracket_morphism(inst, x, y)), s);
    note("modified Rota-Baxter identities", rb::vanishes(inst, rb::modified_map_checks(inst, x, y)), s);
    note("quasi-shuffle axioms", rb::vanishes(inst, rb::quasi_shuffle_axiom_residuals(inst, x, y, z)), s);
    note("link axioms", rb::vanishes(inst, rb::link_axiom_residuals(inst, x, y, z)), s);
    if (inst.theta().is_zero()) {
      note("shuffle axioms", rb::vanishes(inst, rb::shuffle_axiom_residuals(inst, x, y, z)), s);
    }
  }
  for (const auto& [name, e] : t) r.check(tag + "/axioms/" + name, e.ok, e.residual);
}

template <class I>
void verify_instance(const I& inst, const std::string& tag, const std::string& suite, int n,
                     Rng& rng, Report& r) {
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  if (want("axioms")) verify_axioms(inst, tag, rng, r);
  if (want("atkinson")) {
    const auto x = inst.random(rng);
    const auto res = rb::atkinson_residuals(inst, rb::atkinson_solve(inst, x, n), x);
    check_series(r, tag + "/atkinson/factorization", inst, res.factorization);
    check_series(r, tag + "/atkinson/left inverse", inst, res.left);
    check_series(r, tag + "/atkinson/right inverse", inst, res.right);
  }
  if (want("magnus")) {
    check_series(r, tag + "/magnus/exp(R(Omega)) equals Atkinson left series", inst,
                 rb::prelie_magnus_residual(inst, inst.random(rng), n));
  }
  if (want("spitzer") && inst.commutative()) {
    check_series(r, tag + "/spitzer/identity", inst, rb::spitzer_residual(inst, inst.random(rng), n));
  }
  if (want("bohnenblust")) {
    std::vector<Elem<I>> fs;
    for (int i = 0; i < n; ++i) fs.push_back(inst.random(rng));
    const auto bs = rb::bohnenblust_spitzer(inst, fs);
    check_elem(r, tag + "/bohnenblust/cycle form", inst, Elem<I>(bs.lhs - bs.rhs));
    if (bs.partitions) {
      check_elem(r, tag + "/bohnenblust/set-partition form", inst, Elem<I>(bs.lhs - *bs.partitions));
    }
  }
  if (want("bogoliubov") && inst.theta() == Rational(1) && rb::is_zero(inst, inst.apply(inst.one()))) {
    try {
      const auto x = graded_input(inst, n, rng);
      check_series(r, tag + "/bogoliubov/f(1 - x) = h_inverse", inst,
                   rb::bogoliubov_residual(inst, rb::bogoliubov(inst, x), x));
    } catch (const UnsupportedInstance&) {
      // Weight-one instances whose operator is not idempotent are out of scope.
    }
  }
}

void verify_hopf(int n, Report& r) {
  auto delta = [](const perm::Permutation& p) { return perm::mr_coproduct(p); };
  bool coassoc = true, bialg = true;
  for (int k = 0; k <= n; ++k) {
    for (const auto& p : perm::all_permutations(k)) {
      const perm::PermLC x(p);
      coassoc = coassoc && coproduct_left_iterate(x, delta) == coproduct_right_iterate(x, delta);
    }
  }
  for (int k = 0; k <= n; ++k) {
    for (int m = 0; k + m <= n; ++m) {
      for (const auto& s : perm::all_permutations(k)) {
        for (const auto& b : perm::all_permutations(m)) {
          bialg = bialg && perm::mr_coproduct(perm::mr_product(s, b)) ==
                               perm::mr_tensor_product(perm::mr_coproduct(s), perm::mr_coproduct(b));
        }
      }
    }
  }
  r.check("hopf/permutation coproduct coassociative", coassoc, "coassociativity fails");
  r.check("hopf/permutation bialgebra compatibility", bialg, "compatibility fails");
  auto tdelta = [](const trees::PBT& t) { return trees::pbt_coproduct(t); };
  bool tree_ok = true;
  for (int k = 0; k <= n; ++k) {
    for (const auto& t : trees::all_pbts(k)) {
      const trees::PbtLC x(t);
      tree_ok = tree_ok && coproduct_left_iterate(x, tdelta) == coproduct_right_iterate(x, tdelta);
    }
  }
  r.check("hopf/tree coproduct coassociative", tree_ok, "coassociativity fails");
  const auto fr = rb::SequenceAlgebra::free_rb(std::max(n + 1, 2), n);
  for (int k = 1; k <= n; ++k) {
    const auto c = rb::spitzer_descent_check(fr, k);
    r.check(fmt::format("hopf/Spitzer subalgebra matches descent algebra, degree {}", k),
            c.descent_rank == c.compositions && c.spitzer_rank == c.compositions &&
                c.coproduct_matches,
            fmt::format("ranks {} and {} of {}, coproduct {}", c.descent_rank, c.spitzer_rank,
                        c.compositions, c.coproduct_matches ? "matches" : "differs"));
  }
  for (int k = 1; k <= n; ++k) {
    const auto b = words::free_shuffle_basis(k);
    r.check(fmt::format("hopf/free shuffle basis independent, size {}", k),
            b.rank == static_cast<int>(b.expressions.size()),
            fmt::format("rank {} < {}", b.rank, b.expressions.size()));
  }
}

void run_verify(const Command& cmd, int n, Rng& rng, Report& r) {
  const std::string suite = cmd.args.empty() ? "all" : cmd.args[0];
  if (cmd.args.size() > 1) throw UsageError("verify takes at most one suite name");
  const auto& suites = verify_suites();
  if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
    throw UsageError("unknown verify suite '" + suite + "'");
  }
  r.param("suite", suite);
  const std::vector<std::string> names =
      cmd.instance.empty() ? instance_names() : std::vector<std::string>{cmd.instance};
  if (suite != "hopf") {
    for (const auto& name : names) {
      const auto inst = make_instance(name, cmd.size);
      std::visit([&](const auto& i) { verify_instance(i, name, suite, n, rng, r); }, inst);
    }
  }
  if (suite == "all" || suite == "hopf") verify_hopf(n, r);
}

// ---------------------------------------------------------------------------

int resolve_order(const Command& cmd, const VerbInfo& info) {
  const int n = cmd.order == 0 ? info.default_order : cmd.order;
  if (n < 1) throw UsageError("--order must be positive");
  if (n > info.cap) {
    throw CutoffExceeded(fmt::format("{} supports --order up to {}", cmd.verb, info.cap));
  }
  return n;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::kJson:
      return "json";
    case Format::kLatex:
      return "latex";
    case Format::kText:
      break;
  }
  return "text";
}

Report execute(const Command& cmd) {
  const auto it = verbs().find(cmd.verb);
  if (it == verbs().end()) throw UsageError("unknown verb '" + cmd.verb + "'");
  const VerbInfo& info = it->second;
  Report r(cmd.verb);
  const bool uses_order = cmd.verb != "shuffle" && cmd.verb != "quasishuffle";
  const int n = uses_order ? resolve_order(cmd, info) : 0;
  if (uses_order) r.param("order", std::to_string(n));
  if (info.randomized && !cmd.seed) throw UsageError(cmd.verb + " needs --seed");
  Rng rng(cmd.seed.value_or(0));
  if (info.randomized) r.param("seed", std::to_string(*cmd.seed));
  r.param("format", format_name(cmd.format));

  if (cmd.verb == "bch") {
    run_bch(cmd, n, r);
  } else if (cmd.verb == "shuffle") {
    run_shuffle(cmd, r);
  } else if (cmd.verb == "quasishuffle") {
    run_quasishuffle(cmd, r);
  } else if (cmd.verb == "magnus-element") {
    run_magnus_element(n, r);
  } else if (cmd.verb == "basis") {
    run_basis(n, r);
  } else if (cmd.verb == "verify") {
    if (!cmd.instance.empty()) r.param("instance", instance_label(cmd.instance, cmd.size));
    run_verify(cmd, n, rng, r);
  } else {
    std::string name = cmd.instance;
    if (name.empty()) name = cmd.verb == "bogoliubov" ? "laurent" : cmd.verb == "spitzer" ? "summation" : "triangular";
    r.param("instance", instance_label(name, cmd.size));
    const auto inst = make_instance(name, cmd.size);
    std::visit(
        [&](const auto& i) {
          if (cmd.verb == "magnus") {
            run_magnus(i, n, rng, r);
          } else if (cmd.verb == "spitzer") {
            run_spitzer(i, n, rng, r);
          } else if (cmd.verb == "bohnenblust") {
            run_bohnenblust(i, n, rng, r);
          } else if (cmd.verb == "atkinson") {
            run_atkinson(i, n, rng, r);
          } else {
            run_bogoliubov(i, n, rng, r);
          }
        },
        inst);
  }
  return r;
}

}  // namespace

const std::map<std::string, VerbInfo>& verbs() {
  static const std::map<std::string, VerbInfo> table{
      {"bch", {4, 8, false, "continuous BCH element in the descent algebra"}},
      {"magnus", {4, 6, true, "pre-Lie Magnus expansion, free and in an instance"}},
      {"magnus-element", {4, 5, false, "Magnus element in free pre-Lie rooted trees"}},
      {"shuffle", {0, 0, false, "shuffle product of two words"}},
      {"quasishuffle", {0, 0, false, "quasi-shuffle product of two words (--theta)"}},
      {"spitzer", {5, 6, true, "Spitzer identity in a commutative instance"}},
      {"bohnenblust", {4, 7, true, "Bohnenblust-Spitzer identity for --order elements"}},
      {"atkinson", {6, 8, true, "Atkinson factorization"}},
      {"bogoliubov", {5, 6, true, "Bogoliubov recursion (laurent instance)"}},
      {"verify", {4, 5, true, "identity suites: all, axioms, atkinson, magnus, spitzer, "
                              "bohnenblust, bogoliubov, hopf"}},
      {"basis", {4, 6, false, "free shuffle basis and its rank"}},
  };
  return table;
}

const std::vector<std::string>& instance_names() {
  static const std::vector<std::string> names{
      "triangular", "triangular-lower", "summation",       "summation-nc",
      "free",       "laurent",          "laurent-regular", "integration"};
  return names;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"all",         "axioms",     "atkinson", "magnus",
                                               "spitzer",     "bohnenblust", "bogoliubov", "hopf"};
  return suites;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "latex") return Format::kLatex;
  throw UsageError("unknown format '" + s + "'");
}

Outcome run(const Command& cmd) {
  Outcome out;
  try {
    const Report r = execute(cmd);
    out.report = r.render(cmd.format);
    if (const Check* f = r.first_failure()) {
      out.exit_code = kIdentityFailure;
      out.diagnostics = fmt::format("identity failed: {}\nresidual: {}\n", f->name, f->residual);
    }
  } catch (const CutoffExceeded& e) {
    out.exit_code = kCutoff;
    out.diagnostics = fmt::format("error: {}\n", e.what());
  } catch (const NotLie& e) {
    out.exit_code = kIdentityFailure;
    out.diagnostics = fmt::format("error: {}\n", e.what());
  } catch (const Error& e) {
    out.exit_code = kUsage;
    out.diagnostics = fmt::format("error: {}\n", e.what());
  }
  return out;
}

}  // namespace hopfint::cli
