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
#include "hopfint/trees.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "text_util.hpp"

namespace hopfint::trees {

struct PlanarBinaryTree::Node {
  PlanarBinaryTree left;
  PlanarBinaryTree right;
  int size;
};

PlanarBinaryTree PlanarBinaryTree::graft(const PlanarBinaryTree& left,
                                         const PlanarBinaryTree& right) {
  PlanarBinaryTree t;
  t.node_ = std::make_shared<const Node>(Node{left, right, left.size() + right.size() + 1});
  return t;
}

int PlanarBinaryTree::size() const { return node_ ? node_->size : 0; }

const PlanarBinaryTree& PlanarBinaryTree::left() const {
  if (!node_) throw std::logic_error("left branch of the empty tree");
  return node_->left;
}

const PlanarBinaryTree& PlanarBinaryTree::right() const {
  if (!node_) throw std::logic_error("right branch of the empty tree");
  return node_->right;
}

bool operator==(const PlanarBinaryTree& a, const PlanarBinaryTree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_ || a.size() != b.size()) return false;
  return a.left() == b.left() && a.right() == b.right();
}

// Size first, then left branch, then right branch.
bool operator<(const PlanarBinaryTree& a, const PlanarBinaryTree& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.empty() || a.node_ == b.node_) return false;
  if (!(a.left() == b.left())) return a.left() < b.left();
  return a.right() < b.right();
}

RootedTree::RootedTree(int label, std::vector<RootedTree> children)
    : label_(label), children_(std::move(children)) {
  if (label < 1) throw MalformedInput("tree labels start at 1");
  std::sort(children_.begin(), children_.end(),
            [](const RootedTree& x, const RootedTree& y) { return x.enc_ < y.enc_; });
  enc_ = std::to_string(label_);
  if (!children_.empty()) {
    enc_ += '[';
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (i) enc_ += ',';
      enc_ += children_[i].enc_;
      size_ += children_[i].size_;
    }
    enc_ += ']';
  }
}

bool operator<(const RootedTree& a, const RootedTree& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return a.enc_ < b.enc_;
}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end(), [](const RootedTree& x, const RootedTree& y) {
    return x.encoding() < y.encoding();
  });
  for (const auto& t : trees_) size_ += t.size();
}

std::string Forest::encoding() const {
  std::string s = "{";
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) s += ',';
    s += trees_[i].encoding();
  }
  return s + "}";
}

Forest operator*(const Forest& a, const Forest& b) {
  std::vector<RootedTree> all = a.trees_;
  all.insert(all.end(), b.trees_.begin(), b.trees_.end());
  return Forest(std::move(all));
}

bool operator<(const Forest& a, const Forest& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return a.trees_ < b.trees_;
}

}  // namespace hopfint::trees

namespace hopfint {

namespace {

using trees::Forest;
using trees::PlanarBinaryTree;
using trees::RootedTree;

PlanarBinaryTree parse_pbt(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw MalformedInput("truncated tree encoding");
  if (s[pos] == '_') {
    ++pos;
    return {};
  }
  if (s[pos] != '(') throw MalformedInput("bad tree encoding '" + std::string(s) + "'");
  ++pos;
  PlanarBinaryTree l = parse_pbt(s, pos);
  if (pos >= s.size() || s[pos] != '|') throw MalformedInput("expected '|' in tree encoding");
  ++pos;
  PlanarBinaryTree r = parse_pbt(s, pos);
  if (pos >= s.size() || s[pos] != ')') throw MalformedInput("expected ')' in tree encoding");
  ++pos;
  return PlanarBinaryTree::graft(l, r);
}

RootedTree parse_rooted(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw MalformedInput("expected a vertex label in '" + std::string(s) + "'");
  int label = detail::parse_int(s.substr(start, pos - start));
  std::vector<RootedTree> children;
  if (pos < s.size() && s[pos] == '[') {
    ++pos;
    while (true) {
      children.push_back(parse_rooted(s, pos));
      if (pos >= s.size()) throw MalformedInput("unterminated child list");
      if (s[pos] == ']') break;
      if (s[pos] != ',') throw MalformedInput("expected ',' or ']' in tree encoding");
      ++pos;
    }
    ++pos;
  }
  return RootedTree(label, std::move(children));
}

}  // namespace

std::string BasisTraits<PlanarBinaryTree>::encode(const PlanarBinaryTree& t) {
  if (t.empty()) return "_";
  return "(" + encode(t.left()) + "|" + encode(t.right()) + ")";
}

PlanarBinaryTree BasisTraits<PlanarBinaryTree>::decode(std::string_view s) {
  std::size_t pos = 0;
  PlanarBinaryTree t = parse_pbt(s, pos);
  if (pos != s.size()) throw MalformedInput("trailing characters in '" + std::string(s) + "'");
  return t;
}

std::string BasisTraits<PlanarBinaryTree>::latex(const PlanarBinaryTree& t) {
  if (t.empty()) return "\\emptyset";
  if (t.size() == 1) return "\\bullet";
  return "(" + latex(t.left()) + " \\vee " + latex(t.right()) + ")";
}

RootedTree BasisTraits<RootedTree>::decode(std::string_view s) {
  std::size_t pos = 0;
  RootedTree t = parse_rooted(s, pos);
  if (pos != s.size()) throw MalformedInput("trailing characters in '" + std::string(s) + "'");
  return t;
}

std::string BasisTraits<RootedTree>::latex(const RootedTree& t) {
  return "\\mathtt{" + t.encoding() + "}";
}

Forest BasisTraits<Forest>::decode(std::string_view s) {
  std::string_view inner = detail::strip_brackets(s, '{', '}');
  std::vector<RootedTree> ts;
  for (auto part : detail::split_top_level(inner, ',')) {
    ts.push_back(BasisTraits<RootedTree>::decode(part));
  }
  return Forest(std::move(ts));
}

std::string BasisTraits<Forest>::latex(const Forest& f) {
  if (f.empty()) return "\\mathbb{1}";
  std::string s;
  for (const auto& t : f.trees()) s += BasisTraits<RootedTree>::latex(t);
  return s;
}

}  // namespace hopfint

namespace hopfint::trees {

// ---- planar binary trees ----

PBT pbt_graft(const PBT& left, const PBT& right) { return PBT::graft(left, right); }

PbtLC pbt_product(const PBT& t, const PBT& u) {
  if (t.empty()) return PbtLC(u);
  if (u.empty()) return PbtLC(t);
  PbtLC out;
  for (const auto& [x, c] : pbt_product(t, u.left())) out.add(PBT::graft(x, u.right()), c);
  for (const auto& [x, c] : pbt_product(t.right(), u)) out.add(PBT::graft(t.left(), x), c);
  return out;
}

PbtLC pbt_product(const PbtLC& a, const PbtLC& b) {
  return lincomb_bilinear([](const PBT& x, const PBT& y) { return pbt_product(x, y); }, a, b);
}

std::vector<PBT> all_pbts(int n) {
  if (n < 0) throw MalformedInput("negative tree size");
  std::vector<std::vector<PBT>> by_size{{PBT()}};
  for (int m = 1; m <= n; ++m) {
    std::vector<PBT> cur;
    for (int k = 0; k < m; ++k) {
      for (const auto& l : by_size[static_cast<std::size_t>(k)]) {
        for (const auto& r : by_size[static_cast<std::size_t>(m - 1 - k)]) {
          cur.push_back(PBT::graft(l, r));
        }
      }
    }
    by_size.push_back(std::move(cur));
  }
  std::vector<PBT> out = by_size[static_cast<std::size_t>(n)];
  std::sort(out.begin(), out.end());
  return out;
}

PBT random_pbt(int n, Rng& rng) {
  if (n <= 0) return {};
  int k = uniform_int(rng, 0, n - 1);
  PBT l = random_pbt(k, rng);
  return PBT::graft(l, random_pbt(n - 1 - k, rng));
}

namespace {

// Labels of t start at offset + 1; returns the root label.
int collect_edges(const PBT& t, int offset, std::vector<std::pair<int, int>>& edges) {
  const int root = offset + t.left().size() + 1;
  if (!t.left().empty()) edges.emplace_back(root, collect_edges(t.left(), offset, edges));
  if (!t.right().empty()) edges.emplace_back(root, collect_edges(t.right(), root, edges));
  return root;
}

}  // namespace

std::vector<std::pair<int, int>> pbt_hasse_edges(const PBT& t) {
  std::vector<std::pair<int, int>> edges;
  if (!t.empty()) collect_edges(t, 0, edges);
  return edges;
}

std::vector<perm::Permutation> linearizations(const PBT& t) {
  if (t.empty()) return {perm::Permutation()};
  const int n = t.size();
  const int k = t.left().size();
  auto ls = linearizations(t.left());
  auto rs = linearizations(t.right());
  std::vector<perm::Permutation> out;
  // The root takes n; the left branch gets a k-subset of the remaining values.
  detail::for_each_subset(n - 1, k, [&](const std::vector<char>& chosen) {
    std::vector<int> in, rest;
    for (int v = 1; v < n; ++v) (chosen[static_cast<std::size_t>(v - 1)] ? in : rest).push_back(v);
    for (const auto& a : ls) {
      for (const auto& b : rs) {
        std::vector<int> beta;
        beta.reserve(static_cast<std::size_t>(n));
        for (int x : a.values()) beta.push_back(in[static_cast<std::size_t>(x - 1)]);
        beta.push_back(n);
        for (int x : b.values()) beta.push_back(rest[static_cast<std::size_t>(x - 1)]);
        out.emplace_back(std::move(beta));
      }
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

perm::PermLC arborify(const PBT& t) {
  perm::PermLC out;
  for (auto& p : linearizations(t)) out.add(std::move(p), 1);
  return out;
}

perm::PermLC arborify(const PbtLC& x) {
  return lincomb_map([](const PBT& t) { return arborify(t); }, x);
}

namespace {

struct Cut {
  PBT trunk;
  std::vector<PBT> pruned;  // in label order
};

// Ways to prune an admissible family out of a branch hanging below the root.
std::vector<Cut> branch_cuts(const PBT& s) {
  if (s.empty()) return {Cut{}};
  std::vector<Cut> out{Cut{PBT(), {s}}};
  auto ls = branch_cuts(s.left());
  auto rs = branch_cuts(s.right());
  for (const auto& l : ls) {
    for (const auto& r : rs) {
      Cut c{PBT::graft(l.trunk, r.trunk), l.pruned};
      c.pruned.insert(c.pruned.end(), r.pruned.begin(), r.pruned.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

LinComb<PbtTensor> pbt_coproduct(const PBT& t) {
  LinComb<PbtTensor> out;
  out.add(PbtTensor{PBT(), t}, 1);
  if (t.empty()) return out;
  for (const auto& l : branch_cuts(t.left())) {
    for (const auto& r : branch_cuts(t.right())) {
      PbtLC rest{PBT()};
      for (const auto& p : l.pruned) rest = pbt_product(rest, PbtLC(p));
      for (const auto& p : r.pruned) rest = pbt_product(rest, PbtLC(p));
      PBT trunk = PBT::graft(l.trunk, r.trunk);
      for (const auto& [u, c] : rest) out.add(PbtTensor{trunk, u}, c);
    }
  }
  return out;
}

LinComb<PbtTensor> pbt_coproduct(const PbtLC& x) {
  return lincomb_map([](const PBT& t) { return pbt_coproduct(t); }, x);
}

// ---- rooted trees and forests ----

namespace {

// Multisets of trees drawn from pool[start..] with total size m.
void forests_of_size(const std::vector<RootedTree>& pool, std::size_t start, int m,
                     std::vector<RootedTree>& cur, std::vector<std::vector<RootedTree>>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool[i].size() > m) continue;
    cur.push_back(pool[i]);
    forests_of_size(pool, i, m - pool[i].size(), cur, out);
    cur.pop_back();
  }
}

// Rebuilds t with extra[k] appended to the children of the k-th vertex in preorder.
RootedTree rebuild(const RootedTree& t, int& counter,
                   const std::vector<std::vector<RootedTree>>& extra) {
  const auto here = static_cast<std::size_t>(counter++);
  std::vector<RootedTree> kids;
  kids.reserve(t.children().size() + extra[here].size());
  for (const auto& c : t.children()) kids.push_back(rebuild(c, counter, extra));
  kids.insert(kids.end(), extra[here].begin(), extra[here].end());
  return RootedTree(t.label(), std::move(kids));
}

RootedTree from_parents(const std::vector<int>& parent, const std::vector<int>& labels, int v) {
  std::vector<RootedTree> kids;
  for (std::size_t w = 0; w < parent.size(); ++w) {
    if (parent[w] == v) kids.push_back(from_parents(parent, labels, static_cast<int>(w)));
  }
  return RootedTree(labels[static_cast<std::size_t>(v)], std::move(kids));
}

}  // namespace

std::vector<RootedTree> all_rooted_trees(int n, int labels) {
  if (n < 0 || labels < 1) throw MalformedInput("bad tree enumeration request");
  std::vector<RootedTree> pool;  // all trees of size < current, growing
  std::vector<RootedTree> current;
  for (int m = 1; m <= n; ++m) {
    std::vector<std::vector<RootedTree>> kids;
    std::vector<RootedTree> cur;
    forests_of_size(pool, 0, m - 1, cur, kids);
    current.clear();
    for (int l = 1; l <= labels; ++l) {
      for (const auto& k : kids) current.emplace_back(l, k);
    }
    pool.insert(pool.end(), current.begin(), current.end());
  }
  std::sort(current.begin(), current.end());
  return current;
}

RootedTree random_rooted_tree(int n, int labels, Rng& rng) {
  if (n < 1) throw MalformedInput("a rooted tree has at least one vertex");
  std::vector<int> parent(static_cast<std::size_t>(n), -1), lab(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (v > 0) parent[static_cast<std::size_t>(v)] = uniform_int(rng, 0, v - 1);
    lab[static_cast<std::size_t>(v)] = uniform_int(rng, 1, labels);
  }
  return from_parents(parent, lab, 0);
}

Forest random_forest(int n, int labels, Rng& rng) {
  std::vector<RootedTree> ts;
  while (n > 0) {
    int k = uniform_int(rng, 1, n);
    ts.push_back(random_rooted_tree(k, labels, rng));
    n -= k;
  }
  return Forest(std::move(ts));
}

TreeLC prelie_graft(const RootedTree& t, const RootedTree& u) {
  TreeLC out;
  const auto n = static_cast<std::size_t>(u.size());
  std::vector<std::vector<RootedTree>> extra(n);
  for (std::size_t v = 0; v < n; ++v) {
    extra[v].push_back(t);
    int counter = 0;
    out.add(rebuild(u, counter, extra), 1);
    extra[v].clear();
  }
  return out;
}

TreeLC prelie_graft(const TreeLC& a, const TreeLC& b) {
  return lincomb_bilinear(
      [](const RootedTree& x, const RootedTree& y) { return prelie_graft(x, y); }, a, b);
}

TreeLC brace(const std::vector<TreeLC>& ws, const TreeLC& v) {
  if (ws.empty()) return v;
  const TreeLC& last = ws.back();
  std::vector<TreeLC> rest(ws.begin(), ws.end() - 1);
  TreeLC out = prelie_graft(last, brace(rest, v));
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::vector<TreeLC> inner = rest;
    inner[i] = prelie_graft(last, rest[i]);
    out -= brace(inner, v);
  }
  return out;
}

TreeLC brace(const Forest& f, const RootedTree& v) {
  std::vector<TreeLC> ws;
  for (const auto& t : f.trees()) ws.emplace_back(t);
  return brace(ws, TreeLC(v));
}

TreeLC brace_direct(const Forest& f, const RootedTree& v) {
  const auto& ws = f.trees();
  const int n = v.size();
  std::vector<int> site(ws.size(), 0);
  TreeLC out;
  while (true) {
    std::vector<std::vector<RootedTree>> extra(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < ws.size(); ++i) extra[static_cast<std::size_t>(site[i])].push_back(ws[i]);
    int counter = 0;
    out.add(rebuild(v, counter, extra), 1);
    std::size_t i = 0;
    while (i < site.size() && ++site[i] == n) site[i++] = 0;
    if (i == site.size()) break;
  }
  return out;
}

ForestLC forest_product(const ForestLC& a, const ForestLC& b) {
  return lincomb_bilinear([](const Forest& x, const Forest& y) { return ForestLC(x * y); }, a, b);
}

ForestLC gl_product(const Forest& f, const Forest& g) {
  const auto& ws = f.trees();
  const auto& vs = g.trees();
  const int slots = static_cast<int>(vs.size()) + 1;
  std::vector<int> target(ws.size(), 0);
  ForestLC out;
  while (true) {
    std::vector<std::vector<RootedTree>> groups(static_cast<std::size_t>(slots));
    for (std::size_t j = 0; j < ws.size(); ++j) groups[static_cast<std::size_t>(target[j])].push_back(ws[j]);
    ForestLC term{Forest(groups[0])};
    for (std::size_t i = 0; i < vs.size() && !term.is_zero(); ++i) {
      term = forest_product(term, as_forests(brace(Forest(groups[i + 1]), vs[i])));
    }
    out += term;
    std::size_t j = 0;
    while (j < target.size() && ++target[j] == slots) target[j++] = 0;
    if (j == target.size()) break;
  }
  return out;
}

ForestLC gl_product(const ForestLC& a, const ForestLC& b) {
  return lincomb_bilinear([](const Forest& x, const Forest& y) { return gl_product(x, y); }, a, b);
}

LinComb<ForestTensor> gl_coproduct(const Forest& f) {
  const auto& ts = f.trees();
  const std::size_t k = ts.size();
  LinComb<ForestTensor> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<RootedTree> in, rest;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? in : rest).push_back(ts[i]);
    out.add(ForestTensor{Forest(std::move(in)), Forest(std::move(rest))}, 1);
  }
  return out;
}

LinComb<ForestTensor> gl_coproduct(const ForestLC& x) {
  return lincomb_map([](const Forest& f) { return gl_coproduct(f); }, x);
}

ForestLC as_forests(const TreeLC& x) {
  ForestLC out;
  for (const auto& [t, c] : x) out.add(Forest(t), c);
  return out;
}

TreeLC single_trees(const ForestLC& x) {
  TreeLC out;
  for (const auto& [f, c] : x) {
    if (f.count() == 1) out.add(f.trees().front(), c);
  }
  return out;
}

ForestLC forest_unit() { return ForestLC(Forest()); }

namespace {

auto circ = [](const ForestLC& a, const ForestLC& b) { return forest_product(a, b); };
auto star = [](const ForestLC& a, const ForestLC& b) { return gl_product(a, b); };

}  // namespace

ForestSeries exp_circ(const ForestSeries& s) { return series_exp(s, circ, forest_unit()); }
ForestSeries log_circ(const ForestSeries& s) { return series_log(s, circ, forest_unit()); }
ForestSeries exp_star(const ForestSeries& s) { return series_exp(s, star, forest_unit()); }
ForestSeries log_star(const ForestSeries& s) { return series_log(s, star, forest_unit()); }

TruncatedSeries<TreeLC> magnus_element(int cutoff, int label) {
  if (cutoff < 1) throw MalformedInput("Magnus element needs cutoff >= 1");
  const RootedTree x = RootedTree::leaf(label);
  TruncatedSeries<TreeLC> omega(cutoff);
  omega[1] = TreeLC(x);
  // Degree d of Ω only depends on degrees < d, so each pass fixes one more degree.
  for (int pass = 2; pass <= cutoff; ++pass) {
    ForestSeries om(cutoff - 1);
    for (int d = 1; d < cutoff; ++d) om[d] = as_forests(omega[d]);
    ForestSeries power = series_constant(cutoff - 1, ForestLC(), forest_unit());
    ForestSeries weight = power;
    for (int n = 1; n < cutoff; ++n) {
      power = series_mul(power, om, star);
      weight += bernoulli(n) / factorial(n) * power;
    }
    TruncatedSeries<TreeLC> next(cutoff);
    for (int d = 0; d < cutoff; ++d) {
      for (const auto& [f, c] : weight[d]) next[d + 1].add_scaled(brace(f, x), c);
    }
    omega = next;
  }
  return omega;
}

}  // namespace hopfint::trees
