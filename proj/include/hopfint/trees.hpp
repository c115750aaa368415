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
#ifndef HOPFINT_TREES_HPP
#define HOPFINT_TREES_HPP

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfint/lincomb.hpp"
#include "hopfint/permutations.hpp"
#include "hopfint/random.hpp"
#include "hopfint/series.hpp"

namespace hopfint::trees {

// Planar binary tree, either empty or a root with ordered left/right branches.
// Vertices are labeled in order: left branch, root, right branch.
class PlanarBinaryTree {
 public:
  PlanarBinaryTree() = default;
  static PlanarBinaryTree graft(const PlanarBinaryTree& left, const PlanarBinaryTree& right);
  static PlanarBinaryTree vertex() { return graft({}, {}); }

  bool empty() const { return node_ == nullptr; }
  int size() const;
  // Both throw std::logic_error on the empty tree.
  const PlanarBinaryTree& left() const;
  const PlanarBinaryTree& right() const;

  friend bool operator==(const PlanarBinaryTree& a, const PlanarBinaryTree& b);
  friend bool operator<(const PlanarBinaryTree& a, const PlanarBinaryTree& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

// Non-planar rooted tree with labeled vertices. Children are kept sorted by
// encoding, so equal trees have equal representations.
class RootedTree {
 public:
  RootedTree(int label, std::vector<RootedTree> children);
  static RootedTree leaf(int label = 1) { return RootedTree(label, {}); }

  int label() const { return label_; }
  const std::vector<RootedTree>& children() const { return children_; }
  int size() const { return size_; }
  // "label" for a leaf, "label[c1,c2,...]" otherwise.
  const std::string& encoding() const { return enc_; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.enc_ == b.enc_; }
  friend bool operator<(const RootedTree& a, const RootedTree& b);

 private:
  int label_ = 1;
  std::vector<RootedTree> children_;
  int size_ = 1;
  std::string enc_;
};

// Multiset of rooted trees; the empty forest is the unit.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> trees);
  explicit Forest(const RootedTree& t) : Forest(std::vector<RootedTree>{t}) {}

  const std::vector<RootedTree>& trees() const { return trees_; }
  std::size_t count() const { return trees_.size(); }
  bool empty() const { return trees_.empty(); }
  int size() const { return size_; }
  // "{t1,t2,...}", "{}" for the unit.
  std::string encoding() const;

  friend Forest operator*(const Forest& a, const Forest& b);
  friend bool operator==(const Forest& a, const Forest& b) { return a.trees_ == b.trees_; }
  friend bool operator<(const Forest& a, const Forest& b);

 private:
  std::vector<RootedTree> trees_;
  int size_ = 0;
};

}  // namespace hopfint::trees

namespace hopfint {

template <>
struct BasisTraits<trees::PlanarBinaryTree> {
  static std::string encode(const trees::PlanarBinaryTree& t);
  static trees::PlanarBinaryTree decode(std::string_view s);
  static int degree(const trees::PlanarBinaryTree& t) { return t.size(); }
  static std::string latex(const trees::PlanarBinaryTree& t);
};

template <>
struct BasisTraits<trees::RootedTree> {
  static std::string encode(const trees::RootedTree& t) { return t.encoding(); }
  static trees::RootedTree decode(std::string_view s);
  static int degree(const trees::RootedTree& t) { return t.size(); }
  static std::string latex(const trees::RootedTree& t);
};

template <>
struct BasisTraits<trees::Forest> {
  static std::string encode(const trees::Forest& f) { return f.encoding(); }
  static trees::Forest decode(std::string_view s);
  static int degree(const trees::Forest& f) { return f.size(); }
  static std::string latex(const trees::Forest& f);
};

}  // namespace hopfint

namespace hopfint::trees {

using PBT = PlanarBinaryTree;
using PbtLC = LinComb<PlanarBinaryTree>;
using PbtTensor = Tensor<PlanarBinaryTree, PlanarBinaryTree>;
using TreeLC = LinComb<RootedTree>;
using ForestLC = LinComb<Forest>;
using ForestTensor = Tensor<Forest, Forest>;
using ForestSeries = TruncatedSeries<ForestLC>;

// ---- planar binary trees ----

PBT pbt_graft(const PBT& left, const PBT& right);
PbtLC pbt_product(const PBT& t, const PBT& u);
PbtLC pbt_product(const PbtLC& a, const PbtLC& b);
std::vector<PBT> all_pbts(int n);
PBT random_pbt(int n, Rng& rng);

// Hasse diagram of the vertex order as (parent, child) label pairs; the root is minimal.
std::vector<std::pair<int, int>> pbt_hasse_edges(const PBT& t);

// Linear extensions β, with the root receiving the largest value n.
std::vector<perm::Permutation> linearizations(const PBT& t);
perm::PermLC arborify(const PBT& t);
perm::PermLC arborify(const PbtLC& x);

LinComb<PbtTensor> pbt_coproduct(const PBT& t);
LinComb<PbtTensor> pbt_coproduct(const PbtLC& x);

// ---- rooted trees and forests ----

// All trees with n vertices and labels in [1, labels], sorted.
std::vector<RootedTree> all_rooted_trees(int n, int labels = 1);
RootedTree random_rooted_tree(int n, int labels, Rng& rng);
Forest random_forest(int n, int labels, Rng& rng);

// Σ over vertices v of u of u with t attached as an extra child of v.
TreeLC prelie_graft(const RootedTree& t, const RootedTree& u);
TreeLC prelie_graft(const TreeLC& a, const TreeLC& b);

// {w_1 ... w_n} v by the inductive definition, multilinear in every slot.
TreeLC brace(const std::vector<TreeLC>& ws, const TreeLC& v);
TreeLC brace(const Forest& f, const RootedTree& v);
// Same value by grafting every tree of f onto some vertex of v.
TreeLC brace_direct(const Forest& f, const RootedTree& v);

ForestLC forest_product(const ForestLC& a, const ForestLC& b);
ForestLC gl_product(const Forest& f, const Forest& g);
ForestLC gl_product(const ForestLC& a, const ForestLC& b);
LinComb<ForestTensor> gl_coproduct(const Forest& f);
LinComb<ForestTensor> gl_coproduct(const ForestLC& x);

ForestLC as_forests(const TreeLC& x);
// Part of x on single-tree forests; the rest is dropped.
TreeLC single_trees(const ForestLC& x);
ForestLC forest_unit();

ForestSeries exp_circ(const ForestSeries& s);
ForestSeries log_circ(const ForestSeries& s);
ForestSeries exp_star(const ForestSeries& s);
ForestSeries log_star(const ForestSeries& s);

// Degree-wise fixed point of {Ω/(exp(Ω)-1)} x = Ω with x a single vertex.
TruncatedSeries<TreeLC> magnus_element(int cutoff, int label = 1);

}  // namespace hopfint::trees

#endif  // HOPFINT_TREES_HPP
