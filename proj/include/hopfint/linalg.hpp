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
#ifndef HOPFINT_LINALG_HPP
#define HOPFINT_LINALG_HPP

#include <map>
#include <utility>
#include <vector>

#include "hopfint/lincomb.hpp"

namespace hopfint {

// Rank of a dense rational matrix by fraction-exact Gaussian elimination.
int exact_rank(std::vector<std::vector<Rational>> rows);

// Rank of the span of a family of linear combinations.
template <class B>
int rank(const std::vector<LinComb<B>>& family) {
  std::map<B, std::size_t> column;
  for (const auto& x : family) {
    for (const auto& kv : x) column.try_emplace(kv.first, column.size());
  }
  std::vector<std::vector<Rational>> rows;
  rows.reserve(family.size());
  for (const auto& x : family) {
    std::vector<Rational> row(column.size());
    for (const auto& [b, c] : x) row[column.at(b)] = c;
    rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows));
}

}  // namespace hopfint

#endif  // HOPFINT_LINALG_HPP
