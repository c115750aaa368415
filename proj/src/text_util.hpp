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
// Small parsing and enumeration helpers shared by the basis codecs.

#ifndef HOPFINT_SRC_TEXT_UTIL_HPP
#define HOPFINT_SRC_TEXT_UTIL_HPP

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "hopfint/errors.hpp"

namespace hopfint::detail {

inline int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw MalformedInput("bad integer '" + std::string(s) + "'");
  }
  return v;
}

// Splits on sep at bracket depth zero; () [] {} all count as brackets.
inline std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  if (s.empty()) return parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth < 0) throw MalformedInput("unbalanced brackets in '" + std::string(s) + "'");
    if (c == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw MalformedInput("unbalanced brackets in '" + std::string(s) + "'");
  parts.push_back(s.substr(start));
  return parts;
}

inline std::string_view strip_brackets(std::string_view s, char open, char close) {
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw MalformedInput("expected '" + std::string(1, open) + "...' in '" + std::string(s) + "'");
  }
  return s.substr(1, s.size() - 2);
}

template <class Seq>
std::string join_ints(const Seq& values, const char* sep = ",") {
  std::string out;
  bool first = true;
  for (int v : values) {
    if (!first) out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

// Calls f(chosen) for each k-subset of {0..total-1}, chosen[i] marking membership,
// in a fixed order.
template <class F>
void for_each_subset(int total, int k, F&& f) {
  std::vector<char> chosen(static_cast<std::size_t>(total), 0);
  std::fill(chosen.begin(), chosen.begin() + k, 1);
  do {
    f(chosen);
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
}

}  // namespace hopfint::detail

#endif  // HOPFINT_SRC_TEXT_UTIL_HPP
