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
#ifndef HOPFINT_SERIALIZE_HPP
#define HOPFINT_SERIALIZE_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hopfint/lincomb.hpp"

namespace hopfint {

// Terms as (encoding, coefficient), sorted by encoding.
template <class B>
std::vector<std::pair<std::string, Rational>> sorted_terms(const LinComb<B>& x) {
  std::vector<std::pair<std::string, Rational>> out;
  out.reserve(x.size());
  for (const auto& [b, c] : x) out.emplace_back(BasisTraits<B>::encode(b), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

template <class B>
nlohmann::json to_json(const LinComb<B>& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [enc, c] : sorted_terms(x)) {
    arr.push_back({{"basis", enc}, {"coeff", c.fraction_str()}});
  }
  return arr;
}

template <class B>
LinComb<B> from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw MalformedInput("expected a JSON array of terms");
  LinComb<B> out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("basis") || !term.contains("coeff")) {
      throw MalformedInput("term needs 'basis' and 'coeff'");
    }
    out.add(BasisTraits<B>::decode(term.at("basis").get<std::string>()),
            Rational::parse(term.at("coeff").get<std::string>()));
  }
  return out;
}

template <class B>
std::string serialize(const LinComb<B>& x) {
  return to_json(x).dump();
}

template <class B>
LinComb<B> deserialize(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(e.what());
  }
  return from_json<B>(j);
}

// "1/2*(1,2) - 1/2*(2,1)"; "0" for the zero element.
template <class B>
std::string to_text(const LinComb<B>& x) {
  auto terms = sorted_terms(x);
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [enc, c] : terms) {
    Rational a = abs(c);
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (!a.is_one()) out += a.str() + "*";
    out += enc;
    first = false;
  }
  return out;
}

template <class B>
std::string to_latex(const LinComb<B>& x) {
  std::vector<std::pair<std::string, B>> keyed;
  for (const auto& [b, c] : x) keyed.emplace_back(BasisTraits<B>::encode(b), b);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (keyed.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [enc, b] : keyed) {
    const Rational& c = x.coeff(b);
    Rational a = abs(c);
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (!a.is_one()) out += a.latex() + "\\,";
    out += BasisTraits<B>::latex(b);
    first = false;
  }
  return out;
}

}  // namespace hopfint

#endif  // HOPFINT_SERIALIZE_HPP
