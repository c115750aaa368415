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
#ifndef HOPFINT_TOOLS_REPORT_HPP
#define HOPFINT_TOOLS_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace hopfint::cli {

// One computed object in all three renderings.
struct Item {
  std::string name;
  std::string text;
  std::string latex;
  nlohmann::json json;
};

struct Check {
  std::string name;
  bool ok;
  std::string residual;  // first nonzero residual, empty when ok
};

class Report {
 public:
  explicit Report(std::string verb) : verb_(std::move(verb)) {}

  void param(std::string key, std::string value) {
    params_.emplace_back(std::move(key), std::move(value));
  }
  void item(Item it) { items_.push_back(std::move(it)); }
  // Plain-text item with the same string in every format.
  void note(std::string name, const std::string& text);
  void check(std::string name, bool ok, std::string residual = {});

  bool passed() const;
  const Check* first_failure() const;
  std::string render(Format f) const;

 private:
  std::string render_text() const;
  std::string render_json() const;
  std::string render_latex() const;

  std::string verb_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<Item> items_;
  std::vector<Check> checks_;
};

}  // namespace hopfint::cli

#endif  // HOPFINT_TOOLS_REPORT_HPP
