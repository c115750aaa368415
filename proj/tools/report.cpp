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
#include "report.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace hopfint::cli {

namespace {

std::string status(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

void Report::note(std::string name, const std::string& text) {
  items_.push_back({std::move(name), text, "\\text{" + latex_escape(text) + "}", text});
}

void Report::check(std::string name, bool ok, std::string residual) {
  checks_.push_back({std::move(name), ok, ok ? std::string() : std::move(residual)});
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.ok; });
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.ok) return &c;
  }
  return nullptr;
}

std::string Report::render(Format f) const {
  switch (f) {
    case Format::kJson:
      return render_json();
    case Format::kLatex:
      return render_latex();
    case Format::kText:
      break;
  }
  return render_text();
}

std::string Report::render_text() const {
  std::string out = fmt::format("hopfint {}\n", verb_);
  for (const auto& [k, v] : params_) out += fmt::format("  {}: {}\n", k, v);
  for (const auto& it : items_) out += fmt::format("{} = {}\n", it.name, it.text);
  for (const auto& c : checks_) {
    out += fmt::format("check {}: {}\n", c.name, status(c.ok));
    if (!c.ok) out += fmt::format("  residual: {}\n", c.residual);
  }
  const auto passed_count = std::count_if(checks_.begin(), checks_.end(),
                                          [](const Check& c) { return c.ok; });
  out += fmt::format("result: {} ({}/{} checks)\n", status(passed()), passed_count, checks_.size());
  return out;
}

std::string Report::render_json() const {
  nlohmann::json j;
  j["verb"] = verb_;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : params_) params[k] = v;
  j["parameters"] = params;
  j["objects"] = nlohmann::json::array();
  for (const auto& it : items_) j["objects"].push_back({{"name", it.name}, {"value", it.json}});
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json e{{"name", c.name}, {"status", status(c.ok)}};
    if (!c.ok) e["residual"] = c.residual;
    j["checks"].push_back(e);
  }
  j["status"] = status(passed());
  return j.dump(2) + "\n";
}

std::string Report::render_latex() const {
  std::string out = fmt::format("% hopfint {}\n", verb_);
  for (const auto& [k, v] : params_) out += fmt::format("% {}: {}\n", k, v);
  for (const auto& it : items_) {
    out += fmt::format("\\[ \\mathrm{{{}}} = {} \\]\n", latex_escape(it.name), it.latex);
  }
  for (const auto& c : checks_) {
    out += fmt::format("% check {}: {}\n", c.name, status(c.ok));
    if (!c.ok) out += fmt::format("%   residual: {}\n", c.residual);
  }
  out += fmt::format("% result: {}\n", status(passed()));
  return out;
}

}  // namespace hopfint::cli
