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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli.hpp"

namespace {

std::string verb_help() {
  std::string s = "Verbs (default order / largest order):\n";
  for (const auto& [name, info] : hopfint::cli::verbs()) {
    if (info.cap > 0) {
      s += fmt::format("  {:<15} {} / {}  {}\n", name, info.default_order, info.cap, info.summary);
    } else {
      s += fmt::format("  {:<15} -      {}\n", name, info.summary);
    }
  }
  s += "Instances:";
  for (const auto& n : hopfint::cli::instance_names()) s += " " + n;
  s += "\nRelative --output paths resolve against $HOPFINT_OUTPUT_DIR when it is set.\n";
  s += "Exit codes: 0 all identities hold, 1 identity failure, 2 usage error, 3 order cap.\n";
  return s;
}

std::filesystem::path output_path(const std::string& given) {
  std::filesystem::path p(given);
  const char* dir = std::getenv("HOPFINT_OUTPUT_DIR");
  if (p.is_relative() && dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Exact combinatorial Hopf algebra and Rota-Baxter computations.", "hopfint");
  app.footer(verb_help());
  hopfint::cli::Command cmd;
  std::string format = "text", theta = "1", output;
  std::uint64_t seed = 0;
  app.add_option("verb", cmd.verb, "Command to run")->required();
  app.add_option("args", cmd.args, "Words for shuffle/quasishuffle, suite for verify");
  app.add_option("--order", cmd.order, "Order, degree or number of elements");
  app.add_option("--instance", cmd.instance, "Rota-Baxter instance");
  app.add_option("--size", cmd.size, "Instance size (matrix size, sequence length, window)");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized suites");
  app.add_option("--format", format, "text, json or latex");
  app.add_option("--theta", theta, "Weight for quasishuffle, e.g. 1 or -1/2");
  app.add_option("--output", output, "Write the report to this file");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hopfint::cli::kUsage;
  }
  try {
    cmd.format = hopfint::cli::parse_format(format);
    cmd.theta = hopfint::Rational::parse(theta);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hopfint::cli::kUsage;
  }
  if (seed_opt->count() > 0) cmd.seed = seed;

  const auto out = hopfint::cli::run(cmd);
  std::cerr << out.diagnostics;
  if (output.empty()) {
    std::cout << out.report;
  } else if (!out.report.empty()) {
    const auto path = output_path(output);
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << path.string() << "\n";
      return hopfint::cli::kUsage;
    }
    f << out.report;
  }
  return out.exit_code;
}
