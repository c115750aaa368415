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
#ifndef HOPFINT_TOOLS_CLI_HPP
#define HOPFINT_TOOLS_CLI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfint/rational.hpp"

namespace hopfint::cli {

enum class Format { kText, kJson, kLatex };

struct Command {
  std::string verb;
  std::vector<std::string> args;  // words for shuffle/quasishuffle, suite for verify
  int order = 0;                  // 0 selects the verb default
  std::string instance;           // empty selects the verb default
  int size = 0;                   // 0 selects the instance default
  std::optional<std::uint64_t> seed;
  Format format = Format::kText;
  Rational theta = 1;
};

enum ExitCode : int { kOk = 0, kIdentityFailure = 1, kUsage = 2, kCutoff = 3 };

struct Outcome {
  int exit_code = kOk;
  std::string report;       // what goes to stdout or --output
  std::string diagnostics;  // what goes to stderr
};

struct VerbInfo {
  int default_order;
  int cap;  // largest supported order
  bool randomized;
  std::string summary;
};

const std::map<std::string, VerbInfo>& verbs();
const std::vector<std::string>& instance_names();
const std::vector<std::string>& verify_suites();

// Never throws; library errors map to exit codes.
Outcome run(const Command& cmd);

Format parse_format(const std::string& s);

}  // namespace hopfint::cli

#endif  // HOPFINT_TOOLS_CLI_HPP
