// Copyright 2026 The latfree Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. The document-level functions are shared with the
// Python bindings.

#ifndef LATFREE_CLI_HPP_
#define LATFREE_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "latfree/io.hpp"

namespace latfree::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitBudgetExhausted = 2,
  kExitUsage = 64,
  kExitNotPositiveDefinite = 65,
  kExitHashMismatch = 66,
  kExitInternal = 70,
};

enum class LogLevel { kQuiet, kInfo, kTrace };

// Reads LATFREE_LOG; unset or unknown means info.
LogLevel log_level_from_env();

struct RunConfig {
  std::optional<std::string> mode;  // overrides the problem's policy
  std::optional<double> tau;
  int max_iterations = 10000;
  bool literal_case4 = false;
  int verify_box_radius = 50;
  LogLevel log = LogLevel::kInfo;
};

struct SolveOutcome {
  int exit_code = kExitOk;
  Json document;  // certificate, or partial trace on budget exhaustion
  std::vector<std::string> log;
  std::string error;
};

SolveOutcome solve_document(const Json& problem, const RunConfig& config);

struct VerifyOutcome {
  int exit_code = kExitOk;
  Json report;
  std::string error;
};

VerifyOutcome verify_document(const Json& problem, const Json& certificate, int box_radius);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latfree::cli

#endif  // LATFREE_CLI_HPP_
