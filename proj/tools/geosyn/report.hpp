// Copyright 2026 The Geosyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace geosyn::cli {

/// Process exit statuses shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitNumerical = 1, kExitUsage = 2 };

struct Diagnostic {
  std::string check;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string note;
};

/// Plain-text record of one CLI invocation. Contains nothing time- or
/// host-dependent, so identical invocations render identically.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> outputs;
  std::vector<Diagnostic> diagnostics;

  void input(std::string key, std::string value) {
    inputs.emplace_back(std::move(key), std::move(value));
  }
  /// measured <= tolerance passes.
  void check_at_most(std::string check, double measured, double tolerance,
                     std::string note = {});
  void check(std::string check, bool pass, double measured, double tolerance,
             std::string note = {});
  void fail(std::string check, std::string note);

  bool all_passed() const;
  std::string render() const;
};

}  // namespace geosyn::cli
