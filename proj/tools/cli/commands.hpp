// Copyright 2026 The srt-sim Authors
//
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

#ifndef SRT_CLI_COMMANDS_HPP
#define SRT_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cli/config.hpp"
#include "cli/records.hpp"

namespace srt::cli {

// Record builders: pure functions of the configuration.

/// Monte Carlo curves for every configured scheme over the given grid.
std::vector<ResultRecord> simulate_records(const RunConfig& config,
                                           GridSpacing spacing);
/// Closed-form DT curve over the geometric grid; no Monte Carlo.
std::vector<ResultRecord> dt_curve_records(const RunConfig& config);
/// Figure presets: "fig3", "fig5" or "fig6". Scenario keys of `config` are
/// ignored; trials, seed, workers and alpha are honoured.
std::vector<ResultRecord> preset_records(std::string_view name,
                                         const RunConfig& config);

inline const std::vector<std::string> kPresetNames{"fig3", "fig5", "fig6"};

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

/// Every oracle-vs-simulation cross-check for the configured scenario.
std::vector<CheckResult> run_validation(const RunConfig& config);

/// Writes records to config.out ("-" means `stdout`). Throws
/// std::runtime_error if the file cannot be written.
void emit(const RunConfig& config, const std::vector<ResultRecord>& records,
          std::ostream& stdout_stream);

/// Command-line entry point. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace srt::cli

#endif  // SRT_CLI_COMMANDS_HPP
