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

#ifndef SRT_CLI_CONFIG_HPP
#define SRT_CLI_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srt/params.hpp"

namespace CLI {
class App;
}

namespace srt::cli {

enum class OutputFormat { csv, json };
enum class GridSpacing { linear, geometric };

/// A configuration value that violates an invariant. `key()` is the flag /
/// config-file key at fault.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::invalid_argument(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Everything a run needs. Keys of the config file equal the long flag names
/// without the leading dashes.
struct RunConfig {
  std::vector<std::string> schemes{"dt"};
  std::size_t relays = 4;
  double rs = 0.2;
  std::optional<double> ro_min;  // default rs + 0.05
  std::optional<double> ro_max;  // default rs + 4
  std::size_t ro_points = 40;
  double snr_db = 15.0;
  double alpha = 1.0;
  double var_sd = 1.0;
  double var_se = 0.2;
  /// One value (uniform) or one value per relay.
  std::vector<double> var_si{2.0};
  std::vector<double> var_id{2.0};
  std::vector<double> var_ie{0.2};
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  bool decoupled = false;
  std::string out = "-";
  std::string format = "csv";

  /// Checks every invariant that does not depend on the subcommand; throws
  /// ConfigError naming the offending key.
  void validate() const;

  std::vector<Scheme> parsed_schemes() const;
  OutputFormat output_format() const;
  double ro_lo() const { return ro_min.value_or(rs + 0.05); }
  double ro_hi() const { return ro_max.value_or(rs + 4.0); }
  // Redundancy span of the grid; exact when the bounds are defaulted.
  double re_lo() const { return ro_min ? *ro_min - rs : 0.05; }
  double re_hi() const { return ro_max ? *ro_max - rs : 4.0; }

  /// R_o grid: evenly spaced in R_o, or geometric in R_e = R_o - R_s.
  std::vector<double> ro_grid(GridSpacing spacing) const;

  /// Scenario for the given secrecy rate and relay count (R_o is set to the
  /// first grid value). Variances given as a single value are broadcast.
  SystemParams scenario(double secrecy_rate, std::size_t n_relays) const;
};

/// Registers every run flag (and --config) on `app`, bound to `config`.
void add_run_options(CLI::App& app, RunConfig& config);

}  // namespace srt::cli

#endif  // SRT_CLI_CONFIG_HPP
