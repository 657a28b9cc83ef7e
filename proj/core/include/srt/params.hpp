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

#ifndef SRT_PARAMS_HPP
#define SRT_PARAMS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace srt {

enum class Scheme { dt, srs, mrs };

std::string_view to_string(Scheme scheme);
/// Accepts "dt", "srs" or "mrs"; throws std::invalid_argument otherwise.
Scheme parse_scheme(std::string_view name);

double db_to_linear(double db);
double linear_to_db(double linear);

/// Static description of one scenario.
///
/// Per-relay variances are stored per relay so heterogeneous links can be
/// configured; `uniform()` fills them with a single value per link class.
/// All rates are in bits/s/Hz and `snr` is the linear ratio P/N0.
struct SystemParams {
  double snr = 1.0;
  double secrecy_rate = 0.0;  // R_s
  double overall_rate = 1.0;  // R_o
  std::size_t n_relays = 0;

  double var_sd = 1.0;
  double var_se = 1.0;
  std::vector<double> var_si;
  std::vector<double> var_id;
  std::vector<double> var_ie;

  /// Capacity prelog applied to every link of the relay schemes (DT always
  /// uses 1). Only 0.5 and 1.0 are accepted.
  double alpha = 1.0;

  /// R_e = R_o - R_s.
  double redundancy() const { return overall_rate - secrecy_rate; }

  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;

  bool uniform_relay_variances() const;

  /// Copy with a different R_o; used by rate sweeps.
  SystemParams with_overall_rate(double ro) const;

  static SystemParams uniform(double snr_linear, double rs, double ro,
                              std::size_t n_relays, double var_sd,
                              double var_se, double var_si, double var_id,
                              double var_ie, double alpha = 1.0);

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

}  // namespace srt

#endif  // SRT_PARAMS_HPP
