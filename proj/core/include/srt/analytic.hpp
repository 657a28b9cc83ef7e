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

#ifndef SRT_ANALYTIC_HPP
#define SRT_ANALYTIC_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "srt/params.hpp"

namespace srt {

/// Closed-form oracles. Every function returns a probability clamped to
/// [0, 1].
namespace analytic {

/// Raised when an oracle's modelling assumptions do not hold for the given
/// scenario; callers should fall back to Monte Carlo.
class OracleUnavailable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Direct-transmission scenario: main link variance, wiretap variance.
struct DtClosedForm {
  double snr = 1.0;
  double secrecy_rate = 0.0;
  double var_main = 1.0;
  double var_wiretap = 1.0;

  static DtClosedForm from(const SystemParams& params) {
    return {params.snr, params.secrecy_rate, params.var_sd, params.var_se};
  }

  /// P(log2(1 + |h_m|^2 snr) < ro).
  double outage(double ro) const;
  /// P(log2(1 + |h_w|^2 snr) > re).
  double intercept(double re) const;
  /// Intercept probability as a function of outage probability with R_o
  /// eliminated. Returns 1 below outage(R_s), where R_e would be <= 0.
  /// Throws std::domain_error for p_out outside [0, 1).
  double ip_of_op(double p_out) const;
  /// outage(R_s): the smallest OP reachable with R_o >= R_s.
  double min_outage() const { return outage(secrecy_rate); }
};

inline constexpr std::size_t kMaxPmfRelays = 20;

/// Probability that relay i decodes: P(alpha log2(1 + |h_si|^2 snr) >= R_o).
std::vector<double> relay_decode_probabilities(const SystemParams& params);

/// Decoding-set distribution indexed by membership bitmask (bit i = relay i),
/// 2^N entries. Throws std::invalid_argument for N == 0 or N > 20.
std::vector<double> decoding_set_pmf(const SystemParams& params);

/// P(decoding set is empty).
double empty_set_probability(const SystemParams& params);

/// SRS outage by total probability over all 2^N decoding sets.
double srs_outage(const SystemParams& params);

/// P(X + Y > t) for independent exponentials with means a and b.
double exp_sum_tail(double t, double mean_a, double mean_b);

/// SRS and MRS intercept probability (they coincide when the relay->E links
/// are i.i.d.). Throws OracleUnavailable for heterogeneous var_ie.
double relay_intercept(const SystemParams& params);

}  // namespace analytic
}  // namespace srt

#endif  // SRT_ANALYTIC_HPP
