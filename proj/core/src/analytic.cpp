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

#include "srt/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "srt/channel.hpp"

namespace srt::analytic {

namespace {

double clamp_probability(double p) {
  if (std::isnan(p)) return p;
  return std::clamp(p, 0.0, 1.0);
}

// P(Exp(mean) > t); exp() already underflows to exactly 0 past ~745.
double exp_tail(double t, double mean) { return std::exp(-t / mean); }

void require_relays(const SystemParams& params, std::size_t limit) {
  if (params.n_relays == 0) {
    throw std::invalid_argument("relay oracle needs at least one relay");
  }
  if (params.n_relays > limit) {
    throw std::invalid_argument("relay oracle refuses N = " +
                                std::to_string(params.n_relays) +
                                " (subset enumeration limited to N <= " +
                                std::to_string(limit) + ")");
  }
}

}  // namespace

double DtClosedForm::outage(double ro) const {
  const double t = snr_threshold(ro, 1.0) / snr;
  return clamp_probability(-std::expm1(-t / var_main));
}

double DtClosedForm::intercept(double re) const {
  const double t = snr_threshold(re, 1.0) / snr;
  return clamp_probability(exp_tail(t, var_wiretap));
}

double DtClosedForm::ip_of_op(double p_out) const {
  if (!(p_out >= 0.0 && p_out < 1.0)) {
    throw std::domain_error("ip_of_op: outage probability must lie in [0, 1)");
  }
  if (p_out < min_outage()) return 1.0;
  // Both sides normalised by N0, so P / N0 = snr.
  const double scaled = std::exp2(-secrecy_rate) *
                            (1.0 - var_main * snr * std::log1p(-p_out)) -
                        1.0;
  return clamp_probability(std::exp(-scaled / (var_wiretap * snr)));
}

std::vector<double> relay_decode_probabilities(const SystemParams& params) {
  const double t = snr_threshold(params.overall_rate, params.alpha) / params.snr;
  std::vector<double> p(params.n_relays);
  for (std::size_t i = 0; i < params.n_relays; ++i) {
    p[i] = exp_tail(t, params.var_si[i]);
  }
  return p;
}

std::vector<double> decoding_set_pmf(const SystemParams& params) {
  require_relays(params, kMaxPmfRelays);
  const std::vector<double> p = relay_decode_probabilities(params);
  const std::size_t n = params.n_relays;
  // Built one relay at a time: entries [0, 2^i) hold the PMF over relays
  // 0..i-1, then split on relay i.
  std::vector<double> pmf(std::size_t{1} << n, 0.0);
  pmf[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t mask = 0; mask < half; ++mask) {
      pmf[mask | half] = pmf[mask] * p[i];
      pmf[mask] *= 1.0 - p[i];
    }
  }
  return pmf;
}

double empty_set_probability(const SystemParams& params) {
  double empty = 1.0;
  for (double p : relay_decode_probabilities(params)) empty *= 1.0 - p;
  return empty;
}

double srs_outage(const SystemParams& params) {
  const std::vector<double> pmf = decoding_set_pmf(params);
  const double t = snr_threshold(params.overall_rate, params.alpha) / params.snr;
  std::vector<double> fail(params.n_relays);
  for (std::size_t i = 0; i < params.n_relays; ++i) {
    fail[i] = -std::expm1(-t / params.var_id[i]);
  }
  // The best relay fails iff every member fails; the empty set is always in
  // outage (empty product).
  double total = 0.0;
  for (std::size_t mask = 0; mask < pmf.size(); ++mask) {
    double all_fail = 1.0;
    for (std::size_t i = 0; i < params.n_relays; ++i) {
      if (mask & (std::size_t{1} << i)) all_fail *= fail[i];
    }
    total += pmf[mask] * all_fail;
  }
  return clamp_probability(total);
}

double exp_sum_tail(double t, double mean_a, double mean_b) {
  if (t <= 0.0) return 1.0;
  const double a = std::min(mean_a, mean_b);
  const double b = std::max(mean_a, mean_b);
  if (a == b) return clamp_probability((1.0 + t / a) * exp_tail(t, a));
  // (a e^{-t/a} - b e^{-t/b}) / (a - b) with a < b, rewritten so both terms
  // are nonnegative and the a -> b limit is well conditioned.
  const double d = a - b;
  const double ratio = std::expm1(t * d / (a * b)) / d;
  return clamp_probability(exp_tail(t, a) + b * exp_tail(t, b) * ratio);
}

double relay_intercept(const SystemParams& params) {
  if (params.n_relays == 0) {
    throw std::invalid_argument("relay oracle needs at least one relay");
  }
  const auto& v = params.var_ie;
  if (std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) !=
      v.end()) {
    throw OracleUnavailable(
        "relay intercept oracle requires identical var-ie across relays");
  }
  const double t = snr_threshold(params.redundancy(), params.alpha) / params.snr;
  const double empty = empty_set_probability(params);
  return clamp_probability(empty * exp_tail(t, params.var_se) +
                           (1.0 - empty) *
                               exp_sum_tail(t, params.var_se, v.front()));
}

}  // namespace srt::analytic
