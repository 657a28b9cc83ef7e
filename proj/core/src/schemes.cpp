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

#include "srt/schemes.hpp"

#include <cmath>

namespace srt {

std::uint64_t DecodingSet::mask() const {
  std::uint64_t bits = 0;
  for (std::size_t i : members) bits |= std::uint64_t{1} << i;
  return bits;
}

namespace {

// Received-SNR thresholds of one scenario at one R_o. Gains are compared as
// gain * snr against these.
struct Thresholds {
  double snr;
  double rate;       // decode at >=, outage at <
  double intercept;  // intercept at >

  static Thresholds relay(const SystemParams& p) {
    return {p.snr, snr_threshold(p.overall_rate, p.alpha),
            snr_threshold(p.redundancy(), p.alpha)};
  }
  static Thresholds direct(const SystemParams& p) {
    return {p.snr, snr_threshold(p.overall_rate, 1.0),
            snr_threshold(p.redundancy(), 1.0)};
  }

  bool decodes(double gain) const { return gain * snr >= rate; }
  bool outage(double gain) const { return gain * snr < rate; }
  bool intercepts(double gain) const { return gain * snr > intercept; }
};

DecodingSet decoding_set_for(const Thresholds& t,
                             const ChannelRealization& real) {
  DecodingSet set;
  for (std::size_t i = 0; i < real.h_si.size(); ++i) {
    if (t.decodes(std::norm(real.h_si[i]))) set.members.push_back(i);
  }
  return set;
}

TrialOutcome silent_relays(const Thresholds& t,
                           const ChannelRealization& real) {
  return {true, t.intercepts(std::norm(real.h_se))};
}

TrialOutcome srs_given(const Thresholds& t, const DecodingSet& set,
                       const ChannelRealization& real) {
  if (set.empty()) return silent_relays(t, real);
  const std::size_t best = select_best_relay(set, real);
  const double eve = std::norm(real.h_se) + std::norm(real.h_ie[best]);
  return {t.outage(std::norm(real.h_id[best])), t.intercepts(eve)};
}

TrialOutcome mrs_given(const Thresholds& t, const DecodingSet& set,
                       const ChannelRealization& real) {
  if (set.empty()) return silent_relays(t, real);
  double main_gain = 0.0;
  for (std::size_t i : set.members) main_gain += std::norm(real.h_id[i]);
  const WeightVector w = mrs_weights(set, real);
  Complex eve_amplitude = 0.0;
  for (std::size_t k = 0; k < set.size(); ++k) {
    eve_amplitude += w.weights[k] * real.h_ie[set.members[k]];
  }
  const double eve = std::norm(real.h_se) + std::norm(eve_amplitude);
  return {t.outage(main_gain), t.intercepts(eve)};
}

}  // namespace

DecodingSet form_decoding_set(const SystemParams& params,
                              const ChannelRealization& real) {
  return decoding_set_for(Thresholds::relay(params), real);
}

TrialOutcome dt_trial(const SystemParams& params,
                      const ChannelRealization& real) {
  const Thresholds t = Thresholds::direct(params);
  return {t.outage(std::norm(real.h_sd)), t.intercepts(std::norm(real.h_se))};
}

std::size_t select_best_relay(const DecodingSet& set,
                              const ChannelRealization& real) {
  if (set.empty()) {
    throw std::invalid_argument("select_best_relay: empty decoding set");
  }
  std::size_t best = set.members.front();
  double best_gain = std::norm(real.h_id[best]);
  for (std::size_t i : set.members) {
    const double gain = std::norm(real.h_id[i]);
    if (gain > best_gain) {
      best = i;
      best_gain = gain;
    }
  }
  return best;
}

TrialOutcome srs_trial(const SystemParams& params,
                       const ChannelRealization& real) {
  const Thresholds t = Thresholds::relay(params);
  return srs_given(t, decoding_set_for(t, real), real);
}

WeightVector mrs_weights(const DecodingSet& set,
                         const ChannelRealization& real) {
  if (set.empty()) {
    throw std::invalid_argument("mrs_weights: empty decoding set");
  }
  double norm_sq = 0.0;
  for (std::size_t i : set.members) norm_sq += std::norm(real.h_id[i]);
  if (!(norm_sq > 0.0)) {
    throw DegenerateInput("mrs_weights: relay-destination channels are zero");
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  WeightVector w;
  w.weights.reserve(set.size());
  for (std::size_t i : set.members) {
    w.weights.push_back(std::conj(real.h_id[i]) * scale);
  }
  return w;
}

TrialOutcome mrs_trial(const SystemParams& params,
                       const ChannelRealization& real) {
  const Thresholds t = Thresholds::relay(params);
  return mrs_given(t, decoding_set_for(t, real), real);
}

TrialOutcome evaluate_trial(Scheme scheme, const SystemParams& params,
                            const ChannelRealization& real) {
  switch (scheme) {
    case Scheme::dt:
      return dt_trial(params, real);
    case Scheme::srs:
      return srs_trial(params, real);
    case Scheme::mrs:
      return mrs_trial(params, real);
  }
  throw std::invalid_argument("evaluate_trial: unknown scheme");
}

RelayOutcomes relay_trials(const SystemParams& params,
                           const ChannelRealization& real) {
  const Thresholds t = Thresholds::relay(params);
  RelayOutcomes out;
  out.decoding_set = decoding_set_for(t, real);
  out.srs = srs_given(t, out.decoding_set, real);
  out.mrs = mrs_given(t, out.decoding_set, real);
  return out;
}

}  // namespace srt
