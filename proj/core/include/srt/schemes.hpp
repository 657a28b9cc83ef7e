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

#ifndef SRT_SCHEMES_HPP
#define SRT_SCHEMES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "srt/channel.hpp"
#include "srt/params.hpp"

namespace srt {

/// Relays (strictly increasing indices) whose source link supports R_o.
struct DecodingSet {
  std::vector<std::size_t> members;

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  /// Bit i set iff relay i decoded. Only meaningful for n_relays <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const DecodingSet&, const DecodingSet&) = default;
};

/// Unit-norm beamforming weights, one per decoding-set member (same order).
struct WeightVector {
  std::vector<Complex> weights;
};

struct TrialOutcome {
  bool outage = false;
  bool intercept = false;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

/// Raised when the relay->destination vector is identically zero, so no
/// matched weight vector exists.
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Rate conventions shared by every scheme: a relay decodes at capacity >= R_o,
// D is in outage at capacity < R_o, E intercepts at capacity > R_e.

DecodingSet form_decoding_set(const SystemParams& params,
                              const ChannelRealization& real);

TrialOutcome dt_trial(const SystemParams& params,
                      const ChannelRealization& real);

/// argmax of |h_id|^2 over the set, lowest index on ties.
/// Throws std::invalid_argument on an empty set.
std::size_t select_best_relay(const DecodingSet& set,
                              const ChannelRealization& real);

TrialOutcome srs_trial(const SystemParams& params,
                       const ChannelRealization& real);

/// conj(H_d) / ||H_d|| over the set's members.
WeightVector mrs_weights(const DecodingSet& set,
                         const ChannelRealization& real);

TrialOutcome mrs_trial(const SystemParams& params,
                       const ChannelRealization& real);

TrialOutcome evaluate_trial(Scheme scheme, const SystemParams& params,
                            const ChannelRealization& real);

/// SRS and MRS outcomes for one realization, sharing the decoding set.
struct RelayOutcomes {
  DecodingSet decoding_set;
  TrialOutcome srs;
  TrialOutcome mrs;
};

RelayOutcomes relay_trials(const SystemParams& params,
                           const ChannelRealization& real);

}  // namespace srt

#endif  // SRT_SCHEMES_HPP
