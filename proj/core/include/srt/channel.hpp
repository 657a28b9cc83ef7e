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

#ifndef SRT_CHANNEL_HPP
#define SRT_CHANNEL_HPP

#include <complex>
#include <vector>

#include "srt/params.hpp"
#include "srt/rng.hpp"

namespace srt {

using Complex = std::complex<double>;

/// One trial's fading coefficients for every link of a scenario.
struct ChannelRealization {
  Complex h_sd;
  Complex h_se;
  std::vector<Complex> h_si;
  std::vector<Complex> h_id;
  std::vector<Complex> h_ie;

  friend bool operator==(const ChannelRealization&,
                         const ChannelRealization&) = default;
};

/// Which links a draw must fill. `direct` leaves the relay vectors empty,
/// which is all the DT scheme reads.
enum class LinkSet { all, direct };

/// prelog * log2(1 + gain_sq * snr).
double link_capacity(double gain_sq, double snr, double prelog);

/// Smallest gain_sq * snr at which a link of the given prelog supports
/// `rate`: 2^(rate / prelog) - 1. Rate comparisons are done against this
/// value rather than against log2 of the received SNR.
double snr_threshold(double rate, double prelog);

ChannelRealization draw_realization(const SystemParams& params,
                                    const RngContract& rng,
                                    LinkSet links = LinkSet::all);

/// Same as draw_realization, reusing the vectors already held by `out`.
void draw_realization_into(ChannelRealization& out, const SystemParams& params,
                           const RngContract& rng,
                           LinkSet links = LinkSet::all);

}  // namespace srt

#endif  // SRT_CHANNEL_HPP
