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

#include "srt/channel.hpp"

#include <cmath>

namespace srt {

double link_capacity(double gain_sq, double snr, double prelog) {
  return prelog * std::log2(1.0 + gain_sq * snr);
}

double snr_threshold(double rate, double prelog) {
  return std::exp2(rate / prelog) - 1.0;
}

ChannelRealization draw_realization(const SystemParams& params,
                                    const RngContract& rng, LinkSet links) {
  ChannelRealization out;
  draw_realization_into(out, params, rng, links);
  return out;
}

void draw_realization_into(ChannelRealization& out, const SystemParams& params,
                           const RngContract& rng, LinkSet links) {
  out.h_sd = fading_sample(rng, {LinkKind::source_destination}, params.var_sd);
  out.h_se = fading_sample(rng, {LinkKind::source_eavesdropper}, params.var_se);
  const std::size_t n = links == LinkSet::all ? params.n_relays : 0;
  out.h_si.resize(n);
  out.h_id.resize(n);
  out.h_ie.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto relay = static_cast<std::uint32_t>(i);
    out.h_si[i] =
        fading_sample(rng, {LinkKind::source_relay, relay}, params.var_si[i]);
    out.h_id[i] = fading_sample(rng, {LinkKind::relay_destination, relay},
                                params.var_id[i]);
    out.h_ie[i] = fading_sample(rng, {LinkKind::relay_eavesdropper, relay},
                                params.var_ie[i]);
  }
}

}  // namespace srt
