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

#ifndef SRT_RNG_HPP
#define SRT_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace srt {

/// Philox4x32-10 counter-based block function (Salmon et al., SC'11).
/// Stateless: the output is a pure function of (counter, key).
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key);
};

/// Link classes, in the fixed order used to build RNG counters. Values are
/// part of the reproducibility contract; never renumber them.
enum class LinkKind : std::uint32_t {
  source_destination = 0,
  source_eavesdropper = 1,
  source_relay = 2,
  relay_destination = 3,
  relay_eavesdropper = 4,
};

struct ChannelLabel {
  LinkKind kind;
  std::uint32_t relay = 0;  // ignored for the two source links
};

/// Addresses one trial's randomness. Every fading sample is a pure function
/// of (master_seed, stream, trial_index, label), so trials can be evaluated
/// in any order or partition.
///
/// Counter layout: {trial lo, trial hi, stream, kind << 24 | relay};
/// key: {seed lo, seed hi}.
struct RngContract {
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;
  std::uint32_t stream = 0;
};

inline constexpr std::uint32_t kMaxRelayIndex = (1u << 24) - 1;

Philox4x32::Counter raw_block(const RngContract& rng, ChannelLabel label);

/// Maps 64 random bits to a double strictly inside (0, 1). Uses the top 52
/// bits so that the half-step offset stays exactly representable.
inline double open_unit(std::uint64_t bits) {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

/// Circularly-symmetric complex Gaussian with E|h|^2 = variance.
std::complex<double> fading_sample(const RngContract& rng, ChannelLabel label,
                                   double variance);

}  // namespace srt

#endif  // SRT_RNG_HPP
