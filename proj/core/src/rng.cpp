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

#include "srt/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace srt {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

Philox4x32::Counter raw_block(const RngContract& rng, ChannelLabel label) {
  if (label.relay > kMaxRelayIndex) {
    throw std::out_of_range("relay index exceeds RNG counter field");
  }
  const Philox4x32::Counter ctr = {
      static_cast<std::uint32_t>(rng.trial_index),
      static_cast<std::uint32_t>(rng.trial_index >> 32), rng.stream,
      (static_cast<std::uint32_t>(label.kind) << 24) | label.relay};
  const Philox4x32::Key key = {static_cast<std::uint32_t>(rng.master_seed),
                               static_cast<std::uint32_t>(rng.master_seed >> 32)};
  return Philox4x32::block(ctr, key);
}

std::complex<double> fading_sample(const RngContract& rng, ChannelLabel label,
                                   double variance) {
  const auto r = raw_block(rng, label);
  const std::uint64_t a = (static_cast<std::uint64_t>(r[0]) << 32) | r[1];
  const std::uint64_t b = (static_cast<std::uint64_t>(r[2]) << 32) | r[3];
  // |h|^2 ~ Exp(variance) by inversion, phase uniform: this is exactly the
  // polar form of a complex Gaussian with per-component variance variance/2.
  const double power = -variance * std::log(open_unit(a));
  const double phase = 2.0 * std::numbers::pi * open_unit(b);
  return std::polar(std::sqrt(power), phase);
}

}  // namespace srt
