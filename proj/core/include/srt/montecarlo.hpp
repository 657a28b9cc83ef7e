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

#ifndef SRT_MONTECARLO_HPP
#define SRT_MONTECARLO_HPP

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "srt/estimator.hpp"
#include "srt/params.hpp"

namespace srt {

struct TrialCounts {
  BernoulliEstimator outage;
  BernoulliEstimator intercept;

  TrialCounts& merge(const TrialCounts& other) {
    outage.merge(other.outage);
    intercept.merge(other.intercept);
    return *this;
  }

  friend bool operator==(const TrialCounts&, const TrialCounts&) = default;
};

struct RunOptions {
  std::uint64_t master_seed = 1;
  /// Selects an independent family of trial streams under the same seed.
  /// Must stay below kDecoupledStreamBit.
  std::uint32_t stream = 0;
  /// 0 means std::thread::hardware_concurrency().
  unsigned workers = 1;
  /// When set, the intercept event is evaluated on a second, independent
  /// realization instead of the one used for the outage event.
  bool decoupled = false;
};

inline constexpr std::uint32_t kDecoupledStreamBit = 0x80000000u;

unsigned resolve_workers(unsigned requested);

/// Splits [0, n_trials) into one contiguous chunk per worker, runs
/// `fn(Acc&, first, last)` on each chunk concurrently and merges the chunk
/// accumulators in chunk order. Acc must provide merge(const Acc&).
template <class Acc, class RangeFn>
Acc partitioned_reduce(std::uint64_t n_trials, unsigned workers, Acc init,
                       RangeFn fn) {
  const std::uint64_t chunks = std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(resolve_workers(workers), n_trials));
  std::vector<Acc> partial(chunks, init);
  auto bounds = [&](std::uint64_t c) { return n_trials * c / chunks; };
  {
    std::vector<std::jthread> pool;
    pool.reserve(chunks - 1);
    for (std::uint64_t c = 1; c < chunks; ++c) {
      pool.emplace_back(
          [&, c] { fn(partial[c], bounds(c), bounds(c + 1)); });
    }
    fn(partial[0], bounds(0), bounds(1));
  }
  Acc total = std::move(partial[0]);
  for (std::uint64_t c = 1; c < chunks; ++c) total.merge(partial[c]);
  return total;
}

/// Outage/intercept counts over trials [first, last) on the calling thread.
TrialCounts run_trial_range(const SystemParams& params, Scheme scheme,
                            std::uint64_t first, std::uint64_t last,
                            const RunOptions& options);

/// Outage/intercept counts over trials [0, n_trials). The result does not
/// depend on options.workers.
TrialCounts run_trials(const SystemParams& params, Scheme scheme,
                       std::uint64_t n_trials, const RunOptions& options);

TrialCounts run_trials(const SystemParams& params, Scheme scheme,
                       std::uint64_t n_trials, std::uint64_t master_seed);

/// SRS and MRS evaluated on the same realizations, plus decoding-set
/// frequencies and the per-trial dominance violation count.
struct RelayComparisonCounts {
  TrialCounts srs;
  TrialCounts mrs;
  /// Trials where MRS is in outage and SRS is not.
  std::uint64_t mrs_only_outages = 0;
  /// Indexed by decoding-set bitmask; empty when N > 20.
  std::vector<std::uint64_t> decoding_set_counts;

  RelayComparisonCounts& merge(const RelayComparisonCounts& other);
};

RelayComparisonCounts run_relay_comparison(const SystemParams& params,
                                           std::uint64_t n_trials,
                                           const RunOptions& options);

/// One (OP, IP) estimate at a given R_o.
struct SrtPoint {
  double overall_rate = 0.0;
  double op_hat = 0.0;
  double op_lo = 0.0;
  double op_hi = 0.0;
  double ip_hat = 0.0;
  double ip_lo = 0.0;
  double ip_hi = 0.0;
  /// 0 for analytic points.
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;

  double op_se() const;
  double ip_se() const;

  static SrtPoint from_counts(double ro, const TrialCounts& counts,
                              std::uint64_t master_seed, double level = 0.95);
  /// Zero-width point carrying closed-form probabilities.
  static SrtPoint exact(double ro, double op, double ip);
};

}  // namespace srt

#endif  // SRT_MONTECARLO_HPP
