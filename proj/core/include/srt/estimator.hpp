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

#ifndef SRT_ESTIMATOR_HPP
#define SRT_ESTIMATOR_HPP

#include <cstdint>

namespace srt {

/// Streaming success counter. Merging adds both counts, so any split of a
/// trial range merges back to the single-pass result exactly.
struct BernoulliEstimator {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;

  void add(bool success) {
    successes += success ? 1 : 0;
    ++trials;
  }

  BernoulliEstimator& merge(const BernoulliEstimator& other) {
    successes += other.successes;
    trials += other.trials;
    return *this;
  }

  /// successes / trials; 0 when empty.
  double rate() const;
  /// Plug-in binomial standard error sqrt(p (1 - p) / n).
  double standard_error() const;

  friend bool operator==(const BernoulliEstimator&,
                         const BernoulliEstimator&) = default;
};

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval. `level` is the two-sided coverage, e.g. 0.95.
/// Requires est.trials >= 1 and level in (0, 1); throws std::invalid_argument
/// otherwise.
Interval confidence_interval(const BernoulliEstimator& est,
                             double level = 0.95);

/// Two-sided standard-normal quantile for a coverage level (1.96 for 0.95).
double normal_quantile_two_sided(double level);

/// Exact two-sided binomial tail, 2 min(P[X <= k], P[X >= k]) capped at 1,
/// for X ~ Binomial(est.trials, p). Throws std::invalid_argument for p
/// outside [0, 1] or an empty estimator.
double binomial_two_sided_tail(const BernoulliEstimator& est, double p);

}  // namespace srt

#endif  // SRT_ESTIMATOR_HPP
