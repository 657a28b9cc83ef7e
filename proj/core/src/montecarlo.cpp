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

#include "srt/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "srt/analytic.hpp"
#include "srt/channel.hpp"
#include "srt/schemes.hpp"

namespace srt {

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void check_options(const RunOptions& options) {
  if (options.stream & kDecoupledStreamBit) {
    throw std::invalid_argument("stream id collides with the decoupled bit");
  }
}

}  // namespace

TrialCounts run_trial_range(const SystemParams& params, Scheme scheme,
                            std::uint64_t first, std::uint64_t last,
                            const RunOptions& options) {
  check_options(options);
  const LinkSet links = scheme == Scheme::dt ? LinkSet::direct : LinkSet::all;
  TrialCounts counts;
  ChannelRealization real;
  ChannelRealization second;
  for (std::uint64_t trial = first; trial < last; ++trial) {
    const RngContract rng{options.master_seed, trial, options.stream};
    draw_realization_into(real, params, rng, links);
    const TrialOutcome outcome = evaluate_trial(scheme, params, real);
    counts.outage.add(outcome.outage);
    if (options.decoupled) {
      const RngContract other{options.master_seed, trial,
                              options.stream | kDecoupledStreamBit};
      draw_realization_into(second, params, other, links);
      counts.intercept.add(evaluate_trial(scheme, params, second).intercept);
    } else {
      counts.intercept.add(outcome.intercept);
    }
  }
  return counts;
}

TrialCounts run_trials(const SystemParams& params, Scheme scheme,
                       std::uint64_t n_trials, const RunOptions& options) {
  if (n_trials == 0) throw std::invalid_argument("n_trials must be >= 1");
  if (scheme != Scheme::dt && params.n_relays == 0) {
    throw std::invalid_argument("relay schemes need at least one relay");
  }
  check_options(options);
  return partitioned_reduce(
      n_trials, options.workers, TrialCounts{},
      [&](TrialCounts& acc, std::uint64_t first, std::uint64_t last) {
        acc = run_trial_range(params, scheme, first, last, options);
      });
}

TrialCounts run_trials(const SystemParams& params, Scheme scheme,
                       std::uint64_t n_trials, std::uint64_t master_seed) {
  RunOptions options;
  options.master_seed = master_seed;
  return run_trials(params, scheme, n_trials, options);
}

RelayComparisonCounts& RelayComparisonCounts::merge(
    const RelayComparisonCounts& other) {
  srs.merge(other.srs);
  mrs.merge(other.mrs);
  mrs_only_outages += other.mrs_only_outages;
  for (std::size_t i = 0; i < decoding_set_counts.size(); ++i) {
    decoding_set_counts[i] += other.decoding_set_counts[i];
  }
  return *this;
}

RelayComparisonCounts run_relay_comparison(const SystemParams& params,
                                           std::uint64_t n_trials,
                                           const RunOptions& options) {
  if (n_trials == 0) throw std::invalid_argument("n_trials must be >= 1");
  if (params.n_relays == 0) {
    throw std::invalid_argument("relay comparison needs at least one relay");
  }
  check_options(options);
  RelayComparisonCounts init;
  if (params.n_relays <= analytic::kMaxPmfRelays) {
    init.decoding_set_counts.assign(std::size_t{1} << params.n_relays, 0);
  }
  return partitioned_reduce(
      n_trials, options.workers, init,
      [&](RelayComparisonCounts& acc, std::uint64_t first,
          std::uint64_t last) {
        ChannelRealization real;
        for (std::uint64_t trial = first; trial < last; ++trial) {
          draw_realization_into(
              real, params, {options.master_seed, trial, options.stream});
          const RelayOutcomes out = relay_trials(params, real);
          acc.srs.outage.add(out.srs.outage);
          acc.srs.intercept.add(out.srs.intercept);
          acc.mrs.outage.add(out.mrs.outage);
          acc.mrs.intercept.add(out.mrs.intercept);
          if (out.mrs.outage && !out.srs.outage) ++acc.mrs_only_outages;
          if (!acc.decoding_set_counts.empty()) {
            ++acc.decoding_set_counts[out.decoding_set.mask()];
          }
        }
      });
}

namespace {

double plug_in_se(double p, std::uint64_t n) {
  if (n == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace

double SrtPoint::op_se() const { return plug_in_se(op_hat, trials); }
double SrtPoint::ip_se() const { return plug_in_se(ip_hat, trials); }

SrtPoint SrtPoint::from_counts(double ro, const TrialCounts& counts,
                               std::uint64_t master_seed, double level) {
  const Interval op = confidence_interval(counts.outage, level);
  const Interval ip = confidence_interval(counts.intercept, level);
  SrtPoint point;
  point.overall_rate = ro;
  point.op_hat = counts.outage.rate();
  point.op_lo = op.low;
  point.op_hi = op.high;
  point.ip_hat = counts.intercept.rate();
  point.ip_lo = ip.low;
  point.ip_hi = ip.high;
  point.trials = counts.outage.trials;
  point.master_seed = master_seed;
  return point;
}

SrtPoint SrtPoint::exact(double ro, double op, double ip) {
  SrtPoint point;
  point.overall_rate = ro;
  point.op_hat = point.op_lo = point.op_hi = op;
  point.ip_hat = point.ip_lo = point.ip_hi = ip;
  return point;
}

}  // namespace srt
