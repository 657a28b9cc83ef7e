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

#ifndef SRT_SWEEP_HPP
#define SRT_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "srt/analytic.hpp"
#include "srt/montecarlo.hpp"
#include "srt/params.hpp"

namespace srt {

/// IP-vs-OP tradeoff curve parameterised by R_o (ascending).
struct SrtCurve {
  Scheme scheme = Scheme::dt;
  SystemParams params;
  std::vector<SrtPoint> points;
};

/// R_o = R_s + R_e with R_e geometrically spaced over [re_min, re_max].
std::vector<double> redundancy_grid(double rs, double re_min = 0.05,
                                    double re_max = 4.0,
                                    std::size_t n_points = 40);

/// n_points evenly spaced values over [lo, hi]; a single point yields {lo}.
std::vector<double> linear_grid(double lo, double hi, std::size_t n_points);

/// Monte Carlo curve. Point k uses trial stream k under the shared seed.
/// Throws std::domain_error if a grid value is <= R_s or the grid is not
/// strictly increasing.
SrtCurve build_curve(const SystemParams& params, Scheme scheme,
                     std::span<const double> ro_grid, std::uint64_t n_trials,
                     const RunOptions& options);

/// Closed-form DT curve over the same kind of grid (zero-width points).
SrtCurve analytic_dt_curve(const SystemParams& params,
                           std::span<const double> ro_grid);

/// Allowed excess of curve_a's IP over curve_b's at each OP:
/// absolute + se_multiplier * sqrt(se_a^2 + se_b^2).
struct DominanceTolerance {
  double absolute = 0.0;
  double se_multiplier = 0.0;
};

struct DominanceResult {
  bool dominant = true;
  std::vector<double> op_grid;
  std::vector<double> ip_a;
  std::vector<double> ip_b;
  std::vector<double> tolerance;
  /// ip_b + tolerance - ip_a; negative where dominance fails.
  std::vector<double> margin;
};

struct OpRange {
  double low = 0.0;
  double high = 0.0;
};

/// Range of op_hat covered by a curve.
OpRange op_range(const SrtCurve& curve);

/// IP of a curve at a given OP by linear interpolation after sorting the
/// points by OP. Also yields the interpolated IP standard error.
struct InterpolatedIp {
  double ip = 0.0;
  double se = 0.0;
};
InterpolatedIp interpolate_ip(const SrtCurve& curve, double op);

/// Whether curve_a's IP <= curve_b's IP + tolerance at every OP in op_grid.
/// Throws std::domain_error if op_grid leaves the curves' common OP range.
DominanceResult dominance_check(const SrtCurve& curve_a,
                                const SrtCurve& curve_b,
                                std::span<const double> op_grid,
                                DominanceTolerance tolerance);

}  // namespace srt

#endif  // SRT_SWEEP_HPP
