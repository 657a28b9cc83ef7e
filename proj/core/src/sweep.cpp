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

#include "srt/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace srt {

std::vector<double> redundancy_grid(double rs, double re_min, double re_max,
                                    std::size_t n_points) {
  if (!(re_min > 0.0 && re_max >= re_min) || n_points == 0) {
    throw std::domain_error("redundancy grid needs 0 < re_min <= re_max");
  }
  std::vector<double> grid(n_points);
  if (n_points == 1) {
    grid[0] = rs + re_min;
    return grid;
  }
  const double step = std::log(re_max / re_min) / double(n_points - 1);
  for (std::size_t k = 0; k < n_points; ++k) {
    grid[k] = rs + re_min * std::exp(step * double(k));
  }
  grid.back() = rs + re_max;
  return grid;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n_points) {
  if (n_points == 0 || !(hi >= lo)) {
    throw std::domain_error("linear grid needs lo <= hi and n >= 1");
  }
  std::vector<double> grid(n_points, lo);
  for (std::size_t k = 1; k < n_points; ++k) {
    grid[k] = lo + (hi - lo) * double(k) / double(n_points - 1);
  }
  return grid;
}

namespace {

void check_grid(const SystemParams& params, std::span<const double> grid) {
  if (grid.empty()) throw std::domain_error("empty R_o grid");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > params.secrecy_rate)) {
      std::ostringstream msg;
      msg << "R_o grid value " << grid[k] << " does not exceed R_s "
          << params.secrecy_rate;
      throw std::domain_error(msg.str());
    }
    if (k > 0 && !(grid[k] > grid[k - 1])) {
      throw std::domain_error("R_o grid must be strictly increasing");
    }
  }
}

}  // namespace

SrtCurve build_curve(const SystemParams& params, Scheme scheme,
                     std::span<const double> ro_grid, std::uint64_t n_trials,
                     const RunOptions& options) {
  check_grid(params, ro_grid);
  SrtCurve curve{scheme, params, {}};
  curve.points.reserve(ro_grid.size());
  for (std::size_t k = 0; k < ro_grid.size(); ++k) {
    RunOptions point_options = options;
    point_options.stream = options.stream + static_cast<std::uint32_t>(k);
    const SystemParams at = params.with_overall_rate(ro_grid[k]);
    curve.points.push_back(
        SrtPoint::from_counts(ro_grid[k],
                              run_trials(at, scheme, n_trials, point_options),
                              options.master_seed));
  }
  return curve;
}

SrtCurve analytic_dt_curve(const SystemParams& params,
                           std::span<const double> ro_grid) {
  check_grid(params, ro_grid);
  const auto dt = analytic::DtClosedForm::from(params);
  SrtCurve curve{Scheme::dt, params, {}};
  for (double ro : ro_grid) {
    curve.points.push_back(SrtPoint::exact(
        ro, dt.outage(ro), dt.intercept(ro - params.secrecy_rate)));
  }
  return curve;
}

namespace {

std::vector<SrtPoint> sorted_by_op(const SrtCurve& curve) {
  std::vector<SrtPoint> pts = curve.points;
  std::stable_sort(pts.begin(), pts.end(),
                   [](const SrtPoint& a, const SrtPoint& b) {
                     return a.op_hat < b.op_hat;
                   });
  return pts;
}

}  // namespace

OpRange op_range(const SrtCurve& curve) {
  if (curve.points.empty()) throw std::domain_error("empty curve");
  const auto [lo, hi] = std::minmax_element(
      curve.points.begin(), curve.points.end(),
      [](const SrtPoint& a, const SrtPoint& b) { return a.op_hat < b.op_hat; });
  return {lo->op_hat, hi->op_hat};
}

InterpolatedIp interpolate_ip(const SrtCurve& curve, double op) {
  const std::vector<SrtPoint> pts = sorted_by_op(curve);
  if (pts.empty() || op < pts.front().op_hat || op > pts.back().op_hat) {
    throw std::domain_error("OP outside the curve's range");
  }
  auto upper = std::lower_bound(
      pts.begin(), pts.end(), op,
      [](const SrtPoint& p, double x) { return p.op_hat < x; });
  if (upper->op_hat == op || upper == pts.begin()) {
    return {upper->ip_hat, upper->ip_se()};
  }
  const SrtPoint& a = *(upper - 1);
  const SrtPoint& b = *upper;
  const double w = (op - a.op_hat) / (b.op_hat - a.op_hat);
  return {a.ip_hat + w * (b.ip_hat - a.ip_hat),
          a.ip_se() + w * (b.ip_se() - a.ip_se())};
}

DominanceResult dominance_check(const SrtCurve& curve_a,
                                const SrtCurve& curve_b,
                                std::span<const double> op_grid,
                                DominanceTolerance tolerance) {
  const OpRange ra = op_range(curve_a);
  const OpRange rb = op_range(curve_b);
  const OpRange overlap{std::max(ra.low, rb.low), std::min(ra.high, rb.high)};
  for (double op : op_grid) {
    if (!(op >= overlap.low && op <= overlap.high)) {
      std::ostringstream msg;
      msg << "OP " << op << " outside the curves' overlap [" << overlap.low
          << ", " << overlap.high << "]";
      throw std::domain_error(msg.str());
    }
  }
  DominanceResult result;
  for (double op : op_grid) {
    const InterpolatedIp a = interpolate_ip(curve_a, op);
    const InterpolatedIp b = interpolate_ip(curve_b, op);
    const double tol = tolerance.absolute +
                       tolerance.se_multiplier * std::hypot(a.se, b.se);
    const double margin = b.ip + tol - a.ip;
    result.op_grid.push_back(op);
    result.ip_a.push_back(a.ip);
    result.ip_b.push_back(b.ip);
    result.tolerance.push_back(tol);
    result.margin.push_back(margin);
    if (margin < 0.0) result.dominant = false;
  }
  return result;
}

}  // namespace srt
