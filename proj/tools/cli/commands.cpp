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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "srt/analytic.hpp"
#include "srt/estimator.hpp"
#include "srt/montecarlo.hpp"
#include "srt/sweep.hpp"

namespace srt::cli {

namespace {

RunOptions run_options(const RunConfig& c) {
  RunOptions o;
  o.master_seed = c.seed;
  o.workers = c.workers;
  o.decoupled = c.decoupled;
  return o;
}

// Geometric R_e grid with the configured point count, independent of rs.
std::vector<double> preset_grid(const RunConfig& c, double rs, double re_max) {
  return redundancy_grid(rs, 0.05, re_max, c.ro_points);
}

void append(std::vector<ResultRecord>& out, const SrtCurve& curve,
            double snr_db) {
  const auto recs = to_records(curve, snr_db);
  out.insert(out.end(), recs.begin(), recs.end());
}

RunConfig relay_figure_config(const RunConfig& base) {
  RunConfig c = base;
  c.snr_db = 15.0;
  c.var_sd = 1.0;
  c.var_se = 0.2;
  c.var_si = {2.0};
  c.var_id = {2.0};
  c.var_ie = {0.2};
  return c;
}

}  // namespace

std::vector<ResultRecord> simulate_records(const RunConfig& config,
                                           GridSpacing spacing) {
  config.validate();
  const std::vector<double> grid = config.ro_grid(spacing);
  std::vector<ResultRecord> out;
  for (Scheme scheme : config.parsed_schemes()) {
    const std::size_t n = scheme == Scheme::dt ? 0 : config.relays;
    const SystemParams params = config.scenario(config.rs, n);
    append(out,
           build_curve(params, scheme, grid, config.trials,
                       run_options(config)),
           config.snr_db);
  }
  return out;
}

std::vector<ResultRecord> dt_curve_records(const RunConfig& config) {
  config.validate();
  const SystemParams params = config.scenario(config.rs, 0);
  std::vector<ResultRecord> out;
  append(out, analytic_dt_curve(params, config.ro_grid(GridSpacing::geometric)),
         config.snr_db);
  return out;
}

std::vector<ResultRecord> preset_records(std::string_view name,
                                         const RunConfig& config) {
  config.validate();
  std::vector<ResultRecord> out;
  if (name == "fig3") {
    RunConfig c = config;
    c.snr_db = 15.0;
    c.var_sd = 1.0;
    c.var_se = 0.1;
    for (double rs : {0.2, 0.6}) {
      const SystemParams p = c.scenario(rs, 0);
      append(out, analytic_dt_curve(p, preset_grid(c, rs, 4.0)), c.snr_db);
    }
    return out;
  }
  // The relay figures sweep R_e up to 10 bit/s/Hz so every scheme's OP
  // reaches 0.5.
  const RunConfig c = relay_figure_config(config);
  const RunOptions options = run_options(c);
  auto relay_curves = [&](double rs, std::size_t n) {
    const std::vector<double> grid = preset_grid(c, rs, 10.0);
    for (Scheme s : {Scheme::srs, Scheme::mrs}) {
      append(out, build_curve(c.scenario(rs, n), s, grid, c.trials, options),
             c.snr_db);
    }
  };
  auto dt_curve = [&](double rs) {
    append(out,
           build_curve(c.scenario(rs, 0), Scheme::dt, preset_grid(c, rs, 10.0),
                       c.trials, options),
           c.snr_db);
  };
  if (name == "fig5") {
    for (double rs : {0.2, 0.6}) {
      dt_curve(rs);
      relay_curves(rs, 4);
    }
    return out;
  }
  if (name == "fig6") {
    dt_curve(0.6);
    relay_curves(0.6, 4);
    relay_curves(0.6, 8);
    return out;
  }
  throw ConfigError("preset", "unknown preset '" + std::string(name) +
                                  "' (expected fig3, fig5 or fig6)");
}

namespace {

// Gate for m simultaneous Monte Carlo comparisons: at least 3 standard
// errors, widened so the family-wise false-alarm rate stays below 1e-3.
double comparison_gate(std::size_t m) {
  const double family = 1e-3;
  return std::max(3.0, normal_quantile_two_sided(
                           1.0 - family / double(std::max<std::size_t>(m, 1))));
}

double binomial_se(double p, std::uint64_t n) {
  return std::sqrt(std::max(p * (1.0 - p), 0.0) / double(n));
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

// Tracks the worst standardized deviation across a family of comparisons.
struct ZTracker {
  double worst = 0.0;
  std::size_t failures = 0;
  std::size_t count = 0;
  std::size_t exact = 0;

  void add(double estimate, double truth, double se, double gate) {
    ++count;
    const double diff = std::abs(estimate - truth);
    const double z = se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : INFINITY);
    worst = std::max(worst, z);
    if (!(diff <= gate * se)) ++failures;
  }

  // Counts against an exact probability. Outside the z gate, a count whose
  // exact binomial tail still clears the gate's level passes; the normal
  // approximation breaks down when n p is of order one.
  void add(const BernoulliEstimator& est, double truth, double gate) {
    ++count;
    const double se = binomial_se(truth, est.trials);
    const double diff = std::abs(est.rate() - truth);
    const double z = se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : INFINITY);
    worst = std::max(worst, z);
    if (diff <= gate * se) return;
    const double level = std::erfc(gate / std::sqrt(2.0));
    if (binomial_two_sided_tail(est, truth) < level) {
      ++failures;
    } else {
      ++exact;
    }
  }

  CheckResult result(std::string name, double gate) const {
    CheckResult r{std::move(name), failures == 0, false, {}};
    r.detail = std::to_string(count) + " comparisons, worst |z| = " +
               sci(worst) + ", gate " + sci(gate);
    if (exact > 0) {
      r.detail += ", " + std::to_string(exact) + " passed on the exact tail";
    }
    return r;
  }
};

BernoulliEstimator counted(double rate, std::uint64_t n) {
  return {static_cast<std::uint64_t>(std::llround(rate * double(n))), n};
}

CheckResult skipped(std::string name, std::string why) {
  return {std::move(name), true, true, std::move(why)};
}

}  // namespace

std::vector<CheckResult> run_validation(const RunConfig& config) {
  config.validate();
  std::vector<CheckResult> checks;
  const RunOptions options = run_options(config);
  const std::uint64_t n = config.trials;
  const std::vector<double> grid = config.ro_grid(GridSpacing::geometric);

  // DT closed-form round trip.
  const SystemParams direct = config.scenario(config.rs, 0);
  const auto dt = analytic::DtClosedForm::from(direct);
  {
    double worst = 0.0;
    for (int k = 1; k <= 100; ++k) {
      const double ro = config.rs + 4.0 * k / 100.0;
      worst = std::max(worst, std::abs(dt.ip_of_op(dt.outage(ro)) -
                                       dt.intercept(ro - config.rs)));
    }
    checks.push_back({"dt-round-trip", worst <= 1e-12, false,
                      "max |IP(OP(R_o)) - IP(R_e)| = " + sci(worst)});
  }

  // DT Monte Carlo against the closed forms.
  const SrtCurve dt_curve = build_curve(direct, Scheme::dt, grid, n, options);
  {
    const double gate = comparison_gate(2 * grid.size());
    ZTracker z;
    for (const SrtPoint& pt : dt_curve.points) {
      const double op = dt.outage(pt.overall_rate);
      const double ip = dt.intercept(pt.overall_rate - config.rs);
      z.add(counted(pt.op_hat, n), op, gate);
      z.add(counted(pt.ip_hat, n), ip, gate);
    }
    checks.push_back(z.result("dt-monte-carlo", gate));
  }

  if (config.relays == 0) {
    for (const char* name :
         {"decoding-set-pmf", "srs-outage-oracle", "relay-intercept-oracle",
          "per-trial-dominance", "curve-dominance"}) {
      checks.push_back(skipped(name, "no relays configured"));
    }
    return checks;
  }

  const SystemParams relay = config.scenario(config.rs, config.relays);
  const bool enumerable = relay.n_relays <= analytic::kMaxPmfRelays;

  // Decoding-set PMF where the average relay decodes with probability 1/2,
  // so every subset carries comparable mass.
  if (enumerable) {
    const double mean_si =
        std::accumulate(relay.var_si.begin(), relay.var_si.end(), 0.0) /
        double(relay.n_relays);
    const double ro_half = std::max(
        relay.alpha * std::log2(1.0 + mean_si * relay.snr * std::log(2.0)),
        config.rs + 0.05);
    const SystemParams at = relay.with_overall_rate(ro_half);
    const std::vector<double> pmf = analytic::decoding_set_pmf(at);
    RunOptions pmf_options = options;
    pmf_options.stream = static_cast<std::uint32_t>(grid.size());
    const RelayComparisonCounts counts = run_relay_comparison(at, n, pmf_options);
    const double gate = comparison_gate(pmf.size());
    ZTracker z;
    for (std::size_t m = 0; m < pmf.size(); ++m) {
      z.add(BernoulliEstimator{counts.decoding_set_counts[m], n}, pmf[m], gate);
    }
    const double total = std::accumulate(pmf.begin(), pmf.end(), 0.0);
    CheckResult r = z.result("decoding-set-pmf", gate);
    r.passed = r.passed && std::abs(total - 1.0) <= 1e-12;
    r.detail += ", R_o = " + sci(ro_half) + ", sum - 1 = " + sci(total - 1.0);
    checks.push_back(std::move(r));
  } else {
    checks.push_back(skipped("decoding-set-pmf", "N > 20"));
  }

  // Coupled SRS/MRS runs over the grid.
  SrtCurve srs_curve{Scheme::srs, relay, {}};
  SrtCurve mrs_curve{Scheme::mrs, relay, {}};
  std::vector<RelayComparisonCounts> runs;
  std::uint64_t mrs_only = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    RunOptions point = options;
    point.stream = static_cast<std::uint32_t>(k);
    RelayComparisonCounts c =
        run_relay_comparison(relay.with_overall_rate(grid[k]), n, point);
    srs_curve.points.push_back(SrtPoint::from_counts(grid[k], c.srs, config.seed));
    mrs_curve.points.push_back(SrtPoint::from_counts(grid[k], c.mrs, config.seed));
    mrs_only += c.mrs_only_outages;
    runs.push_back(std::move(c));
  }

  if (enumerable) {
    const double gate = comparison_gate(grid.size());
    ZTracker z;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double op = analytic::srs_outage(relay.with_overall_rate(grid[k]));
      z.add(runs[k].srs.outage, op, gate);
    }
    checks.push_back(z.result("srs-outage-oracle", gate));
  } else {
    checks.push_back(skipped("srs-outage-oracle", "N > 20"));
  }

  if (std::adjacent_find(relay.var_ie.begin(), relay.var_ie.end(),
                         std::not_equal_to<>()) == relay.var_ie.end()) {
    const double gate = comparison_gate(3 * grid.size());
    ZTracker z;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double ip =
          analytic::relay_intercept(relay.with_overall_rate(grid[k]));
      const double se = binomial_se(ip, n);
      z.add(runs[k].srs.intercept, ip, gate);
      z.add(runs[k].mrs.intercept, ip, gate);
      z.add(runs[k].mrs.intercept.rate(), runs[k].srs.intercept.rate(),
            std::sqrt(2.0) * se, gate);
    }
    checks.push_back(z.result("relay-intercept-oracle", gate));
  } else {
    checks.push_back(skipped("relay-intercept-oracle",
                             "heterogeneous var-ie; Monte Carlo only"));
  }

  checks.push_back({"per-trial-dominance", mrs_only == 0, false,
                    std::to_string(mrs_only) +
                        " trials with MRS outage but no SRS outage"});

  {
    const std::vector<double> wanted{0.01, 0.02, 0.05, 0.1,
                                     0.2,  0.3,  0.4,  0.5};
    const OpRange a = op_range(mrs_curve);
    const OpRange b = op_range(srs_curve);
    const OpRange d = op_range(dt_curve);
    const double lo = std::max({a.low, b.low, d.low});
    const double hi = std::min({a.high, b.high, d.high});
    std::vector<double> ops;
    for (double op : wanted) {
      if (op >= lo && op <= hi) ops.push_back(op);
    }
    CheckResult r{"curve-dominance", false, false, {}};
    if (ops.empty()) {
      r.detail = "curves share no OP in {0.01..0.5}; common range [" +
                 sci(lo) + ", " + sci(hi) + "]";
    } else {
      const DominanceTolerance tol{0.0, 3.0};
      const auto mrs_srs = dominance_check(mrs_curve, srs_curve, ops, tol);
      const auto srs_dt = dominance_check(srs_curve, dt_curve, ops, tol);
      r.passed = mrs_srs.dominant && srs_dt.dominant;
      const double m1 = *std::min_element(mrs_srs.margin.begin(), mrs_srs.margin.end());
      const double m2 = *std::min_element(srs_dt.margin.begin(), srs_dt.margin.end());
      r.detail = "MRS<=SRS min margin " + sci(m1) + ", SRS<=DT min margin " +
                 sci(m2) + " over " + std::to_string(ops.size()) + " OP values";
    }
    checks.push_back(std::move(r));
  }
  return checks;
}

void emit(const RunConfig& config, const std::vector<ResultRecord>& records,
          std::ostream& stdout_stream) {
  std::ostringstream buffer;
  if (config.output_format() == OutputFormat::csv) {
    write_csv(buffer, records);
  } else {
    write_json_lines(buffer, records);
  }
  if (config.out == "-" || config.out.empty()) {
    stdout_stream << buffer.str();
    return;
  }
  std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
  file << buffer.str();
  file.close();
  if (!file) throw std::runtime_error("cannot write output file '" + config.out + "'");
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Security-reliability tradeoff simulator for direct, "
               "single-relay and multi-relay transmission"};
  app.require_subcommand(1);
  RunConfig config;
  add_run_options(app, config);

  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo curves on an evenly spaced R_o grid");
  auto* sweep = app.add_subcommand(
      "sweep", "Monte Carlo curves on a geometric R_e = R_o - R_s grid");
  auto* validate = app.add_subcommand(
      "validate", "Cross-check simulation against closed forms");
  auto* dt_curve = app.add_subcommand(
      "dt-curve", "Closed-form direct-transmission curve (no Monte Carlo)");
  auto* preset = app.add_subcommand("preset", "Figure presets");
  std::string preset_name;
  preset->add_option("name", preset_name, "fig3, fig5 or fig6")
      ->required()
      ->check(CLI::IsMember(kPresetNames));
  for (CLI::App* sub : {simulate, sweep, validate, dt_curve, preset}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (validate->parsed()) {
      const std::vector<CheckResult> checks = run_validation(config);
      bool ok = true;
      for (const CheckResult& c : checks) {
        out << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name
            << ": " << c.detail << '\n';
        ok = ok && c.passed;
      }
      out << (ok ? "all checks passed" : "validation FAILED") << '\n';
      return ok ? 0 : 1;
    }
    std::vector<ResultRecord> records;
    if (simulate->parsed()) {
      records = simulate_records(config, GridSpacing::linear);
    } else if (sweep->parsed()) {
      records = simulate_records(config, GridSpacing::geometric);
    } else if (dt_curve->parsed()) {
      records = dt_curve_records(config);
    } else {
      records = preset_records(preset_name, config);
    }
    emit(config, records, out);
    return 0;
  } catch (const ConfigError& e) {
    err << "error: invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace srt::cli
