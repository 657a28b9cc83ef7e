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

#include "cli/config.hpp"

#include <cmath>

#include "CLI11.hpp"
#include "srt/rng.hpp"
#include "srt/sweep.hpp"

namespace srt::cli {

namespace {

void require(bool ok, const char* key, const std::string& message) {
  if (!ok) throw ConfigError(key, message);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

void check_variances(const char* key, const std::vector<double>& v,
                     std::size_t relays) {
  require(!v.empty(), key, "needs at least one value");
  require(v.size() == 1 || v.size() == relays, key,
          "give one value or one per relay (" + std::to_string(relays) + ")");
  for (double x : v) require(positive(x), key, "variances must be positive");
}

std::vector<double> broadcast(const std::vector<double>& v, std::size_t n) {
  if (v.size() == n) return v;
  return std::vector<double>(n, v.front());
}

}  // namespace

std::vector<Scheme> RunConfig::parsed_schemes() const {
  std::vector<Scheme> out;
  for (const std::string& name : schemes) {
    try {
      out.push_back(parse_scheme(name));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("scheme", e.what());
    }
  }
  return out;
}

OutputFormat RunConfig::output_format() const {
  if (format == "csv") return OutputFormat::csv;
  if (format == "json") return OutputFormat::json;
  throw ConfigError("format", "expected csv or json, got '" + format + "'");
}

void RunConfig::validate() const {
  require(!schemes.empty(), "scheme", "at least one scheme is required");
  for (Scheme s : parsed_schemes()) {
    require(s == Scheme::dt || relays >= 1, "relays",
            "relay schemes need at least one relay");
  }
  require(relays <= kMaxRelayIndex, "relays", "too many relays");
  require(std::isfinite(snr_db), "snr-db", "must be finite");
  require(std::isfinite(rs) && rs >= 0.0, "rs", "must be nonnegative");
  require(alpha == 0.5 || alpha == 1.0, "alpha", "must be 0.5 or 1.0");
  require(positive(var_sd), "var-sd", "must be positive");
  require(positive(var_se), "var-se", "must be positive");
  check_variances("var-si", var_si, relays);
  check_variances("var-id", var_id, relays);
  check_variances("var-ie", var_ie, relays);
  require(trials >= 1, "trials", "must be at least 1");
  require(ro_points >= 1, "ro-points", "must be at least 1");
  require(std::isfinite(ro_lo()) && ro_lo() > rs, "ro-min", "must exceed rs");
  require(std::isfinite(ro_hi()) && ro_hi() >= ro_lo(), "ro-max",
          "must be >= ro-min");
  require(ro_points == 1 || ro_hi() > ro_lo(), "ro-max",
          "must exceed ro-min when ro-points > 1");
  output_format();
}

std::vector<double> RunConfig::ro_grid(GridSpacing spacing) const {
  if (spacing == GridSpacing::linear) {
    return linear_grid(ro_lo(), ro_hi(), ro_points);
  }
  return redundancy_grid(rs, re_lo(), re_hi(), ro_points);
}

SystemParams RunConfig::scenario(double secrecy_rate,
                                 std::size_t n_relays) const {
  SystemParams p;
  p.snr = db_to_linear(snr_db);
  p.secrecy_rate = secrecy_rate;
  p.overall_rate = secrecy_rate + re_lo();
  p.n_relays = n_relays;
  p.var_sd = var_sd;
  p.var_se = var_se;
  p.var_si = broadcast(var_si, n_relays);
  p.var_id = broadcast(var_id, n_relays);
  p.var_ie = broadcast(var_ie, n_relays);
  p.alpha = alpha;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("scenario", e.what());
  }
  return p;
}

void add_run_options(CLI::App& app, RunConfig& c) {
  app.add_option("--scheme", c.schemes, "Schemes to run: dt, srs, mrs")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--relays", c.relays, "Number of relays N")
      ->capture_default_str();
  app.add_option("--rs", c.rs, "Secrecy rate R_s [bit/s/Hz]")
      ->capture_default_str();
  app.add_option("--ro-min", c.ro_min,
                 "Smallest overall rate R_o (default rs + 0.05)");
  app.add_option("--ro-max", c.ro_max,
                 "Largest overall rate R_o (default rs + 4)");
  app.add_option("--ro-points", c.ro_points, "Number of R_o grid points")
      ->capture_default_str();
  app.add_option("--snr-db", c.snr_db, "Transmit SNR P/N0 [dB]")
      ->capture_default_str();
  app.add_option("--alpha", c.alpha,
                 "Prelog of relay-scheme links: 1.0 or 0.5 (half duplex)")
      ->capture_default_str();
  app.add_option("--var-sd", c.var_sd, "Mean |h_sd|^2")->capture_default_str();
  app.add_option("--var-se", c.var_se, "Mean |h_se|^2")->capture_default_str();
  app.add_option("--var-si", c.var_si,
                 "Mean |h_si|^2: one value or a comma list per relay")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--var-id", c.var_id, "Mean |h_id|^2 (as --var-si)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--var-ie", c.var_ie, "Mean |h_ie|^2 (as --var-si)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--trials", c.trials, "Monte Carlo trials per grid point")
      ->capture_default_str();
  app.add_option("--seed", c.seed, "Master seed")
      ->envname("SRT_SIM_SEED")
      ->capture_default_str();
  app.add_option("--workers", c.workers,
                 "Worker threads (0 = hardware concurrency); never changes "
                 "results")
      ->capture_default_str();
  app.add_flag("--decoupled", c.decoupled,
               "Draw the intercept event from an independent realization");
  app.add_option("--out", c.out, "Output path, '-' for stdout")
      ->capture_default_str();
  app.add_option("--format", c.format, "Output format: csv or json")
      ->capture_default_str();
  app.set_config("--config", "", "Flat key=value file; keys are flag names");
  app.allow_config_extras(false);
}

}  // namespace srt::cli
