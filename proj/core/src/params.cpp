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

#include "srt/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srt {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::dt:
      return "dt";
    case Scheme::srs:
      return "srs";
    case Scheme::mrs:
      return "mrs";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "dt") return Scheme::dt;
  if (name == "srs") return Scheme::srs;
  if (name == "mrs") return Scheme::mrs;
  throw std::invalid_argument("unknown scheme '" + std::string(name) +
                              "' (expected dt, srs or mrs)");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool all_positive(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x) && x > 0.0; });
}

}  // namespace

void SystemParams::validate() const {
  require(std::isfinite(snr) && snr > 0.0, "snr must be positive");
  require(std::isfinite(secrecy_rate) && secrecy_rate >= 0.0,
          "rs must be nonnegative");
  require(std::isfinite(overall_rate) && overall_rate > secrecy_rate,
          "ro must exceed rs");
  require(std::isfinite(var_sd) && var_sd > 0.0, "var-sd must be positive");
  require(std::isfinite(var_se) && var_se > 0.0, "var-se must be positive");
  require(var_si.size() == n_relays, "var-si needs one entry per relay");
  require(var_id.size() == n_relays, "var-id needs one entry per relay");
  require(var_ie.size() == n_relays, "var-ie needs one entry per relay");
  require(all_positive(var_si), "var-si must be positive");
  require(all_positive(var_id), "var-id must be positive");
  require(all_positive(var_ie), "var-ie must be positive");
  require(alpha == 0.5 || alpha == 1.0, "alpha must be 0.5 or 1.0");
}

bool SystemParams::uniform_relay_variances() const {
  auto flat = [](const std::vector<double>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) ==
           v.end();
  };
  return flat(var_si) && flat(var_id) && flat(var_ie);
}

SystemParams SystemParams::with_overall_rate(double ro) const {
  SystemParams copy = *this;
  copy.overall_rate = ro;
  return copy;
}

SystemParams SystemParams::uniform(double snr_linear, double rs, double ro,
                                   std::size_t n_relays, double var_sd,
                                   double var_se, double var_si, double var_id,
                                   double var_ie, double alpha) {
  SystemParams p;
  p.snr = snr_linear;
  p.secrecy_rate = rs;
  p.overall_rate = ro;
  p.n_relays = n_relays;
  p.var_sd = var_sd;
  p.var_se = var_se;
  p.var_si.assign(n_relays, var_si);
  p.var_id.assign(n_relays, var_id);
  p.var_ie.assign(n_relays, var_ie);
  p.alpha = alpha;
  return p;
}

}  // namespace srt
