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

#include "srt/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"

using namespace srt;

namespace {

SystemParams relay_scenario(std::size_t n = 4) {
  return SystemParams::uniform(db_to_linear(15.0), 0.2, 1.0, n, 1.0, 0.2, 2.0,
                               2.0, 0.2);
}

// Kolmogorov-Smirnov distance between a sample and Exp(mean).
double ks_exponential(std::vector<double> xs, double mean) {
  std::sort(xs.begin(), xs.end());
  const double n = double(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double cdf = -std::expm1(-xs[i] / mean);
    d = std::max({d, double(i + 1) / n - cdf, cdf - double(i) / n});
  }
  return d;
}

}  // namespace

TEST_CASE("link_capacity") {
  CHECK(link_capacity(0.0, 123.0, 1.0) == 0.0);
  CHECK(link_capacity(1.0, 1.0, 1.0) == 1.0);
  // Gain chosen as (2^1 - 1) / snr inverts back to one bit.
  CHECK(link_capacity(0.031623, 31.6228, 1.0) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(link_capacity(1.0, 1.0, 0.5) == 0.5);
  CHECK(link_capacity(2.0, 3.0, 1.0) >= link_capacity(1.5, 3.0, 1.0));
}

TEST_CASE("snr_threshold inverts link_capacity") {
  for (double rate : {0.05, 0.6, 1.0, 3.7}) {
    for (double prelog : {0.5, 1.0}) {
      const double snr = 31.6227766;
      const double gain = snr_threshold(rate, prelog) / snr;
      CHECK(link_capacity(gain, snr, prelog) == doctest::Approx(rate).epsilon(1e-12));
    }
  }
}

TEST_CASE("draw_realization is deterministic and sized by n_relays") {
  const SystemParams p = relay_scenario();
  const ChannelRealization a = draw_realization(p, {1, 0});
  const ChannelRealization b = draw_realization(p, {1, 0});
  CHECK(a == b);
  CHECK(a.h_si.size() == 4);
  CHECK(a.h_id.size() == 4);
  CHECK(a.h_ie.size() == 4);
  CHECK_FALSE(a == draw_realization(p, {1, 1}));

  const ChannelRealization direct = draw_realization(p, {1, 0}, LinkSet::direct);
  CHECK(direct.h_sd == a.h_sd);
  CHECK(direct.h_se == a.h_se);
  CHECK(direct.h_si.empty());
}

TEST_CASE("relay draws do not depend on how many relays exist") {
  const ChannelRealization small = draw_realization(relay_scenario(4), {9, 77});
  const ChannelRealization large = draw_realization(relay_scenario(8), {9, 77});
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(small.h_id[i] == large.h_id[i]);
    CHECK(small.h_ie[i] == large.h_ie[i]);
  }
}

TEST_CASE("empirical mean squared magnitudes over 1e6 trials") {
  const SystemParams p = relay_scenario(1);
  double sd = 0.0, ie = 0.0;
  const int n = 1'000'000;
  for (int t = 0; t < n; ++t) {
    const ChannelRealization r = draw_realization(p, {1, std::uint64_t(t)});
    sd += std::norm(r.h_sd);
    ie += std::norm(r.h_ie[0]);
  }
  CHECK(std::abs(sd / n - 1.0) < 0.005);
  CHECK(std::abs(ie / n - 0.2) < 0.002);
}

TEST_CASE("squared magnitudes follow Exp(variance) on every link") {
  SystemParams p = relay_scenario(1);
  p.var_sd = 1.0;
  p.var_se = 0.1;
  p.var_si = {2.0};
  p.var_id = {3.0};
  p.var_ie = {0.2};
  const int n = 100'000;
  std::vector<double> sd, se, si, id, ie;
  for (int t = 0; t < n; ++t) {
    const ChannelRealization r = draw_realization(p, {5, std::uint64_t(t)});
    sd.push_back(std::norm(r.h_sd));
    se.push_back(std::norm(r.h_se));
    si.push_back(std::norm(r.h_si[0]));
    id.push_back(std::norm(r.h_id[0]));
    ie.push_back(std::norm(r.h_ie[0]));
  }
  CHECK(ks_exponential(sd, 1.0) < 0.01);
  CHECK(ks_exponential(se, 0.1) < 0.01);
  CHECK(ks_exponential(si, 2.0) < 0.01);
  CHECK(ks_exponential(id, 3.0) < 0.01);
  CHECK(ks_exponential(ie, 0.2) < 0.01);
}

TEST_CASE("real and imaginary parts are uncorrelated with variance/2 each") {
  SystemParams p = relay_scenario(1);
  p.var_sd = 2.0;
  const int n = 100'000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (int t = 0; t < n; ++t) {
    const Complex h = draw_realization(p, {11, std::uint64_t(t)}).h_sd;
    sx += h.real();
    sy += h.imag();
    sxx += h.real() * h.real();
    syy += h.imag() * h.imag();
    sxy += h.real() * h.imag();
  }
  const double mx = sx / n, my = sy / n;
  const double vx = sxx / n - mx * mx, vy = syy / n - my * my;
  const double corr = (sxy / n - mx * my) / std::sqrt(vx * vy);
  CHECK(std::abs(corr) < 0.01);
  CHECK(vx == doctest::Approx(1.0).epsilon(0.02));
  CHECK(vy == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("partition invariance: any evaluation order gives the same draws") {
  const SystemParams p = relay_scenario(3);
  const int n = 10'000;
  std::vector<ChannelRealization> in_order;
  for (int t = 0; t < n; ++t) {
    in_order.push_back(draw_realization(p, {3, std::uint64_t(t)}));
  }
  std::vector<std::uint64_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), std::mt19937_64(2024));
  ChannelRealization reused;
  for (std::uint64_t t : order) {
    draw_realization_into(reused, p, {3, t});
    REQUIRE(reused == in_order[t]);
  }
}
