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

#include <cmath>

#include "doctest.h"

using namespace srt;

namespace {

SystemParams fig3(double rs) {
  return SystemParams::uniform(db_to_linear(15.0), rs, rs + 1.0, 0, 1.0, 0.1,
                               1.0, 1.0, 1.0);
}

SystemParams relays(std::size_t n, double rs) {
  return SystemParams::uniform(db_to_linear(15.0), rs, rs + 1.0, n, 1.0, 0.2,
                               2.0, 2.0, 0.2);
}

RunOptions seeded(std::uint64_t seed) {
  RunOptions o;
  o.master_seed = seed;
  o.workers = 0;
  return o;
}

}  // namespace

TEST_CASE("grids") {
  const auto g = redundancy_grid(0.2);
  REQUIRE(g.size() == 40);
  CHECK(g.front() == doctest::Approx(0.25));
  CHECK(g.back() == doctest::Approx(4.2));
  for (std::size_t k = 1; k < g.size(); ++k) {
    CHECK(g[k] > g[k - 1]);
    if (k > 1) {
      CHECK((g[k] - 0.2) / (g[k - 1] - 0.2) ==
            doctest::Approx((g[1] - 0.2) / (g[0] - 0.2)));
    }
  }
  CHECK(redundancy_grid(0.6, 0.05, 4.0, 1) == std::vector<double>{0.65});
  CHECK(linear_grid(1.0, 2.0, 3) == std::vector<double>{1.0, 1.5, 2.0});
  CHECK(linear_grid(1.0, 2.0, 1) == std::vector<double>{1.0});
  CHECK_THROWS_AS(redundancy_grid(0.2, 0.0, 4.0), std::domain_error);
}

TEST_CASE("build_curve validates its grid") {
  const auto p = fig3(0.6);
  const std::vector<double> below{0.6, 1.0};
  CHECK_THROWS_AS(build_curve(p, Scheme::dt, below, 10, seeded(1)), std::domain_error);
  const std::vector<double> unsorted{1.0, 0.9};
  CHECK_THROWS_AS(build_curve(p, Scheme::dt, unsorted, 10, seeded(1)), std::domain_error);
  const std::vector<double> one{1.0};
  const SrtCurve c = build_curve(p, Scheme::dt, one, 10, seeded(1));
  CHECK(c.points.size() == 1);
  CHECK(c.points[0].trials == 10);
}

TEST_CASE("points use distinct streams under a shared seed") {
  const auto p = fig3(0.2);
  const std::vector<double> same{1.0, 1.0 + 1e-13};
  const SrtCurve c = build_curve(p, Scheme::dt, same, 100'000, seeded(4));
  CHECK(c.points[0].op_hat != c.points[1].op_hat);
}

TEST_CASE("DT curve over 40 points tracks the closed form") {
  for (double rs : {0.2, 0.6}) {
    const auto p = fig3(rs);
    const auto grid = redundancy_grid(rs);
    const SrtCurve mc = build_curve(p, Scheme::dt, grid, 100'000, seeded(9));
    const SrtCurve exact = analytic_dt_curve(p, grid);
    REQUIRE(mc.points.size() == 40);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const SrtPoint& e = exact.points[k];
      const double se_op = std::sqrt(e.op_hat * (1 - e.op_hat) / 1e5);
      const double se_ip = std::sqrt(e.ip_hat * (1 - e.ip_hat) / 1e5);
      CHECK(std::abs(mc.points[k].op_hat - e.op_hat) <= 3 * se_op);
      CHECK(std::abs(mc.points[k].ip_hat - e.ip_hat) <= 3 * se_ip);
    }
  }
}

TEST_CASE("SRS outage at N = 4, R_s = 0.6 brackets [1e-3, 0.5]") {
  const auto p = relays(4, 0.6);
  // Frozen from the per-relay product form (1 - e^{-2t/2})^4, t = (2^R_o - 1)/snr.
  CHECK(analytic::srs_outage(p.with_overall_rate(0.7)) ==
        doctest::Approx(1.4622375673e-07).epsilon(1e-8));
  CHECK(analytic::srs_outage(p.with_overall_rate(4.0)) ==
        doctest::Approx(0.020352264125).epsilon(1e-10));
  // R_o = 4 stops short of OP = 0.5 (reached near R_o = 5.886); the
  // bracket holds once the grid extends to R_o = 6.
  CHECK(analytic::srs_outage(p.with_overall_rate(0.7)) <= 1e-3);
  CHECK(analytic::srs_outage(p.with_overall_rate(6.0)) >= 0.5);

  const std::vector<double> ends{0.7, 6.0};
  const SrtCurve mc = build_curve(p, Scheme::srs, ends, 100'000, seeded(3));
  CHECK(mc.points.front().op_hat <= 1e-3);
  CHECK(mc.points.back().op_hat >= 0.5);
}

TEST_CASE("dominance_check") {
  const auto grid = redundancy_grid(0.2, 0.05, 8.0, 30);
  const SrtCurve dt = analytic_dt_curve(fig3(0.2), grid);
  const std::vector<double> ops{0.01, 0.05, 0.1, 0.3};

  SUBCASE("a curve dominates itself at zero tolerance") {
    const DominanceResult r = dominance_check(dt, dt, ops, {});
    CHECK(r.dominant);
    for (double m : r.margin) CHECK(m == 0.0);
  }
  SUBCASE("lower R_s dominates higher R_s") {
    const SrtCurve worse = analytic_dt_curve(fig3(0.6), redundancy_grid(0.6, 0.05, 8.0, 30));
    const std::vector<double> shared{0.05, 0.1, 0.3};
    CHECK(dominance_check(dt, worse, shared, {}).dominant);
    const DominanceResult rev = dominance_check(worse, dt, shared, {});
    CHECK_FALSE(rev.dominant);
    for (double m : rev.margin) CHECK(m < 0.0);
    CHECK(dominance_check(worse, dt, shared, {1.0, 0.0}).dominant);
  }
  SUBCASE("OP outside the overlap is a domain error") {
    const std::vector<double> outside{1e-6};
    CHECK_THROWS_WITH_AS(dominance_check(dt, dt, outside, {}),
                         doctest::Contains("overlap"), std::domain_error);
  }
}

TEST_CASE("interpolation is linear between neighbouring OPs") {
  SrtCurve c;
  c.points = {SrtPoint::exact(1.0, 0.1, 0.8), SrtPoint::exact(2.0, 0.3, 0.4),
              SrtPoint::exact(3.0, 0.2, 0.6)};
  CHECK(interpolate_ip(c, 0.15).ip == doctest::Approx(0.7));
  CHECK(interpolate_ip(c, 0.25).ip == doctest::Approx(0.5));
  CHECK(interpolate_ip(c, 0.3).ip == doctest::Approx(0.4));
  CHECK(op_range(c).low == 0.1);
  CHECK(op_range(c).high == 0.3);
  CHECK_THROWS_AS(interpolate_ip(c, 0.31), std::domain_error);
}

TEST_CASE("MRS dominates SRS, and N = 8 dominates N = 4 (smoke, 1e5 trials)") {
  const auto grid = redundancy_grid(0.6, 0.05, 10.0, 30);
  const SrtCurve srs4 = build_curve(relays(4, 0.6), Scheme::srs, grid, 100'000, seeded(2));
  const SrtCurve mrs4 = build_curve(relays(4, 0.6), Scheme::mrs, grid, 100'000, seeded(2));
  const SrtCurve srs8 = build_curve(relays(8, 0.6), Scheme::srs, grid, 100'000, seeded(2));
  const std::vector<double> ops{0.01, 0.05, 0.1, 0.2, 0.5};
  const DominanceTolerance tol{0.0, 3.0};
  CHECK(dominance_check(mrs4, srs4, ops, tol).dominant);
  CHECK(dominance_check(srs8, srs4, ops, tol).dominant);
}
