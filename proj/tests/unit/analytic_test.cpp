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

#include "srt/analytic.hpp"

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "srt/channel.hpp"

using namespace srt;
using analytic::DtClosedForm;

namespace {

constexpr double kSnr15dB = 31.6228;

SystemParams relay_params(std::size_t n, double rs, double ro) {
  return SystemParams::uniform(kSnr15dB, rs, ro, n, 1.0, 0.2, 2.0, 2.0, 0.2);
}

// Composite Simpson quadrature of P(X + Y > t) = P(X > t)
//   + int_0^t f_X(x) P(Y > t - x) dx.
double exp_sum_tail_quadrature(double t, double a, double b) {
  const int n = 20000;
  const double h = t / n;
  auto f = [&](double x) { return std::exp(-x / a) / a * std::exp(-(t - x) / b); };
  double s = f(0.0) + f(t);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(k * h);
  return std::exp(-t / a) + s * h / 3.0;
}

// SRS outage without subset enumeration: relays are independent and each is
// "useful" only if it decodes and its second hop succeeds.
double srs_outage_product_form(const SystemParams& p) {
  const double t = snr_threshold(p.overall_rate, p.alpha) / p.snr;
  double out = 1.0;
  for (std::size_t i = 0; i < p.n_relays; ++i) {
    const double decode = std::exp(-t / p.var_si[i]);
    const double hop = std::exp(-t / p.var_id[i]);
    out *= 1.0 - decode * hop;
  }
  return out;
}

}  // namespace

TEST_CASE("dt outage") {
  const DtClosedForm dt{kSnr15dB, 0.2, 1.0, 0.1};
  CHECK(dt.outage(1e-12) == doctest::Approx(0.0));
  CHECK(dt.outage(1.0) == doctest::Approx(0.03113).epsilon(1e-3));
  CHECK(dt.outage(0.6) == doctest::Approx(0.01618).epsilon(1e-3));
  for (double ro = 0.1; ro < 6.0; ro += 0.1) {
    CHECK(dt.outage(ro + 0.05) > dt.outage(ro));
  }
}

TEST_CASE("dt intercept") {
  const DtClosedForm dt{kSnr15dB, 0.2, 1.0, 0.1};
  CHECK(dt.intercept(0.0) == 1.0);
  CHECK(dt.intercept(0.4) == doctest::Approx(0.9039).epsilon(1e-4));
  CHECK(dt.intercept(60.0) == 0.0);
  CHECK(dt.intercept(2000.0) == 0.0);
  for (double re = 0.0; re < 6.0; re += 0.1) {
    CHECK(dt.intercept(re + 0.05) < dt.intercept(re));
  }
}

TEST_CASE("dt ip_of_op") {
  const DtClosedForm dt{kSnr15dB, 0.2, 1.0, 0.1};
  CHECK(dt.ip_of_op(0.1) == doctest::Approx(0.4163).epsilon(1e-3));
  CHECK(dt.ip_of_op(1.0 - 1e-15) < 1e-12);
  CHECK(dt.ip_of_op(0.0) == 1.0);
  CHECK(dt.ip_of_op(dt.min_outage() * 0.5) == 1.0);
  CHECK(dt.ip_of_op(dt.min_outage()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(dt.ip_of_op(1.0), std::domain_error);
  CHECK_THROWS_AS(dt.ip_of_op(-0.1), std::domain_error);

  // R_s = 0 and equal variances collapse to (1 - p)^1.
  const DtClosedForm flat{kSnr15dB, 0.0, 0.7, 0.7};
  for (double p : {0.01, 0.3, 0.5, 0.9}) {
    CHECK(flat.ip_of_op(p) == doctest::Approx(1.0 - p).epsilon(1e-12));
  }
}

TEST_CASE("ip_of_op(outage(ro)) == intercept(ro - rs)") {
  for (double rs : {0.0, 0.2, 0.6, 1.5}) {
    for (double var_w : {0.1, 0.2, 1.0}) {
      const DtClosedForm dt{kSnr15dB, rs, 1.0, var_w};
      for (int k = 1; k <= 100; ++k) {
        const double ro = rs + 4.0 * k / 100.0;
        CHECK(std::abs(dt.ip_of_op(dt.outage(ro)) - dt.intercept(ro - rs)) <
              1e-12);
      }
    }
  }
}

TEST_CASE("tradeoff shape: IP falls with OP, rises with R_s") {
  const DtClosedForm low{db_to_linear(15.0), 0.2, 1.0, 0.1};
  const DtClosedForm high{db_to_linear(15.0), 0.6, 1.0, 0.1};
  double prev = 2.0;
  for (double p = high.min_outage() + 1e-3; p < 0.999; p += 0.01) {
    const double ip = high.ip_of_op(p);
    CHECK(ip < prev);
    prev = ip;
    CHECK(high.ip_of_op(p) >= low.ip_of_op(p));
  }
}

TEST_CASE("decoding_set_pmf") {
  SUBCASE("single relay") {
    auto p = relay_params(1, 0.2, 1.0);
    const double t = snr_threshold(1.0, 1.0) / kSnr15dB;
    p.var_si = {-t / std::log(0.9)};
    const auto pmf = analytic::decoding_set_pmf(p);
    REQUIRE(pmf.size() == 2);
    CHECK(pmf[0] == doctest::Approx(0.1));
    CHECK(pmf[1] == doctest::Approx(0.9));
  }
  SUBCASE("two relays, product form") {
    auto p = relay_params(2, 0.2, 1.0);
    const double t = snr_threshold(1.0, 1.0) / kSnr15dB;
    p.var_si.assign(2, -t / std::log(0.9));
    const auto pmf = analytic::decoding_set_pmf(p);
    CHECK(pmf[0b00] == doctest::Approx(0.01));
    CHECK(pmf[0b01] == doctest::Approx(0.09));
    CHECK(pmf[0b10] == doctest::Approx(0.09));
    CHECK(pmf[0b11] == doctest::Approx(0.81));
  }
  SUBCASE("relay decode probability at 15 dB, var 2, R_o 1") {
    const auto probs = analytic::relay_decode_probabilities(relay_params(4, 0.2, 1.0));
    for (double q : probs) CHECK(q == doctest::Approx(0.98431).epsilon(1e-5));
  }
  SUBCASE("sums to one for every N up to 20") {
    for (std::size_t n = 1; n <= 20; ++n) {
      auto p = relay_params(n, 0.2, 2.5);
      for (std::size_t i = 0; i < n; ++i) p.var_si[i] = 0.5 + 0.3 * double(i);
      const auto pmf = analytic::decoding_set_pmf(p);
      CHECK(pmf.size() == (std::size_t{1} << n));
      CHECK(std::abs(std::accumulate(pmf.begin(), pmf.end(), 0.0) - 1.0) < 1e-12);
    }
  }
  SUBCASE("refuses N = 0 and N > 20") {
    CHECK_THROWS_AS(analytic::decoding_set_pmf(relay_params(21, 0.2, 1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(analytic::decoding_set_pmf(relay_params(0, 0.2, 1.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("srs outage closed form") {
  SUBCASE("N = 1 total probability") {
    const auto p = relay_params(1, 0.2, 1.5);
    const double t = snr_threshold(1.5, 1.0) / kSnr15dB;
    const double p0 = std::exp(-t / 2.0);
    CHECK(analytic::srs_outage(p) ==
          doctest::Approx((1 - p0) + p0 * (1 - std::exp(-t / 2.0))).epsilon(1e-14));
  }
  SUBCASE("perfect second hop leaves only the empty set") {
    auto p = relay_params(3, 0.2, 3.0);
    p.var_id.assign(3, 1e300);
    CHECK(analytic::srs_outage(p) ==
          doctest::Approx(analytic::empty_set_probability(p)).epsilon(1e-12));
  }
  SUBCASE("subset enumeration agrees with the product form") {
    for (std::size_t n : {1u, 2u, 4u, 8u, 12u}) {
      for (double ro : {0.3, 1.0, 3.0, 6.0}) {
        for (double alpha : {0.5, 1.0}) {
          auto p = relay_params(n, 0.2, ro);
          p.alpha = alpha;
          for (std::size_t i = 0; i < n; ++i) p.var_id[i] = 1.0 + double(i);
          CHECK(analytic::srs_outage(p) ==
                doctest::Approx(srs_outage_product_form(p)).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("exp_sum_tail") {
  CHECK(analytic::exp_sum_tail(0.0, 1.0, 3.0) == 1.0);
  CHECK(analytic::exp_sum_tail(1.0, 1.0, 1.0) ==
        doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-15));
  CHECK(analytic::exp_sum_tail(1.0, 2.0, 1.0) ==
        doctest::Approx(2.0 * std::exp(-0.5) - std::exp(-1.0)).epsilon(1e-14));
  CHECK(analytic::exp_sum_tail(1.0, 2.0, 1.0) == doctest::Approx(0.8452).epsilon(1e-4));

  for (double a : {0.1, 0.2, 1.0, 2.0}) {
    for (double b : {0.15, 0.2, 1.5}) {
      for (double t : {0.01, 0.3, 1.0, 4.0}) {
        const double got = analytic::exp_sum_tail(t, a, b);
        CHECK(got == doctest::Approx(exp_sum_tail_quadrature(t, a, b)).epsilon(1e-9));
        CHECK(got == analytic::exp_sum_tail(t, b, a));
        CHECK(got >= std::exp(-t / std::max(a, b)));
      }
    }
  }
}

TEST_CASE("exp_sum_tail is continuous as the means merge") {
  for (double t : {0.1, 1.0, 5.0}) {
    const double erlang = analytic::exp_sum_tail(t, 1.0, 1.0);
    for (double eps : {1e-4, 1e-8, 1e-12, 1e-15}) {
      CHECK(analytic::exp_sum_tail(t, 1.0, 1.0 + eps) ==
            doctest::Approx(erlang).epsilon(std::max(1e-12, 2 * eps * t)));
    }
  }
  CHECK(analytic::exp_sum_tail(1e6, 1.0, 2.0) == 0.0);
  CHECK(analytic::exp_sum_tail(1e4, 0.01, 2000.0) ==
        doctest::Approx(std::exp(-1e4 / 2000.0) * 2000.0 / (2000.0 - 0.01)));
}

TEST_CASE("relay intercept closed form") {
  SUBCASE("vanishes as R_e grows") {
    CHECK(analytic::relay_intercept(relay_params(4, 0.2, 80.0)) == 0.0);
  }
  SUBCASE("silent relays reduce to the DT intercept") {
    auto p = relay_params(3, 0.2, 2.0);
    p.var_si.assign(3, 1e-300);
    const DtClosedForm dt{p.snr, p.secrecy_rate, p.var_sd, p.var_se};
    CHECK(analytic::relay_intercept(p) ==
          doctest::Approx(dt.intercept(p.redundancy())).epsilon(1e-14));
  }
  SUBCASE("heterogeneous eavesdropper links are refused") {
    auto p = relay_params(3, 0.2, 2.0);
    p.var_ie[1] = 0.3;
    CHECK_THROWS_AS(analytic::relay_intercept(p), analytic::OracleUnavailable);
  }
}
