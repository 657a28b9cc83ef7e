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

#include "srt/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/normal.hpp>

namespace srt {

double BernoulliEstimator::rate() const {
  if (trials == 0) return 0.0;
  return static_cast<double>(successes) / static_cast<double>(trials);
}

double BernoulliEstimator::standard_error() const {
  if (trials == 0) return 0.0;
  const double p = rate();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

double binomial_two_sided_tail(const BernoulliEstimator& est, double p) {
  if (est.trials == 0 || !(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binomial_two_sided_tail: bad arguments");
  }
  const double k = static_cast<double>(est.successes);
  if (p == 0.0) return est.successes == 0 ? 1.0 : 0.0;
  if (p == 1.0) return est.successes == est.trials ? 1.0 : 0.0;
  const boost::math::binomial_distribution<double> dist(
      static_cast<double>(est.trials), p);
  const double lower = boost::math::cdf(dist, k);
  const double upper =
      k == 0.0 ? 1.0
               : boost::math::cdf(boost::math::complement(dist, k - 1.0));
  return std::min(1.0, 2.0 * std::min(lower, upper));
}

double normal_quantile_two_sided(double level) {
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("confidence level must lie in (0, 1)");
  }
  return boost::math::quantile(boost::math::normal_distribution<double>(),
                               0.5 + 0.5 * level);
}

Interval confidence_interval(const BernoulliEstimator& est, double level) {
  if (est.trials == 0) {
    throw std::invalid_argument("confidence interval of zero trials");
  }
  const double z = normal_quantile_two_sided(level);
  const double n = static_cast<double>(est.trials);
  const double p = est.rate();
  const double z2n = z * z / n;
  const double denom = 1.0 + z2n;
  const double center = (p + 0.5 * z2n) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n) / denom;
  Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
  // The score interval always contains p mathematically; pin the exact
  // endpoints that rounding can disturb.
  if (est.successes == 0) ci.low = 0.0;
  if (est.successes == est.trials) ci.high = 1.0;
  ci.low = std::min(ci.low, p);
  ci.high = std::max(ci.high, p);
  return ci;
}

}  // namespace srt
