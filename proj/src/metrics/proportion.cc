//
// Copyright 2026 The radproof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "radproof/metrics/proportion.h"

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <string>

#include "radproof/common/error.h"

namespace radproof::metrics {

namespace {

void CheckSpec(const PowerSpec& s) {
  auto open_unit = [](double x) { return x > 0 && x < 1; };
  if (s.n == 0 || !open_unit(s.p0) || !open_unit(s.p1) || s.p0 == s.p1 ||
      !open_unit(s.alpha)) {
    throw Error(ErrorCode::kInvalidArgument,
                "power needs n >= 1, p0 != p1 in (0, 1) and alpha in (0, 1)");
  }
}

double ArcsinePower(const PowerSpec& s) {
  const boost::math::normal normal;
  const double tail = s.sidedness == Sidedness::kTwo ? s.alpha / 2 : s.alpha;
  const double z = boost::math::quantile(boost::math::complement(normal, tail));
  const double h = 2 * std::asin(std::sqrt(s.p1)) - 2 * std::asin(std::sqrt(s.p0));
  return boost::math::cdf(normal,
                          std::fabs(h) * std::sqrt(static_cast<double>(s.n)) - z);
}

// P(X <= k) and P(X >= k) for X ~ Binomial(n, p).
double Lower(std::size_t n, double p, std::size_t k) {
  return boost::math::cdf(
      boost::math::binomial(static_cast<double>(n), p), static_cast<double>(k));
}
double Upper(std::size_t n, double p, std::size_t k) {
  if (k == 0) return 1;
  return boost::math::cdf(boost::math::complement(
      boost::math::binomial(static_cast<double>(n), p),
      static_cast<double>(k - 1)));
}

double ExactPower(const PowerSpec& s) {
  const double tail = s.sidedness == Sidedness::kTwo ? s.alpha / 2 : s.alpha;
  const bool two = s.sidedness == Sidedness::kTwo;
  double power = 0;
  // Upper region {X >= ku}: smallest ku with P0(X >= ku) <= tail.
  if (two || s.p1 > s.p0) {
    std::size_t ku = s.n + 1;
    while (ku > 0 && Upper(s.n, s.p0, ku - 1) <= tail) --ku;
    if (ku <= s.n) power += Upper(s.n, s.p1, ku);
  }
  // Lower region {X <= kl}: largest kl with P0(X <= kl) <= tail.
  if (two || s.p1 < s.p0) {
    std::size_t count = 0;  // kl + 1
    while (count <= s.n && Lower(s.n, s.p0, count) <= tail) ++count;
    if (count > 0) power += Lower(s.n, s.p1, count - 1);
  }
  return power;
}

}  // namespace

Interval ProportionCiExact(std::size_t k, std::size_t n, double confidence) {
  if (n == 0 || k > n || !(confidence > 0 && confidence < 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 0 <= k <= n, n >= 1 and confidence in (0, 1)");
  }
  const double alpha = 1 - confidence;
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  Interval ci{0.0, 1.0};
  if (k > 0) {
    ci.low = boost::math::quantile(boost::math::beta_distribution<>(kd, nd - kd + 1),
                                   alpha / 2);
  }
  if (k < n) {
    ci.high = boost::math::quantile(
        boost::math::beta_distribution<>(kd + 1, nd - kd), 1 - alpha / 2);
  }
  return ci;
}

std::string_view PowerMethodName(PowerMethod method) {
  return method == PowerMethod::kArcsine ? "arcsine" : "exact";
}

double Power(const PowerSpec& spec, PowerMethod method) {
  CheckSpec(spec);
  return method == PowerMethod::kArcsine ? ArcsinePower(spec)
                                         : ExactPower(spec);
}

}  // namespace radproof::metrics
