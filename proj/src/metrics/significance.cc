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

#include "radproof/metrics/significance.h"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>

#include "radproof/common/error.h"

namespace radproof::metrics {

StatTestResult PairedTTest(const std::vector<double>& xs,
                           const std::vector<double>& ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(xs.size()) + " vs " + std::to_string(ys.size()) +
                    " observations");
  }
  const std::size_t n = xs.size();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "paired t-test needs at least two pairs");
  }
  double mean = 0;
  for (std::size_t i = 0; i < n; ++i) mean += xs[i] - ys[i];
  mean /= static_cast<double>(n);
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = xs[i] - ys[i] - mean;
    ss += dev * dev;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  StatTestResult result;
  result.df = n - 1;
  result.method = "paired_t";
  if (sd == 0) {
    result.degenerate = true;
    if (mean == 0) {
      result.statistic = 0;
      result.p_value = 1;
    } else {
      result.statistic = std::copysign(
          std::numeric_limits<double>::infinity(), mean);
      result.p_value = 0;
    }
    return result;
  }
  result.statistic = mean / (sd / std::sqrt(static_cast<double>(n)));
  const boost::math::students_t dist(static_cast<double>(result.df));
  result.p_value = 2 * boost::math::cdf(boost::math::complement(
                           dist, std::fabs(result.statistic)));
  result.p_value = std::min(1.0, result.p_value);
  return result;
}

std::string_view SignificanceStars(double p_value) {
  if (p_value < 0.0001) return "****";
  if (p_value < 0.001) return "***";
  if (p_value < 0.01) return "**";
  if (p_value < 0.05) return "*";
  return "ns";
}

}  // namespace radproof::metrics
