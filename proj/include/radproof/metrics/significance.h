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

#ifndef RADPROOF_METRICS_SIGNIFICANCE_H_
#define RADPROOF_METRICS_SIGNIFICANCE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace radproof::metrics {

struct StatTestResult {
  double statistic = 0;
  double p_value = 1;
  std::size_t df = 0;
  std::string method;
  // Set when the differences have zero variance: statistic is 0 (p = 1) if
  // they are all zero and +/-infinity (p = 0) otherwise.
  bool degenerate = false;
};

// Two-sided paired t-test on d = xs - ys. Throws Error(kLengthMismatch) on
// unequal lengths and Error(kInvalidArgument) for fewer than two pairs.
StatTestResult PairedTTest(const std::vector<double>& xs,
                           const std::vector<double>& ys);

// "****" for p < 0.0001, "***" for p < 0.001, "**" for p < 0.01, "*" for
// p < 0.05 and "ns" otherwise.
std::string_view SignificanceStars(double p_value);

}  // namespace radproof::metrics

#endif  // RADPROOF_METRICS_SIGNIFICANCE_H_
