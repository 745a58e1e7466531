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

#ifndef RADPROOF_METRICS_PROPORTION_H_
#define RADPROOF_METRICS_PROPORTION_H_

#include <cstddef>
#include <string_view>

#include "radproof/metrics/classification.h"

namespace radproof::metrics {

// Clopper-Pearson interval for k successes in n trials. Throws
// Error(kInvalidArgument) unless 0 <= k <= n, n >= 1 and 0 < confidence < 1.
Interval ProportionCiExact(std::size_t k, std::size_t n, double confidence);

enum class Sidedness { kOne, kTwo };

struct PowerSpec {
  std::size_t n = 0;
  double p0 = 0;  // null proportion
  double p1 = 0;  // alternative proportion
  double alpha = 0.05;
  Sidedness sidedness = Sidedness::kTwo;
};

enum class PowerMethod { kArcsine, kExactBinomial };
std::string_view PowerMethodName(PowerMethod method);  // "arcsine", "exact"

// Power of the one-sample proportion test of p0 against p1.
//
// kArcsine: Phi(|h| sqrt(n) - z), h = 2 asin(sqrt(p1)) - 2 asin(sqrt(p0)),
// z = z_{1-alpha/2} (two-sided) or z_{1-alpha} (one-sided). Only the tail
// toward p1 is counted.
//
// kExactBinomial: probability under p1 of the exact binomial test's
// rejection region. Two-sided regions put at most alpha/2 in each tail under
// p0; one-sided regions put at most alpha in the tail toward p1.
//
// Throws Error(kInvalidArgument) unless n >= 1, 0 < p0, p1 < 1, p0 != p1
// and 0 < alpha < 1.
double Power(const PowerSpec& spec, PowerMethod method = PowerMethod::kArcsine);

}  // namespace radproof::metrics

#endif  // RADPROOF_METRICS_PROPORTION_H_
