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

#ifndef RADPROOF_METRICS_AGREEMENT_H_
#define RADPROOF_METRICS_AGREEMENT_H_

#include <string>
#include <vector>

namespace radproof::metrics {

struct KappaResult {
  double kappa = 0;
  double observed = 0;  // p_o
  double expected = 0;  // p_e
  // Both raters used one and the same category, so p_e == 1. kappa is
  // reported as 1.
  bool degenerate = false;
};

// Cohen's kappa for two raters over arbitrary category names. Throws
// Error(kLengthMismatch) on unequal lengths and Error(kInvalidArgument) when
// empty.
KappaResult CohenKappa(const std::vector<std::string>& a,
                       const std::vector<std::string>& b);

}  // namespace radproof::metrics

#endif  // RADPROOF_METRICS_AGREEMENT_H_
