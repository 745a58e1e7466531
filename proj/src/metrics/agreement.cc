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

#include "radproof/metrics/agreement.h"

#include <map>

#include "radproof/common/error.h"

namespace radproof::metrics {

KappaResult CohenKappa(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                    " ratings");
  }
  if (a.empty()) throw Error(ErrorCode::kInvalidArgument, "no ratings");
  const double n = static_cast<double>(a.size());
  std::map<std::string, std::pair<double, double>> marginals;
  double agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) ++agree;
    ++marginals[a[i]].first;
    ++marginals[b[i]].second;
  }
  KappaResult result;
  result.observed = agree / n;
  for (const auto& [category, counts] : marginals) {
    result.expected += (counts.first / n) * (counts.second / n);
  }
  if (marginals.size() == 1) {
    result.expected = 1;
    result.kappa = 1;
    result.degenerate = true;
    return result;
  }
  result.kappa = (result.observed - result.expected) / (1 - result.expected);
  return result;
}

}  // namespace radproof::metrics
