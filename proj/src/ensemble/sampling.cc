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

#include "radproof/ensemble/sampling.h"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "radproof/common/error.h"

namespace radproof::ensemble {

SampleResult StratifiedSample(const std::vector<Detection>& detections,
                              std::size_t per_type, Seed seed) {
  std::unordered_set<std::string> seen;
  std::array<std::vector<std::size_t>, 4> strata;
  for (std::size_t i = 0; i < detections.size(); ++i) {
    if (!seen.insert(detections[i].report_id).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "repeated report id '" + detections[i].report_id + "'");
    }
    strata[Index(detections[i].error_type)].push_back(i);
  }
  SampleResult result;
  for (const ErrorType type : kAllErrorTypes) {
    const std::size_t t = Index(type);
    std::vector<std::size_t>& pool = strata[t];
    result.stratum_size[t] = pool.size();
    const std::size_t take = std::min(per_type, pool.size());
    if (take < per_type) result.shortfall = true;
    // Partial Fisher-Yates: the first `take` slots become the sample.
    Rng rng(DeriveSeed(seed, t));
    for (std::size_t i = 0; i < take; ++i) {
      const std::size_t j = i + rng.UniformIndex(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> chosen(pool.begin(), pool.begin() + take);
    std::sort(chosen.begin(), chosen.end());
    for (const std::size_t i : chosen) result.sample.push_back(detections[i]);
    result.taken[t] = take;
  }
  return result;
}

}  // namespace radproof::ensemble
