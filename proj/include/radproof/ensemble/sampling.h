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

#ifndef RADPROOF_ENSEMBLE_SAMPLING_H_
#define RADPROOF_ENSEMBLE_SAMPLING_H_

#include <array>
#include <cstddef>
#include <vector>

#include "radproof/common/rng.h"
#include "radproof/ensemble/vote.h"

namespace radproof::ensemble {

struct SampleResult {
  // Grouped by error type in canonical order; input order within a type.
  std::vector<Detection> sample;
  std::array<std::size_t, 4> stratum_size{};
  std::array<std::size_t, 4> taken{};
  // True when some stratum held fewer than per_type detections and was
  // taken whole.
  bool shortfall = false;
};

// Uniform sample of `per_type` detections per error type, without
// replacement. Each type draws from its own stream so adding detections of
// one type never changes another type's sample. Throws
// Error(kInvalidArgument) for repeated report ids.
SampleResult StratifiedSample(const std::vector<Detection>& detections,
                              std::size_t per_type, Seed seed);

}  // namespace radproof::ensemble

#endif  // RADPROOF_ENSEMBLE_SAMPLING_H_
