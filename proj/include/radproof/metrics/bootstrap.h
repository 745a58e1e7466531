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

#ifndef RADPROOF_METRICS_BOOTSTRAP_H_
#define RADPROOF_METRICS_BOOTSTRAP_H_

#include <array>
#include <cstddef>
#include <vector>

#include "radproof/common/labels.h"
#include "radproof/common/rng.h"
#include "radproof/metrics/classification.h"

namespace radproof::metrics {

// Columns of a replicate row: the four per-type F1 values in ErrorType
// order, then macro-F1.
inline constexpr std::size_t kMacroColumn = 4;
using ReplicateRow = std::array<double, 5>;

struct BootstrapResult {
  std::vector<ReplicateRow> replicates;  // b rows
  std::array<Interval, 5> intervals;
};

// Resample indices of replicate `r`: n draws with replacement from a stream
// seeded by (seed, r). They depend only on (seed, r, n), so two models
// bootstrapped with the same seed over the same reports share resamples,
// which is what makes their replicate vectors paired.
std::vector<std::size_t> ResampleIndices(Seed seed, std::size_t replicate,
                                         std::size_t n);

// Percentile bootstrap with `b` replicates. Throws like Evaluate, and
// Error(kInvalidArgument) for empty input, b == 0 or a confidence outside
// (0, 1).
BootstrapResult Bootstrap(const std::vector<Label>& gold,
                          const std::vector<Label>& pred, std::size_t b,
                          Seed seed, double confidence = 0.95);

// Evaluate() plus bootstrap intervals on every F1 and on macro-F1.
EvalSummary EvaluateWithIntervals(const std::vector<Label>& gold,
                                  const std::vector<Label>& pred,
                                  std::size_t b, Seed seed,
                                  double confidence = 0.95);

// Quantile q of `values` with linear interpolation between order
// statistics at position q * (size - 1).
double Percentile(std::vector<double> values, double q);

// One column of a replicate matrix.
std::vector<double> Column(const std::vector<ReplicateRow>& rows,
                           std::size_t column);

}  // namespace radproof::metrics

#endif  // RADPROOF_METRICS_BOOTSTRAP_H_
