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

#ifndef RADPROOF_METRICS_CLASSIFICATION_H_
#define RADPROOF_METRICS_CLASSIFICATION_H_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "radproof/common/labels.h"
#include "radproof/common/rng.h"

namespace radproof::metrics {

// One-vs-rest counts for a single error type.
struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  bool operator==(const ConfusionCounts&) const = default;
};

struct Interval {
  double low = 0;
  double high = 0;
};

struct TypeMetrics {
  ConfusionCounts counts;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::optional<Interval> f1_ci;
};

struct EvalSummary {
  std::array<TypeMetrics, 4> per_type;  // indexed by Index(ErrorType)
  double macro_f1 = 0;
  std::optional<Interval> macro_f1_ci;
  std::size_t n_reports = 0;
  std::size_t bootstrap_b = 0;  // 0 when no intervals were computed
  Seed seed = 0;
};

// Per-type counts over the five-label space. A prediction of kUnparseable
// counts as kNone. Throws Error(kLengthMismatch) on unequal lengths and
// Error(kUnknownLabel) when a gold label is kUnparseable.
std::array<ConfusionCounts, 4> CountConfusion(const std::vector<Label>& gold,
                                              const std::vector<Label>& pred);

// Precision, recall and F1 with 0 for every 0/0.
double Precision(const ConfusionCounts& c);
double Recall(const ConfusionCounts& c);
double F1(double precision, double recall);

// Point estimates only; see Bootstrap() for intervals.
EvalSummary Evaluate(const std::vector<Label>& gold,
                     const std::vector<Label>& pred);

double MacroF1(const std::array<double, 4>& f1s);

}  // namespace radproof::metrics

#endif  // RADPROOF_METRICS_CLASSIFICATION_H_
