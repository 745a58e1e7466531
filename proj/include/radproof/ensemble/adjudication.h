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

#ifndef RADPROOF_ENSEMBLE_ADJUDICATION_H_
#define RADPROOF_ENSEMBLE_ADJUDICATION_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "radproof/ensemble/vote.h"
#include "radproof/metrics/agreement.h"
#include "radproof/metrics/classification.h"

namespace radproof::ensemble {

// A reviewer's verdict on one sampled report: does the detected error of
// the stated type exist?
struct Judgment {
  std::string report_id;
  std::string reviewer_id;
  bool confirmed = false;
  std::string submitted_at;  // ISO 8601 UTC
  std::string comment;
  // A correction: replaces the reviewer's judgment of the same report
  // while leaving the earlier record in place for audit.
  bool supersedes = false;

  bool operator==(const Judgment&) const = default;
};

struct Accuracy {
  std::size_t n_sampled = 0;
  std::size_t n_complete = 0;  // judged by both reviewers
  std::size_t n_both_confirmed = 0;
  std::size_t n_at_least_one = 0;
  double accuracy_both = 0;  // over n_complete; 0 when nothing is complete
  double accuracy_any = 0;
  std::optional<metrics::Interval> ci_both;  // absent when n_complete == 0
  std::optional<metrics::Interval> ci_any;
};

struct AdjudicationStats {
  std::array<Accuracy, 4> per_type;  // indexed by Index(ErrorType)
  Accuracy overall;
  // Sampled reports lacking a judgment from either reviewer. Rates above
  // cover complete reports only.
  std::size_t n_incomplete = 0;
  // Agreement between the reviewers' confirmed flags on complete reports.
  std::optional<metrics::KappaResult> kappa;
};

// Judgments are immutable records; the one in force for a (report,
// reviewer) is the first, or the latest superseding record after it.
// Throws Error(kUnknownReviewer) for a reviewer not in `reviewers`,
// Error(kUnknownReport) for a report outside `sample`,
// Error(kDuplicateJudgment) for a repeat that does not supersede, and
// Error(kInvalidArgument) for a superseding record with nothing before it
// or identical reviewer ids.
AdjudicationStats ComputeAdjudication(
    const std::vector<Detection>& sample, const std::vector<Judgment>& judgments,
    const std::array<std::string, 2>& reviewers, double confidence = 0.95);

// Stable JSON rendering used by the review API and the CLI.
std::string AdjudicationStatsJson(const AdjudicationStats& stats);

}  // namespace radproof::ensemble

#endif  // RADPROOF_ENSEMBLE_ADJUDICATION_H_
