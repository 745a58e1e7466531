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

#include "radproof/ensemble/adjudication.h"

#include <map>
#include <unordered_map>
#include <utility>

#include "json.hpp"
#include "radproof/common/error.h"
#include "radproof/metrics/proportion.h"

namespace radproof::ensemble {
namespace {

struct Tally {
  std::size_t sampled = 0;
  std::size_t complete = 0;
  std::size_t both = 0;
  std::size_t any = 0;
};

Accuracy Finish(const Tally& t, double confidence) {
  Accuracy a;
  a.n_sampled = t.sampled;
  a.n_complete = t.complete;
  a.n_both_confirmed = t.both;
  a.n_at_least_one = t.any;
  if (t.complete > 0) {
    const double n = static_cast<double>(t.complete);
    a.accuracy_both = static_cast<double>(t.both) / n;
    a.accuracy_any = static_cast<double>(t.any) / n;
    a.ci_both = metrics::ProportionCiExact(t.both, t.complete, confidence);
    a.ci_any = metrics::ProportionCiExact(t.any, t.complete, confidence);
  }
  return a;
}

nlohmann::ordered_json AccuracyJson(const Accuracy& a) {
  nlohmann::ordered_json j;
  j["n_sampled"] = a.n_sampled;
  j["n_complete"] = a.n_complete;
  j["n_both_confirmed"] = a.n_both_confirmed;
  j["n_at_least_one"] = a.n_at_least_one;
  j["accuracy_both"] = a.accuracy_both;
  j["accuracy_any"] = a.accuracy_any;
  auto interval = [](const std::optional<metrics::Interval>& ci) {
    if (!ci) return nlohmann::ordered_json(nullptr);
    return nlohmann::ordered_json::array({ci->low, ci->high});
  };
  j["ci_both"] = interval(a.ci_both);
  j["ci_any"] = interval(a.ci_any);
  return j;
}

}  // namespace

AdjudicationStats ComputeAdjudication(
    const std::vector<Detection>& sample, const std::vector<Judgment>& judgments,
    const std::array<std::string, 2>& reviewers, double confidence) {
  if (reviewers[0] == reviewers[1]) {
    throw Error(ErrorCode::kInvalidArgument,
                "the two reviewer ids must differ");
  }
  std::unordered_map<std::string, std::size_t> row;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (!row.emplace(sample[i].report_id, i).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "repeated report id '" + sample[i].report_id + "' in sample");
    }
  }
  // verdict[i][r]: reviewer r's judgment of sample[i].
  std::vector<std::array<std::optional<bool>, 2>> verdict(sample.size());
  for (const Judgment& j : judgments) {
    std::size_t r;
    if (j.reviewer_id == reviewers[0]) {
      r = 0;
    } else if (j.reviewer_id == reviewers[1]) {
      r = 1;
    } else {
      throw Error(ErrorCode::kUnknownReviewer,
                  "reviewer '" + j.reviewer_id + "' is not assigned");
    }
    const auto it = row.find(j.report_id);
    if (it == row.end()) {
      throw Error(ErrorCode::kUnknownReport,
                  "report '" + j.report_id + "' is not in the sample");
    }
    auto& slot = verdict[it->second][r];
    if (slot && !j.supersedes) {
      throw Error(ErrorCode::kDuplicateJudgment,
                  "reviewer '" + j.reviewer_id + "' already judged report '" +
                      j.report_id + "'");
    }
    if (!slot && j.supersedes) {
      throw Error(ErrorCode::kInvalidArgument,
                  "reviewer '" + j.reviewer_id + "' has no judgment of report '" +
                      j.report_id + "' to supersede");
    }
    slot = j.confirmed;
  }

  std::array<Tally, 4> per_type;
  Tally overall;
  std::vector<std::string> flags_a;
  std::vector<std::string> flags_b;
  AdjudicationStats stats;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    Tally& t = per_type[Index(sample[i].error_type)];
    ++t.sampled;
    ++overall.sampled;
    const auto& [a, b] = verdict[i];
    if (!a || !b) {
      ++stats.n_incomplete;
      continue;
    }
    ++t.complete;
    ++overall.complete;
    if (*a && *b) {
      ++t.both;
      ++overall.both;
    }
    if (*a || *b) {
      ++t.any;
      ++overall.any;
    }
    flags_a.push_back(*a ? "confirmed" : "rejected");
    flags_b.push_back(*b ? "confirmed" : "rejected");
  }
  for (std::size_t t = 0; t < 4; ++t) {
    stats.per_type[t] = Finish(per_type[t], confidence);
  }
  stats.overall = Finish(overall, confidence);
  if (!flags_a.empty()) stats.kappa = metrics::CohenKappa(flags_a, flags_b);
  return stats;
}

std::string AdjudicationStatsJson(const AdjudicationStats& stats) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json per_type;
  for (const ErrorType type : kAllErrorTypes) {
    per_type[std::string(ErrorTypeName(type))] =
        AccuracyJson(stats.per_type[Index(type)]);
  }
  j["per_type"] = per_type;
  j["overall"] = AccuracyJson(stats.overall);
  j["n_incomplete"] = stats.n_incomplete;
  j["incomplete"] = stats.n_incomplete > 0;
  if (stats.kappa) {
    j["kappa"] = {{"kappa", stats.kappa->kappa},
                  {"observed", stats.kappa->observed},
                  {"expected", stats.kappa->expected},
                  {"degenerate", stats.kappa->degenerate}};
  } else {
    j["kappa"] = nullptr;
  }
  return j.dump();
}

}  // namespace radproof::ensemble
