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

#include "radproof/metrics/classification.h"

#include <string>

#include "radproof/common/error.h"

namespace radproof::metrics {

namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::array<ConfusionCounts, 4> CountConfusion(const std::vector<Label>& gold,
                                              const std::vector<Label>& pred) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(gold.size()) + " gold labels vs " +
                    std::to_string(pred.size()) + " predictions");
  }
  std::array<ConfusionCounts, 4> counts{};
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == Label::kUnparseable) {
      throw Error(ErrorCode::kUnknownLabel,
                  "gold label " + std::to_string(i) + " is unparseable");
    }
    const auto g = ToErrorType(gold[i]);
    const auto p = ToErrorType(pred[i]);  // kUnparseable maps to none
    for (const ErrorType type : kAllErrorTypes) {
      ConfusionCounts& c = counts[Index(type)];
      const bool is_gold = g == type;
      const bool is_pred = p == type;
      if (is_gold && is_pred) {
        ++c.tp;
      } else if (is_pred) {
        ++c.fp;
      } else if (is_gold) {
        ++c.fn;
      } else {
        ++c.tn;
      }
    }
  }
  return counts;
}

double Precision(const ConfusionCounts& c) { return Ratio(c.tp, c.tp + c.fp); }

double Recall(const ConfusionCounts& c) { return Ratio(c.tp, c.tp + c.fn); }

double F1(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0 ? 0.0 : 2 * precision * recall / sum;
}

double MacroF1(const std::array<double, 4>& f1s) {
  return (f1s[0] + f1s[1] + f1s[2] + f1s[3]) / 4;
}

EvalSummary Evaluate(const std::vector<Label>& gold,
                     const std::vector<Label>& pred) {
  const auto counts = CountConfusion(gold, pred);
  EvalSummary summary;
  summary.n_reports = gold.size();
  std::array<double, 4> f1s{};
  for (std::size_t t = 0; t < 4; ++t) {
    TypeMetrics& m = summary.per_type[t];
    m.counts = counts[t];
    m.precision = Precision(m.counts);
    m.recall = Recall(m.counts);
    m.f1 = F1(m.precision, m.recall);
    f1s[t] = m.f1;
  }
  summary.macro_f1 = MacroF1(f1s);
  return summary;
}

}  // namespace radproof::metrics
