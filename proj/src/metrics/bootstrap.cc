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

#include "radproof/metrics/bootstrap.h"

#include <algorithm>
#include <cmath>

#include "radproof/common/error.h"

namespace radproof::metrics {

std::vector<std::size_t> ResampleIndices(Seed seed, std::size_t replicate,
                                         std::size_t n) {
  Rng rng(DeriveSeed(seed, replicate));
  std::vector<std::size_t> indices(n);
  for (auto& i : indices) i = rng.UniformIndex(n);
  return indices;
}

double Percentile(std::vector<double> values, double q) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "percentile of no values");
  }
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

std::vector<double> Column(const std::vector<ReplicateRow>& rows,
                           std::size_t column) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.at(column));
  return out;
}

BootstrapResult Bootstrap(const std::vector<Label>& gold,
                          const std::vector<Label>& pred, std::size_t b,
                          Seed seed, double confidence) {
  // Validates lengths and labels once up front.
  CountConfusion(gold, pred);
  if (gold.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "bootstrap needs reports");
  }
  if (b == 0) {
    throw Error(ErrorCode::kInvalidArgument, "bootstrap needs replicates");
  }
  if (!(confidence > 0 && confidence < 1)) {
    throw Error(ErrorCode::kInvalidArgument, "confidence must be in (0, 1)");
  }
  const std::size_t n = gold.size();
  BootstrapResult result;
  result.replicates.reserve(b);
  std::vector<Label> g(n);
  std::vector<Label> p(n);
  for (std::size_t r = 0; r < b; ++r) {
    const auto indices = ResampleIndices(seed, r, n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = gold[indices[i]];
      p[i] = pred[indices[i]];
    }
    const EvalSummary s = Evaluate(g, p);
    ReplicateRow row;
    for (std::size_t t = 0; t < 4; ++t) row[t] = s.per_type[t].f1;
    row[kMacroColumn] = s.macro_f1;
    result.replicates.push_back(row);
  }
  const double tail = (1 - confidence) / 2;
  for (std::size_t c = 0; c < 5; ++c) {
    const auto column = Column(result.replicates, c);
    result.intervals[c] = {Percentile(column, tail),
                           Percentile(column, 1 - tail)};
  }
  return result;
}

EvalSummary EvaluateWithIntervals(const std::vector<Label>& gold,
                                  const std::vector<Label>& pred,
                                  std::size_t b, Seed seed,
                                  double confidence) {
  EvalSummary summary = Evaluate(gold, pred);
  const BootstrapResult boot = Bootstrap(gold, pred, b, seed, confidence);
  for (std::size_t t = 0; t < 4; ++t) {
    summary.per_type[t].f1_ci = boot.intervals[t];
  }
  summary.macro_f1_ci = boot.intervals[kMacroColumn];
  summary.bootstrap_b = b;
  summary.seed = seed;
  return summary;
}

}  // namespace radproof::metrics
