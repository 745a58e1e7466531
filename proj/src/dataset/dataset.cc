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

#include "radproof/dataset/dataset.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "radproof/common/error.h"

namespace radproof::dataset {

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kTest: return "test";
    case Split::kUnassigned: return "unassigned";
  }
  return "";
}

std::optional<Split> ParseSplit(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "test") return Split::kTest;
  if (name == "unassigned") return Split::kUnassigned;
  return std::nullopt;
}

bool LabeledReport::operator==(const LabeledReport& other) const {
  return report.id == other.report.id &&
         report.source == other.report.source &&
         report.raw_text == other.report.raw_text && label == other.label &&
         pair_id == other.pair_id && split == other.split &&
         error == other.error;
}

ReportPair MakePair(std::string pair_id, const corpus::Report& clean,
                    ErrorType type, Seed seed,
                    const injector::InjectorOptions& options) {
  injector::InjectionResult injected = injector::Inject(clean, type, seed, options);
  ReportPair pair;
  pair.clean = clean;
  pair.clean.id = pair_id + ".clean";
  pair.corrupted = std::move(injected.corrupted);
  pair.corrupted.id = pair_id + ".error";
  pair.annotation = std::move(injected.annotation);
  pair.provenance = clean.source == corpus::ReportSource::kSynthetic
                        ? Provenance::kSynthetic
                        : Provenance::kMimicDerived;
  pair.pair_id = std::move(pair_id);
  return pair;
}

namespace {

void AppendPair(const ReportPair& pair, Split split,
                std::vector<LabeledReport>& out) {
  LabeledReport clean;
  clean.report = pair.clean;
  clean.label = Label::kNone;
  clean.pair_id = pair.pair_id;
  clean.split = split;
  out.push_back(std::move(clean));

  LabeledReport corrupted;
  corrupted.report = pair.corrupted;
  corrupted.label = ToLabel(pair.annotation.error_type);
  corrupted.pair_id = pair.pair_id;
  corrupted.split = split;
  corrupted.error = pair.annotation;
  out.push_back(std::move(corrupted));
}

// Largest-remainder apportionment of `total` over strata of the given sizes.
std::vector<std::size_t> Apportion(const std::vector<std::size_t>& sizes,
                                   std::size_t total) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(),
                                        std::size_t{0});
  std::vector<std::size_t> quota(sizes.size());
  std::vector<std::pair<std::size_t, std::size_t>> remainders;  // (rem, idx)
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    quota[i] = sizes[i] * total / n;
    assigned += quota[i];
    remainders.emplace_back(sizes[i] * total % n, i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < total; ++k) {
    const std::size_t i = remainders[k % remainders.size()].second;
    if (quota[i] < sizes[i]) {
      ++quota[i];
      ++assigned;
    }
  }
  return quota;
}

}  // namespace

std::vector<LabeledReport> Flatten(const std::vector<ReportPair>& pairs) {
  std::vector<LabeledReport> out;
  out.reserve(pairs.size() * 2);
  for (const ReportPair& pair : pairs) AppendPair(pair, Split::kUnassigned, out);
  return out;
}

std::vector<ReportPair> Regroup(const std::vector<LabeledReport>& records) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<const LabeledReport*, const LabeledReport*>>
      members;
  for (const LabeledReport& r : records) {
    auto [it, inserted] = members.try_emplace(r.pair_id, nullptr, nullptr);
    if (inserted) order.push_back(r.pair_id);
    const LabeledReport*& slot =
        r.label == Label::kNone ? it->second.first : it->second.second;
    if (slot != nullptr) {
      throw Error(ErrorCode::kSchemaViolation,
                  "pair '" + r.pair_id + "' has two " +
                      (r.label == Label::kNone ? "error-free" : "error") +
                      " records");
    }
    slot = &r;
  }
  std::vector<ReportPair> pairs;
  for (const std::string& id : order) {
    const auto [clean, corrupted] = members.at(id);
    if (clean == nullptr || corrupted == nullptr) {
      throw Error(ErrorCode::kSchemaViolation,
                  "pair '" + id + "' is missing its " +
                      (clean == nullptr ? "error-free" : "error") + " record");
    }
    if (!corrupted->error) {
      throw Error(ErrorCode::kSchemaViolation,
                  "record '" + corrupted->report.id + "' has no error annotation");
    }
    if (corrupted->report.source == corpus::ReportSource::kRealWorld) {
      throw Error(ErrorCode::kSchemaViolation,
                  "pair '" + id + "' is real_world; pairs are synthetic or mimic");
    }
    ReportPair pair;
    pair.pair_id = id;
    pair.clean = clean->report;
    pair.corrupted = corrupted->report;
    pair.annotation = *corrupted->error;
    pair.provenance = corrupted->report.source == corpus::ReportSource::kMimic
                          ? Provenance::kMimicDerived
                          : Provenance::kSynthetic;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

SplitResult SplitPairs(const std::vector<ReportPair>& pairs,
                       const SplitOptions& options, Seed seed) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no pairs to split");
  }
  const std::size_t n = pairs.size();
  std::size_t train_pairs = 0;
  if (options.train_pairs) {
    train_pairs = *options.train_pairs;
    if (train_pairs > n) {
      throw Error(ErrorCode::kCountExceedsPairs,
                  "train count " + std::to_string(train_pairs) + " exceeds " +
                      std::to_string(n) + " pairs");
    }
  } else {
    if (!(options.ratio > 0.0 && options.ratio < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "split ratio must lie in (0, 1)");
    }
    train_pairs = static_cast<std::size_t>(
        std::llround(options.ratio * static_cast<double>(n)));
  }

  std::vector<std::tuple<std::uint64_t, std::string_view, std::size_t>> keyed;
  keyed.reserve(n);
  std::set<std::string_view> ids;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ids.insert(pairs[i].pair_id).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate pair_id '" + pairs[i].pair_id + "'");
    }
    keyed.emplace_back(Mix64(seed ^ Fnv1a64(pairs[i].pair_id)),
                       pairs[i].pair_id, i);
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<bool> in_train(n, false);
  if (options.stratify) {
    std::array<std::vector<std::size_t>, 4> strata;
    for (const auto& [key, id, i] : keyed) {
      strata[Index(pairs[i].annotation.error_type)].push_back(i);
    }
    std::vector<std::size_t> sizes;
    for (const auto& s : strata) sizes.push_back(s.size());
    const std::vector<std::size_t> quota = Apportion(sizes, train_pairs);
    for (std::size_t t = 0; t < strata.size(); ++t) {
      for (std::size_t k = 0; k < quota[t]; ++k) in_train[strata[t][k]] = true;
    }
  } else {
    for (std::size_t k = 0; k < train_pairs; ++k) {
      in_train[std::get<2>(keyed[k])] = true;
    }
  }

  SplitResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_train[i]) {
      AppendPair(pairs[i], Split::kTrain, result.train);
    } else {
      AppendPair(pairs[i], Split::kTest, result.test);
    }
  }
  return result;
}

DatasetStats ComputeStats(const std::vector<LabeledReport>& reports) {
  DatasetStats stats;
  std::array<std::size_t, 4> word_sums{};
  std::size_t clean_words = 0;
  for (const LabeledReport& r : reports) {
    ++stats.total;
    switch (r.split) {
      case Split::kTrain: ++stats.train; break;
      case Split::kTest: ++stats.test; break;
      case Split::kUnassigned: ++stats.unassigned; break;
    }
    const std::size_t words = r.report.WordCount();
    if (const auto type = ToErrorType(r.label)) {
      ++stats.with_errors;
      ++stats.per_type[Index(*type)];
      word_sums[Index(*type)] += words;
    } else {
      ++stats.error_free;
      clean_words += words;
    }
  }
  for (std::size_t t = 0; t < 4; ++t) {
    if (stats.per_type[t] > 0) {
      stats.mean_words[t] = static_cast<double>(word_sums[t]) /
                            static_cast<double>(stats.per_type[t]);
    }
  }
  if (stats.error_free > 0) {
    stats.mean_words_error_free =
        static_cast<double>(clean_words) / static_cast<double>(stats.error_free);
  }
  return stats;
}

}  // namespace radproof::dataset
