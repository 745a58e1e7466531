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

#ifndef RADPROOF_DATASET_DATASET_H_
#define RADPROOF_DATASET_DATASET_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radproof/common/labels.h"
#include "radproof/common/rng.h"
#include "radproof/corpus/report.h"
#include "radproof/injector/injector.h"

namespace radproof::dataset {

enum class Split { kTrain, kTest, kUnassigned };
std::string_view SplitName(Split split);  // "train", "test", "unassigned"
std::optional<Split> ParseSplit(std::string_view name);

enum class Provenance { kSynthetic, kMimicDerived };

// An error-free report and its corrupted twin.
struct ReportPair {
  std::string pair_id;
  corpus::Report clean;
  corpus::Report corrupted;
  injector::ErrorAnnotation annotation;
  Provenance provenance = Provenance::kSynthetic;
};

// One dataset record. `error` is set exactly when label != kNone.
struct LabeledReport {
  corpus::Report report;
  Label label = Label::kNone;
  std::string pair_id;
  Split split = Split::kUnassigned;
  std::optional<injector::ErrorAnnotation> error;

  bool operator==(const LabeledReport& other) const;
};

// Injects `type` into `clean` and names the members "<pair_id>.clean" and
// "<pair_id>.error". Throws like injector::Inject.
ReportPair MakePair(std::string pair_id, const corpus::Report& clean,
                    ErrorType type, Seed seed,
                    const injector::InjectorOptions& options = {});

// Both members of each pair, clean first, split kUnassigned.
std::vector<LabeledReport> Flatten(const std::vector<ReportPair>& pairs);

// Regroups records into pairs. Each pair_id must carry exactly one error-free
// and one error record; otherwise throws Error(kSchemaViolation).
std::vector<ReportPair> Regroup(const std::vector<LabeledReport>& records);

struct SplitOptions {
  // Explicit number of training pairs; overrides `ratio` when set.
  std::optional<std::size_t> train_pairs;
  // Fraction of pairs for training; train pairs = round(ratio * |pairs|).
  double ratio = 0.8;
  // Keep each error type's share of train pairs proportional to its share
  // of all pairs (largest-remainder rounding).
  bool stratify = false;
};

struct SplitResult {
  std::vector<LabeledReport> train;
  std::vector<LabeledReport> test;
};

// Pair-coherent split. Each pair gets the key Mix64(seed ^ Fnv1a64(pair_id));
// the pairs with the smallest keys go to train. Assignment therefore depends
// on (seed, pair_id, counts) but not on input order. Within each split,
// records keep input order, clean member first.
//
// Throws Error(kCountExceedsPairs) when train_pairs > |pairs| and
// Error(kInvalidArgument) for an empty input, a ratio outside (0, 1) or a
// repeated pair_id.
SplitResult SplitPairs(const std::vector<ReportPair>& pairs,
                       const SplitOptions& options, Seed seed);

struct DatasetStats {
  std::size_t total = 0;
  std::size_t error_free = 0;
  std::size_t with_errors = 0;
  std::array<std::size_t, 4> per_type{};  // indexed by Index(ErrorType)
  std::size_t train = 0;
  std::size_t test = 0;
  std::size_t unassigned = 0;
  // Mean whitespace-delimited word count of the error reports of each type,
  // over the full report text including headers; 0 when a type is absent.
  std::array<double, 4> mean_words{};
  double mean_words_error_free = 0.0;
};

DatasetStats ComputeStats(const std::vector<LabeledReport>& reports);

}  // namespace radproof::dataset

#endif  // RADPROOF_DATASET_DATASET_H_
