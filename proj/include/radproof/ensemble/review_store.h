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

#ifndef RADPROOF_ENSEMBLE_REVIEW_STORE_H_
#define RADPROOF_ENSEMBLE_REVIEW_STORE_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "radproof/ensemble/adjudication.h"
#include "radproof/ensemble/vote.h"

namespace radproof::ensemble {

struct ReviewItem {
  Detection detection;
  std::string report_text;
  // Byte span of the suspected error in report_text, when known.
  std::optional<std::pair<std::size_t, std::size_t>> span;

  bool operator==(const ReviewItem&) const = default;
};

struct ReviewBatch {
  std::string batch_id;
  std::array<std::string, 2> reviewers;
  std::vector<ReviewItem> items;
  bool closed = false;
  std::vector<Judgment> judgments;  // in arrival order
};

struct NextItem {
  std::string batch_id;
  const ReviewItem* item = nullptr;
  std::size_t done = 0;   // judged by this reviewer
  std::size_t total = 0;  // items in the batch
};

enum class SubmitOutcome { kCreated, kDuplicate };

// Review batches and judgments backed by an append-only JSONL event log:
// one "batch" event per batch, then "judgment" and "close" events. Opening
// an existing log replays it. All methods are thread-safe; judgment
// insertion is first-writer-wins per (report, reviewer).
//
// A batch closes when every item carries judgments from both reviewers, or
// on an explicit Close().
class ReviewStore {
 public:
  using Clock = std::function<std::string()>;  // ISO 8601 timestamps

  // Throws Error(kIo) or Error(kSchemaViolation) for an unreadable log.
  explicit ReviewStore(std::filesystem::path log, Clock clock = nullptr);

  // Throws Error(kInvalidArgument) for an existing id, identical reviewers,
  // an empty batch or repeated report ids.
  void CreateBatch(const std::string& batch_id,
                   const std::array<std::string, 2>& reviewers,
                   std::vector<ReviewItem> items);

  std::vector<std::string> BatchIds() const;
  // Copy of the batch; throws Error(kUnknownReport) for an unknown id.
  ReviewBatch Batch(const std::string& batch_id) const;

  // First item in the reviewer's open batches without their judgment, or
  // nullopt. `batch_id` restricts the search. Throws
  // Error(kUnknownReviewer) when the reviewer belongs to no batch.
  std::optional<NextItem> Next(const std::string& reviewer,
                               const std::optional<std::string>& batch_id) const;

  // Records a judgment; a repeat for the same (report, reviewer) that does
  // not supersede is left unrecorded and reported as kDuplicate. The batch
  // defaults to the batch holding the report for that reviewer, preferring
  // open ones. Throws Error(kUnknownReport), Error(kUnknownReviewer),
  // Error(kBatchClosed), or Error(kInvalidArgument) for a superseding
  // record with nothing to supersede.
  SubmitOutcome Submit(Judgment judgment,
                       const std::optional<std::string>& batch_id);

  // Idempotent. Throws Error(kUnknownReport) for an unknown batch.
  void Close(const std::string& batch_id);

  // Stats for a batch, closed or not; callers enforce blinding.
  AdjudicationStats Stats(const std::string& batch_id) const;

  static std::string UtcNow();

 private:
  void Append(const std::string& line);
  void Replay(const std::string& line, std::size_t line_no);
  ReviewBatch& Find(const std::string& batch_id);
  const ReviewBatch& Find(const std::string& batch_id) const;
  void MaybeAutoClose(ReviewBatch& batch);

  std::filesystem::path log_;
  Clock clock_;
  mutable std::mutex mu_;
  std::vector<ReviewBatch> batches_;
};

}  // namespace radproof::ensemble

#endif  // RADPROOF_ENSEMBLE_REVIEW_STORE_H_
