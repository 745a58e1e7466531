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

#include "radproof/ensemble/review_store.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <set>

#include "json.hpp"
#include "radproof/common/error.h"
#include "radproof/common/io.h"
#include "radproof/common/text.h"

namespace radproof::ensemble {
namespace {

using Json = nlohmann::ordered_json;

std::string Dump(const Json& j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

bool HasJudgment(const ReviewBatch& batch, const std::string& report_id,
                 const std::string& reviewer) {
  for (const Judgment& j : batch.judgments) {
    if (j.report_id == report_id && j.reviewer_id == reviewer) return true;
  }
  return false;
}

bool HasItem(const ReviewBatch& batch, const std::string& report_id) {
  for (const ReviewItem& item : batch.items) {
    if (item.detection.report_id == report_id) return true;
  }
  return false;
}

bool IsReviewer(const ReviewBatch& batch, const std::string& reviewer) {
  return batch.reviewers[0] == reviewer || batch.reviewers[1] == reviewer;
}

}  // namespace

ReviewStore::ReviewStore(std::filesystem::path log, Clock clock)
    : log_(std::move(log)), clock_(clock ? std::move(clock) : Clock(UtcNow)) {
  if (!std::filesystem::exists(log_)) return;
  const std::string body = io::ReadFile(log_);
  const auto lines = text::SplitLines(body);
  const bool torn_tail = !body.empty() && body.back() != '\n';
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (text::Trim(lines[i]).empty()) continue;
    try {
      Replay(std::string(lines[i]), i + 1);
    } catch (const Error&) {
      // A crash mid-append leaves an unterminated final line; drop it.
      if (torn_tail && i + 1 == lines.size()) break;
      throw;
    }
  }
}

std::string ReviewStore::UtcNow() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void ReviewStore::Append(const std::string& line) {
  std::ofstream out(log_, std::ios::app | std::ios::binary);
  out << line << '\n';
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot append to " + log_.string());
  }
}

void ReviewStore::Replay(const std::string& line, std::size_t line_no) {
  const std::string where = log_.string() + ": line " +
                            std::to_string(line_no) + ": ";
  Json j;
  try {
    j = Json::parse(line);
    const std::string event = j.at("event").get<std::string>();
    if (event == "batch") {
      std::vector<ReviewItem> items;
      for (const auto& it : j.at("items")) {
        ReviewItem item;
        item.detection.report_id = it.at("report_id").get<std::string>();
        const auto type =
            ParseErrorType(it.at("error_type").get<std::string>());
        if (!type) throw Error(ErrorCode::kSchemaViolation, "bad error_type");
        item.detection.error_type = *type;
        item.detection.backends_agreeing =
            it.at("backends").get<std::vector<std::string>>();
        item.report_text = it.at("text").get<std::string>();
        if (!it.at("span").is_null()) {
          item.span = std::make_pair(it.at("span").at(0).get<std::size_t>(),
                                     it.at("span").at(1).get<std::size_t>());
        }
        items.push_back(std::move(item));
      }
      ReviewBatch batch;
      batch.batch_id = j.at("batch_id").get<std::string>();
      batch.reviewers = {j.at("reviewers").at(0).get<std::string>(),
                         j.at("reviewers").at(1).get<std::string>()};
      batch.items = std::move(items);
      batches_.push_back(std::move(batch));
    } else if (event == "judgment") {
      ReviewBatch& batch = Find(j.at("batch_id").get<std::string>());
      Judgment jd;
      jd.report_id = j.at("report_id").get<std::string>();
      jd.reviewer_id = j.at("reviewer_id").get<std::string>();
      jd.confirmed = j.at("confirmed").get<bool>();
      jd.submitted_at = j.at("submitted_at").get<std::string>();
      jd.comment = j.at("comment").get<std::string>();
      jd.supersedes = j.value("supersedes", false);
      batch.judgments.push_back(std::move(jd));
      MaybeAutoClose(batch);
    } else if (event == "close") {
      Find(j.at("batch_id").get<std::string>()).closed = true;
    } else {
      throw Error(ErrorCode::kSchemaViolation, "unknown event '" + event + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, where + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::kSchemaViolation, where + e.what());
  }
}

ReviewBatch& ReviewStore::Find(const std::string& batch_id) {
  for (ReviewBatch& b : batches_) {
    if (b.batch_id == batch_id) return b;
  }
  throw Error(ErrorCode::kUnknownReport, "unknown batch '" + batch_id + "'");
}

const ReviewBatch& ReviewStore::Find(const std::string& batch_id) const {
  return const_cast<ReviewStore*>(this)->Find(batch_id);
}

void ReviewStore::MaybeAutoClose(ReviewBatch& batch) {
  if (batch.closed) return;
  for (const ReviewItem& item : batch.items) {
    for (const std::string& r : batch.reviewers) {
      if (!HasJudgment(batch, item.detection.report_id, r)) return;
    }
  }
  batch.closed = true;
}

void ReviewStore::CreateBatch(const std::string& batch_id,
                              const std::array<std::string, 2>& reviewers,
                              std::vector<ReviewItem> items) {
  if (batch_id.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "batch id must not be empty");
  }
  if (reviewers[0].empty() || reviewers[0] == reviewers[1]) {
    throw Error(ErrorCode::kInvalidArgument,
                "a batch needs two distinct non-empty reviewer ids");
  }
  if (items.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "a batch needs at least one item");
  }
  std::set<std::string> ids;
  Json json_items = Json::array();
  for (const ReviewItem& item : items) {
    if (!ids.insert(item.detection.report_id).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "repeated report id '" + item.detection.report_id + "'");
    }
    Json it;
    it["report_id"] = item.detection.report_id;
    it["error_type"] = ErrorTypeName(item.detection.error_type);
    it["backends"] = item.detection.backends_agreeing;
    it["text"] = item.report_text;
    it["span"] = item.span ? Json::array({item.span->first, item.span->second})
                           : Json(nullptr);
    json_items.push_back(std::move(it));
  }
  std::lock_guard lock(mu_);
  for (const ReviewBatch& b : batches_) {
    if (b.batch_id == batch_id) {
      throw Error(ErrorCode::kInvalidArgument,
                  "batch '" + batch_id + "' already exists");
    }
  }
  Json j;
  j["event"] = "batch";
  j["batch_id"] = batch_id;
  j["reviewers"] = reviewers;
  j["items"] = std::move(json_items);
  Append(Dump(j));
  ReviewBatch batch;
  batch.batch_id = batch_id;
  batch.reviewers = reviewers;
  batch.items = std::move(items);
  batches_.push_back(std::move(batch));
}

std::vector<std::string> ReviewStore::BatchIds() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> ids;
  for (const ReviewBatch& b : batches_) ids.push_back(b.batch_id);
  return ids;
}

ReviewBatch ReviewStore::Batch(const std::string& batch_id) const {
  std::lock_guard lock(mu_);
  return Find(batch_id);
}

std::optional<NextItem> ReviewStore::Next(
    const std::string& reviewer,
    const std::optional<std::string>& batch_id) const {
  std::lock_guard lock(mu_);
  bool known = false;
  for (const ReviewBatch& b : batches_) {
    if (batch_id && b.batch_id != *batch_id) continue;
    if (!IsReviewer(b, reviewer)) continue;
    known = true;
    if (b.closed) continue;
    std::size_t done = 0;
    const ReviewItem* first = nullptr;
    for (const ReviewItem& item : b.items) {
      if (HasJudgment(b, item.detection.report_id, reviewer)) {
        ++done;
      } else if (!first) {
        first = &item;
      }
    }
    if (first) return NextItem{b.batch_id, first, done, b.items.size()};
  }
  if (batch_id) Find(*batch_id);  // unknown batch
  if (!known) {
    throw Error(ErrorCode::kUnknownReviewer,
                "reviewer '" + reviewer + "' is not assigned to any batch");
  }
  return std::nullopt;
}

SubmitOutcome ReviewStore::Submit(Judgment judgment,
                                  const std::optional<std::string>& batch_id) {
  std::lock_guard lock(mu_);
  ReviewBatch* target = nullptr;
  if (batch_id) {
    target = &Find(*batch_id);
    if (!HasItem(*target, judgment.report_id)) {
      throw Error(ErrorCode::kUnknownReport,
                  "report '" + judgment.report_id + "' is not in batch '" +
                      *batch_id + "'");
    }
  } else {
    // Prefer an open batch; fall back to a closed one so the caller gets a
    // precise refusal.
    for (ReviewBatch& b : batches_) {
      if (!HasItem(b, judgment.report_id)) continue;
      if (!IsReviewer(b, judgment.reviewer_id)) continue;
      if (!target || (target->closed && !b.closed)) target = &b;
    }
    if (!target) {
      for (ReviewBatch& b : batches_) {
        if (HasItem(b, judgment.report_id)) target = &b;
      }
    }
    if (!target) {
      throw Error(ErrorCode::kUnknownReport,
                  "report '" + judgment.report_id + "' is in no batch");
    }
  }
  if (!IsReviewer(*target, judgment.reviewer_id)) {
    throw Error(ErrorCode::kUnknownReviewer,
                "reviewer '" + judgment.reviewer_id +
                    "' is not assigned to batch '" + target->batch_id + "'");
  }
  const bool prior =
      HasJudgment(*target, judgment.report_id, judgment.reviewer_id);
  if (prior && !judgment.supersedes) return SubmitOutcome::kDuplicate;
  if (!prior && judgment.supersedes) {
    throw Error(ErrorCode::kInvalidArgument,
                "reviewer '" + judgment.reviewer_id +
                    "' has no judgment of report '" + judgment.report_id +
                    "' to supersede");
  }
  if (target->closed) {
    throw Error(ErrorCode::kBatchClosed,
                "batch '" + target->batch_id + "' is closed");
  }
  judgment.submitted_at = clock_();
  Json j;
  j["event"] = "judgment";
  j["batch_id"] = target->batch_id;
  j["report_id"] = judgment.report_id;
  j["reviewer_id"] = judgment.reviewer_id;
  j["confirmed"] = judgment.confirmed;
  j["submitted_at"] = judgment.submitted_at;
  j["comment"] = judgment.comment;
  j["supersedes"] = judgment.supersedes;
  Append(Dump(j));
  target->judgments.push_back(std::move(judgment));
  MaybeAutoClose(*target);
  return SubmitOutcome::kCreated;
}

void ReviewStore::Close(const std::string& batch_id) {
  std::lock_guard lock(mu_);
  ReviewBatch& batch = Find(batch_id);
  if (batch.closed) return;
  Json j;
  j["event"] = "close";
  j["batch_id"] = batch_id;
  Append(Dump(j));
  batch.closed = true;
}

AdjudicationStats ReviewStore::Stats(const std::string& batch_id) const {
  std::lock_guard lock(mu_);
  const ReviewBatch& batch = Find(batch_id);
  std::vector<Detection> sample;
  for (const ReviewItem& item : batch.items) sample.push_back(item.detection);
  return ComputeAdjudication(sample, batch.judgments, batch.reviewers);
}

}  // namespace radproof::ensemble
