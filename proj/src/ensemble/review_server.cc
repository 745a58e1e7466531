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

#include "radproof/ensemble/review_server.h"

#include "httplib.h"
#include "json.hpp"
#include "radproof/common/error.h"

namespace radproof::ensemble {
namespace {

using Json = nlohmann::ordered_json;

void Reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void ReplyError(httplib::Response& res, int status, const std::string& msg) {
  Reply(res, status, Json{{"error", msg}});
}

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownReport:
    case ErrorCode::kUnknownReviewer:
      return 404;
    case ErrorCode::kBatchClosed:
    case ErrorCode::kDuplicateJudgment:
      return 409;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kSchemaViolation:
      return 400;
    default:
      return 500;
  }
}

// Runs `handler`, mapping library errors onto HTTP statuses.
template <typename F>
void Guarded(httplib::Response& res, F&& handler) {
  try {
    handler();
  } catch (const Error& e) {
    ReplyError(res, StatusFor(e.code()), e.what());
  } catch (const std::exception& e) {
    ReplyError(res, 500, e.what());
  }
}

std::optional<std::string> Param(const httplib::Request& req, const char* key) {
  if (!req.has_param(key)) return std::nullopt;
  return req.get_param_value(key);
}

}  // namespace

struct ReviewServer::Impl {
  ReviewStore& store;
  httplib::Server server;
};

ReviewServer::ReviewServer(ReviewStore& store,
                           std::optional<std::filesystem::path> static_dir)
    : impl_(new Impl{store, {}}) {
  httplib::Server& s = impl_->server;
  ReviewStore& st = impl_->store;

  s.Get("/api/batches", [&st](const httplib::Request&, httplib::Response& res) {
    Guarded(res, [&] {
      Json out = Json::array();
      for (const std::string& id : st.BatchIds()) {
        const ReviewBatch b = st.Batch(id);
        if (b.closed) continue;
        out.push_back(Json{{"batch_id", b.batch_id},
                           {"reviewers", b.reviewers},
                           {"n_items", b.items.size()}});
      }
      Reply(res, 200, out);
    });
  });

  s.Get("/api/next", [&st](const httplib::Request& req, httplib::Response& res) {
    Guarded(res, [&] {
      const auto reviewer = Param(req, "reviewer");
      if (!reviewer || reviewer->empty()) {
        ReplyError(res, 400, "query parameter 'reviewer' is required");
        return;
      }
      const auto next = st.Next(*reviewer, Param(req, "batch"));
      if (!next) {
        res.status = 204;
        return;
      }
      const ReviewItem& item = *next->item;
      Json span = nullptr;
      if (item.span) span = Json::array({item.span->first, item.span->second});
      // Only the item itself: no judgment of either reviewer is exposed.
      Reply(res, 200,
            Json{{"batch_id", next->batch_id},
                 {"report_id", item.detection.report_id},
                 {"error_type", ErrorTypeName(item.detection.error_type)},
                 {"text", item.report_text},
                 {"span", span},
                 {"done", next->done},
                 {"total", next->total}});
    });
  });

  s.Post("/api/judgments",
         [&st](const httplib::Request& req, httplib::Response& res) {
    Guarded(res, [&] {
      const Json body = Json::parse(req.body, nullptr, false);
      const bool ok =
          body.is_object() && body.contains("report_id") &&
          body["report_id"].is_string() && body.contains("reviewer_id") &&
          body["reviewer_id"].is_string() && body.contains("confirmed") &&
          body["confirmed"].is_boolean() &&
          (!body.contains("comment") || body["comment"].is_string() ||
           body["comment"].is_null()) &&
          (!body.contains("batch_id") || body["batch_id"].is_string()) &&
          (!body.contains("supersedes") || body["supersedes"].is_boolean());
      if (!ok) {
        ReplyError(res, 400,
                   "expected {report_id: string, reviewer_id: string, "
                   "confirmed: boolean, comment?: string, batch_id?: string, "
                   "supersedes?: boolean}");
        return;
      }
      Judgment j;
      j.report_id = body["report_id"].get<std::string>();
      j.reviewer_id = body["reviewer_id"].get<std::string>();
      j.confirmed = body["confirmed"].get<bool>();
      if (body.contains("comment") && body["comment"].is_string()) {
        j.comment = body["comment"].get<std::string>();
      }
      j.supersedes = body.value("supersedes", false);
      std::optional<std::string> batch;
      if (body.contains("batch_id")) batch = body["batch_id"].get<std::string>();
      if (st.Submit(j, batch) == SubmitOutcome::kDuplicate) {
        ReplyError(res, 409, "reviewer '" + j.reviewer_id +
                                 "' already judged report '" + j.report_id +
                                 "'");
        return;
      }
      Reply(res, 201, Json{{"report_id", j.report_id},
                           {"reviewer_id", j.reviewer_id}});
    });
  });

  s.Get("/api/stats", [&st](const httplib::Request& req, httplib::Response& res) {
    Guarded(res, [&] {
      const auto batch = Param(req, "batch");
      if (!batch) {
        ReplyError(res, 400, "query parameter 'batch' is required");
        return;
      }
      if (!st.Batch(*batch).closed) {
        ReplyError(res, 403, "batch '" + *batch + "' is still open");
        return;
      }
      res.status = 200;
      res.set_content(AdjudicationStatsJson(st.Stats(*batch)),
                      "application/json");
    });
  });

  s.Post(R"(/api/batches/([^/]+)/close)",
         [&st](const httplib::Request& req, httplib::Response& res) {
    Guarded(res, [&] {
      const std::string id = req.matches[1];
      st.Close(id);
      Reply(res, 200, Json{{"batch_id", id}, {"closed", true}});
    });
  });

  if (static_dir) s.set_mount_point("/", static_dir->string());
}

ReviewServer::~ReviewServer() { Stop(); }

int ReviewServer::Bind(const std::string& host, int port) {
  httplib::Server& s = impl_->server;
  if (port == 0) {
    const int bound = s.bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorCode::kIo, "cannot bind to " + host);
    return bound;
  }
  if (!s.bind_to_port(host, port)) {
    throw Error(ErrorCode::kIo,
                "cannot bind to " + host + ":" + std::to_string(port));
  }
  return port;
}

void ReviewServer::Listen() { impl_->server.listen_after_bind(); }

void ReviewServer::Stop() { impl_->server.stop(); }

void ReviewServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace radproof::ensemble
