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

#ifndef RADPROOF_ENSEMBLE_REVIEW_SERVER_H_
#define RADPROOF_ENSEMBLE_REVIEW_SERVER_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "radproof/ensemble/review_store.h"

namespace radproof::ensemble {

// HTTP review API:
//   GET  /api/batches                 batch ids, sizes, reviewers, state
//   GET  /api/next?reviewer=R[&batch=B]  next item for R; 204 when done
//   POST /api/judgments               {report_id, reviewer_id, confirmed,
//                                      comment?, batch_id?, supersedes?};
//                                      201, or 409 for a duplicate or a
//                                      closed batch; supersedes:true
//                                      records a correction
//   GET  /api/stats?batch=B           403 while the batch is open
//   POST /api/batches/B/close
// Other paths are served from `static_dir` when given.
class ReviewServer {
 public:
  ReviewServer(ReviewStore& store,
               std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~ReviewServer();

  // Binds to host:port (port 0 picks a free one) and returns the port.
  // Throws Error(kIo) when binding fails.
  int Bind(const std::string& host, int port);
  // Serves until Stop(); call after Bind().
  void Listen();
  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace radproof::ensemble

#endif  // RADPROOF_ENSEMBLE_REVIEW_SERVER_H_
