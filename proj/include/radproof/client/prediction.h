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

#ifndef RADPROOF_CLIENT_PREDICTION_H_
#define RADPROOF_CLIENT_PREDICTION_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "radproof/common/labels.h"

namespace radproof::client {

struct Prediction {
  std::string report_id;
  std::string backend_name;
  Label predicted_label = Label::kUnparseable;
  std::string raw_response;
  double latency_ms = 0;
  std::size_t attempts = 0;
  // Set when the request failed outright; predicted_label is then
  // kUnparseable and `error` holds the reason.
  bool failed = false;
  std::string error;

  bool operator==(const Prediction&) const = default;
};

// One JSON object per line:
// {"report_id","backend","label","raw_response","latency_ms","attempts",
//  "failed","error"}.
std::string SerializePrediction(const Prediction& p);
// Throws Error(kSchemaViolation) naming `line_no`.
Prediction ParsePrediction(std::string_view line, std::size_t line_no);

// Throws Error(kIo) or Error(kSchemaViolation).
std::vector<Prediction> ReadPredictions(const std::filesystem::path& path);
// Atomic replace via a temporary file.
void WritePredictions(const std::vector<Prediction>& predictions,
                      const std::filesystem::path& path);

}  // namespace radproof::client

#endif  // RADPROOF_CLIENT_PREDICTION_H_
