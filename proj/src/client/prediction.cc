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

#include "radproof/client/prediction.h"

#include "json.hpp"
#include "radproof/common/error.h"
#include "radproof/common/io.h"
#include "radproof/common/text.h"

namespace radproof::client {

std::string SerializePrediction(const Prediction& p) {
  nlohmann::ordered_json j;
  j["report_id"] = p.report_id;
  j["backend"] = p.backend_name;
  j["label"] = LabelName(p.predicted_label);
  j["raw_response"] = p.raw_response;
  j["latency_ms"] = p.latency_ms;
  j["attempts"] = p.attempts;
  j["failed"] = p.failed;
  j["error"] = p.error;
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

Prediction ParsePrediction(std::string_view line, std::size_t line_no) {
  const std::string where = "line " + std::to_string(line_no) + ": ";
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, where + "not JSON: " + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::kSchemaViolation, where + "not an object");
  }
  auto field = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) {
      throw Error(ErrorCode::kSchemaViolation,
                  where + "field '" + key + "': missing");
    }
    return j.at(key);
  };
  auto string_field = [&](const char* key) {
    const auto& v = field(key);
    if (!v.is_string()) {
      throw Error(ErrorCode::kSchemaViolation,
                  where + "field '" + key + "': expected a string");
    }
    return v.get<std::string>();
  };
  Prediction p;
  p.report_id = string_field("report_id");
  p.backend_name = string_field("backend");
  const std::string label = string_field("label");
  const auto parsed = ParseLabelName(label);
  if (!parsed) {
    throw Error(ErrorCode::kSchemaViolation,
                where + "field 'label': unknown label '" + label + "'");
  }
  p.predicted_label = *parsed;
  p.raw_response = string_field("raw_response");
  p.error = string_field("error");
  const auto& latency = field("latency_ms");
  const auto& attempts = field("attempts");
  const auto& failed = field("failed");
  if (!latency.is_number() || !attempts.is_number_unsigned() ||
      !failed.is_boolean()) {
    throw Error(ErrorCode::kSchemaViolation,
                where + "fields 'latency_ms', 'attempts', 'failed' have wrong types");
  }
  p.latency_ms = latency.get<double>();
  p.attempts = attempts.get<std::size_t>();
  p.failed = failed.get<bool>();
  if (p.failed && p.predicted_label != Label::kUnparseable) {
    throw Error(ErrorCode::kSchemaViolation,
                where + "field 'label': failed predictions must be unparseable");
  }
  return p;
}

std::vector<Prediction> ReadPredictions(const std::filesystem::path& path) {
  const std::string body = io::ReadFile(path);
  std::vector<Prediction> out;
  std::size_t line_no = 0;
  for (std::string_view line : text::SplitLines(body)) {
    ++line_no;
    if (text::Trim(line).empty()) continue;
    out.push_back(ParsePrediction(line, line_no));
  }
  return out;
}

void WritePredictions(const std::vector<Prediction>& predictions,
                      const std::filesystem::path& path) {
  std::string out;
  for (const Prediction& p : predictions) {
    out += SerializePrediction(p);
    out += '\n';
  }
  io::WriteFileAtomic(path, out);
}

}  // namespace radproof::client
