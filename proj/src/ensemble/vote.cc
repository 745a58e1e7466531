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

#include "radproof/ensemble/vote.h"

#include <algorithm>
#include <unordered_map>

#include "json.hpp"
#include "radproof/common/error.h"
#include "radproof/common/io.h"
#include "radproof/common/text.h"

namespace radproof::ensemble {
namespace {

std::unordered_map<std::string, const client::Prediction*> IndexById(
    const std::vector<client::Prediction>& predictions, const char* side) {
  std::unordered_map<std::string, const client::Prediction*> index;
  for (const client::Prediction& p : predictions) {
    if (!index.emplace(p.report_id, &p).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("repeated report id '") + p.report_id +
                      "' in predictions " + side);
    }
  }
  return index;
}

}  // namespace

std::vector<Detection> Vote(const std::vector<client::Prediction>& a,
                            const std::vector<client::Prediction>& b) {
  const auto index_a = IndexById(a, "A");
  const auto index_b = IndexById(b, "B");
  for (const auto& [id, _] : index_a) {
    if (!index_b.count(id)) {
      throw Error(ErrorCode::kIdSetMismatch,
                  "report '" + id + "' is missing from predictions B");
    }
  }
  for (const auto& [id, _] : index_b) {
    if (!index_a.count(id)) {
      throw Error(ErrorCode::kIdSetMismatch,
                  "report '" + id + "' is missing from predictions A");
    }
  }
  std::vector<Detection> out;
  for (const client::Prediction& pa : a) {
    const client::Prediction& pb = *index_b.at(pa.report_id);
    if (pa.failed || pb.failed) continue;
    if (pa.predicted_label != pb.predicted_label) continue;
    const auto type = ToErrorType(pa.predicted_label);
    if (!type) continue;
    Detection d{pa.report_id, *type, {pa.backend_name, pb.backend_name}};
    std::sort(d.backends_agreeing.begin(), d.backends_agreeing.end());
    out.push_back(std::move(d));
  }
  return out;
}

std::string SerializeDetection(const Detection& d) {
  nlohmann::ordered_json j;
  j["report_id"] = d.report_id;
  j["error_type"] = ErrorTypeName(d.error_type);
  j["backends"] = d.backends_agreeing;
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

Detection ParseDetection(std::string_view line, std::size_t line_no) {
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
  auto string_field = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) {
      throw Error(ErrorCode::kSchemaViolation,
                  where + "field '" + key + "': expected a string");
    }
    return j.at(key).get<std::string>();
  };
  Detection d;
  d.report_id = string_field("report_id");
  const std::string type = string_field("error_type");
  const auto parsed = ParseErrorType(type);
  if (!parsed) {
    throw Error(ErrorCode::kSchemaViolation,
                where + "field 'error_type': unknown type '" + type + "'");
  }
  d.error_type = *parsed;
  if (j.contains("backends")) {
    const auto& backends = j.at("backends");
    if (!backends.is_array()) {
      throw Error(ErrorCode::kSchemaViolation,
                  where + "field 'backends': expected an array");
    }
    for (const auto& name : backends) {
      if (!name.is_string()) {
        throw Error(ErrorCode::kSchemaViolation,
                    where + "field 'backends': expected strings");
      }
      d.backends_agreeing.push_back(name.get<std::string>());
    }
    std::sort(d.backends_agreeing.begin(), d.backends_agreeing.end());
  }
  return d;
}

std::vector<Detection> ReadDetections(const std::filesystem::path& path) {
  const std::string body = io::ReadFile(path);
  std::vector<Detection> out;
  std::size_t line_no = 0;
  for (std::string_view line : text::SplitLines(body)) {
    ++line_no;
    if (text::Trim(line).empty()) continue;
    out.push_back(ParseDetection(line, line_no));
  }
  return out;
}

void WriteDetections(const std::vector<Detection>& detections,
                     const std::filesystem::path& path) {
  std::string out;
  for (const Detection& d : detections) {
    out += SerializeDetection(d);
    out += '\n';
  }
  io::WriteFileAtomic(path, out);
}

}  // namespace radproof::ensemble
