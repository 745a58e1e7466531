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

#include "radproof/dataset/jsonl.h"


#include "json.hpp"

#include "radproof/common/error.h"
#include "radproof/common/io.h"
#include "radproof/common/text.h"

namespace radproof::dataset {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Violation(std::size_t line_no, std::string_view field,
                            const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation,
              "line " + std::to_string(line_no) + ": field '" +
                  std::string(field) + "': " + what);
}

const Json& Field(const Json& object, std::string_view name,
                  std::size_t line_no, std::string_view prefix = "") {
  const std::string key(name);
  const auto it = object.find(key);
  if (it == object.end()) {
    Violation(line_no, std::string(prefix) + key, "missing");
  }
  return *it;
}

std::string StringField(const Json& object, std::string_view name,
                        std::size_t line_no, std::string_view prefix = "") {
  const Json& v = Field(object, name, line_no, prefix);
  if (!v.is_string()) {
    Violation(line_no, std::string(prefix) + std::string(name),
              "expected a string");
  }
  return v.get<std::string>();
}

std::size_t OffsetField(const Json& object, std::string_view name,
                        std::size_t line_no) {
  const Json& v = Field(object, name, line_no, "error.");
  if (!v.is_number_unsigned()) {
    Violation(line_no, "error." + std::string(name),
              "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

// Checks the invariants shared by reading and writing. Returns a message
// naming the problem, or an empty string.
std::pair<std::string, std::string> CheckRecord(const LabeledReport& r) {
  if (r.label == Label::kUnparseable) {
    return {"label", "unparseable is not a dataset label"};
  }
  if (r.label == Label::kNone) {
    if (r.error) return {"error", "must be null for an error-free record"};
    return {};
  }
  if (!r.error) return {"error", "required for label " + std::string(LabelName(r.label))};
  const injector::ErrorAnnotation& a = *r.error;
  if (ToLabel(a.error_type) != r.label) {
    return {"error.type", "does not match label"};
  }
  const std::string& text = r.report.raw_text;
  if (a.span_start > a.span_end || a.span_end > text.size()) {
    return {"error.span_end", "span lies outside the text"};
  }
  if (text.compare(a.span_start, a.span_end - a.span_start,
                   a.corrupted_text) != 0) {
    return {"error", "corrupted text differs from the text at the span"};
  }
  if (a.corrupted_text == a.original_text) {
    return {"error.original_text", "equals the corrupted text"};
  }
  return {};
}

}  // namespace

std::string SerializeRecord(const LabeledReport& r) {
  if (const auto [field, what] = CheckRecord(r); !field.empty()) {
    throw Error(ErrorCode::kSchemaViolation,
                "record '" + r.report.id + "': field '" + field + "': " + what);
  }
  Json j;
  j["id"] = r.report.id;
  j["pair_id"] = r.pair_id;
  j["source"] = corpus::ReportSourceName(r.report.source);
  j["label"] = LabelName(r.label);
  j["split"] = SplitName(r.split);
  j["text"] = r.report.raw_text;
  if (r.error) {
    const injector::ErrorAnnotation& a = *r.error;
    Json e;
    e["type"] = ErrorTypeName(a.error_type);
    e["section"] = corpus::SectionKindName(a.section);
    e["span_start"] = a.span_start;
    e["span_end"] = a.span_end;
    e["original_text"] = a.original_text;
    e["rule_id"] = a.rule_id;
    j["error"] = std::move(e);
  } else {
    j["error"] = nullptr;
  }
  try {
    return j.dump();
  } catch (const Json::type_error& e) {
    throw Error(ErrorCode::kSchemaViolation,
                "record '" + r.report.id + "': " + e.what());
  }
}

LabeledReport ParseRecord(std::string_view line, std::size_t line_no) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kSchemaViolation,
                "line " + std::to_string(line_no) + ": not valid JSON: " +
                    e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::kSchemaViolation,
                "line " + std::to_string(line_no) + ": not a JSON object");
  }

  LabeledReport r;
  const std::string id = StringField(j, "id", line_no);
  r.pair_id = StringField(j, "pair_id", line_no);
  const auto source = corpus::ParseReportSource(StringField(j, "source", line_no));
  if (!source) Violation(line_no, "source", "unknown source");
  const auto label = ParseLabelName(StringField(j, "label", line_no));
  if (!label) Violation(line_no, "label", "unknown label");
  r.label = *label;
  const auto split = ParseSplit(StringField(j, "split", line_no));
  if (!split) Violation(line_no, "split", "unknown split");
  r.split = *split;
  const std::string text = StringField(j, "text", line_no);
  try {
    r.report = corpus::ParseReport(text);
  } catch (const Error& e) {
    Violation(line_no, "text", e.what());
  }
  r.report.id = id;
  r.report.source = *source;

  const Json& error = Field(j, "error", line_no);
  if (!error.is_null()) {
    if (!error.is_object()) Violation(line_no, "error", "expected object or null");
    injector::ErrorAnnotation a;
    const auto type = ParseErrorType(StringField(error, "type", line_no, "error."));
    if (!type) Violation(line_no, "error.type", "unknown error type");
    a.error_type = *type;
    const auto section =
        corpus::ParseSectionKindName(StringField(error, "section", line_no, "error."));
    if (!section) Violation(line_no, "error.section", "unknown section");
    a.section = *section;
    a.span_start = OffsetField(error, "span_start", line_no);
    a.span_end = OffsetField(error, "span_end", line_no);
    a.original_text = StringField(error, "original_text", line_no, "error.");
    a.rule_id = StringField(error, "rule_id", line_no, "error.");
    if (a.span_start <= a.span_end && a.span_end <= text.size()) {
      a.corrupted_text = text.substr(a.span_start, a.span_end - a.span_start);
    }
    r.error = std::move(a);
  }
  if (const auto [field, what] = CheckRecord(r); !field.empty()) {
    Violation(line_no, field, what);
  }
  return r;
}

std::vector<LabeledReport> ParseDataset(std::string_view jsonl) {
  std::vector<LabeledReport> records;
  std::size_t line_no = 0;
  for (std::string_view line : text::SplitLines(jsonl)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::Trim(line).empty()) continue;
    records.push_back(ParseRecord(line, line_no));
  }
  return records;
}

std::vector<LabeledReport> ReadDataset(const std::filesystem::path& path) {
  return ParseDataset(io::ReadFile(path));
}

void WriteDataset(const std::vector<LabeledReport>& records,
                  const std::filesystem::path& path) {
  std::string out;
  for (const LabeledReport& r : records) {
    out += SerializeRecord(r);
    out += '\n';
  }
  io::WriteFileAtomic(path, out);
}

}  // namespace radproof::dataset
