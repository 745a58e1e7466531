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

#ifndef RADPROOF_CORPUS_REPORT_H_
#define RADPROOF_CORPUS_REPORT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace radproof::corpus {

enum class ReportSource { kSynthetic, kMimic, kRealWorld };

std::string_view ReportSourceName(ReportSource source);
std::optional<ReportSource> ParseReportSource(std::string_view name);

// Section kind. `label` is only meaningful for kOther and holds the header
// text exactly as written (without the colon).
struct SectionKind {
  enum Kind {
    kHistoryOrIndication,
    kTechnique,
    kComparison,
    kFindings,
    kImpression,
    kOther,
  };

  Kind kind = kOther;
  std::string label;

  static SectionKind Findings() { return {kFindings, {}}; }
  static SectionKind Impression() { return {kImpression, {}}; }
  static SectionKind Other(std::string label) {
    return {kOther, std::move(label)};
  }

  bool operator==(const SectionKind& other) const {
    return kind == other.kind && (kind != kOther || label == other.label);
  }
};

// Canonical serialized form: "FINDINGS", "IMPRESSION", ... or
// "OTHER:<label>".
std::string SectionKindName(const SectionKind& kind);
std::optional<SectionKind> ParseSectionKindName(std::string_view name);

// One section of a report. `header` is the raw header text from the start of
// its line through the colon ("FINDINGS:", "  Impression:"); `body` is
// everything after the colon up to the next header line, verbatim.
struct Section {
  SectionKind kind;
  std::string header;
  std::string body;
  std::size_t header_offset = 0;  // offset of `header` in raw_text
  std::size_t body_offset = 0;    // offset of `body` in raw_text

  std::size_t end_offset() const { return body_offset + body.size(); }
};

struct Report {
  std::string id;
  ReportSource source = ReportSource::kSynthetic;
  // Lines preceding the first body section, verbatim (blank lines
  // included).
  std::vector<std::string> header_lines;
  std::vector<Section> sections;
  std::string raw_text;
  // Set in lenient mode when neither FINDINGS nor IMPRESSION was found.
  bool missing_sections = false;

  const Section* FindSection(SectionKind::Kind kind) const;
  std::size_t WordCount() const;
};

// Maps header labels to section kinds. Matching is case-insensitive on the
// label with internal whitespace collapsed.
class HeaderConfig {
 public:
  // The built-in inventory (FINDINGS, IMPRESSION, TECHNIQUE, COMPARISON and
  // the common history/indication spellings).
  static const HeaderConfig& Default();

  void Add(std::string_view label, SectionKind::Kind kind);

  // nullopt if `label` is not a recognized header.
  std::optional<SectionKind::Kind> Lookup(std::string_view label) const;

  // Whether an unlisted ALL-CAPS label such as "RECOMMENDATION:" starts an
  // OTHER section.
  bool accept_uppercase_other = true;

 private:
  std::vector<std::pair<std::string, SectionKind::Kind>> entries_;
};

struct ParseOptions {
  bool strict = false;
  const HeaderConfig* headers = nullptr;  // nullptr means Default()
};

// Parses `text` into sections. Lines before the first recognized header
// that is not a history/indication header become header_lines; History and
// Indication lines in that leading block stay header lines.
//
// Throws Error(kEmptyInput) on blank input and Error(kMissingSections) in
// strict mode when neither FINDINGS nor IMPRESSION is present.
Report ParseReport(std::string_view text, const ParseOptions& options = {});

// Exact inverse of ParseReport.
std::string RenderReport(const Report& report);

}  // namespace radproof::corpus

#endif  // RADPROOF_CORPUS_REPORT_H_
