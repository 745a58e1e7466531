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

#include "radproof/corpus/report.h"

#include "radproof/common/error.h"
#include "radproof/common/text.h"

namespace radproof::corpus {

std::string_view ReportSourceName(ReportSource source) {
  switch (source) {
    case ReportSource::kSynthetic: return "synthetic";
    case ReportSource::kMimic: return "mimic";
    case ReportSource::kRealWorld: return "real_world";
  }
  return "";
}

std::optional<ReportSource> ParseReportSource(std::string_view name) {
  if (name == "synthetic") return ReportSource::kSynthetic;
  if (name == "mimic") return ReportSource::kMimic;
  if (name == "real_world") return ReportSource::kRealWorld;
  return std::nullopt;
}

std::string SectionKindName(const SectionKind& kind) {
  switch (kind.kind) {
    case SectionKind::kHistoryOrIndication: return "HISTORY_OR_INDICATION";
    case SectionKind::kTechnique: return "TECHNIQUE";
    case SectionKind::kComparison: return "COMPARISON";
    case SectionKind::kFindings: return "FINDINGS";
    case SectionKind::kImpression: return "IMPRESSION";
    case SectionKind::kOther: return "OTHER:" + kind.label;
  }
  return "";
}

std::optional<SectionKind> ParseSectionKindName(std::string_view name) {
  if (name == "HISTORY_OR_INDICATION") {
    return SectionKind{SectionKind::kHistoryOrIndication, {}};
  }
  if (name == "TECHNIQUE") return SectionKind{SectionKind::kTechnique, {}};
  if (name == "COMPARISON") return SectionKind{SectionKind::kComparison, {}};
  if (name == "FINDINGS") return SectionKind::Findings();
  if (name == "IMPRESSION") return SectionKind::Impression();
  constexpr std::string_view kOtherPrefix = "OTHER:";
  if (name.substr(0, kOtherPrefix.size()) == kOtherPrefix) {
    return SectionKind::Other(std::string(name.substr(kOtherPrefix.size())));
  }
  return std::nullopt;
}

const Section* Report::FindSection(SectionKind::Kind kind) const {
  for (const Section& section : sections) {
    if (section.kind.kind == kind) return &section;
  }
  return nullptr;
}

std::size_t Report::WordCount() const {
  std::size_t count = 0;
  for (const std::string& line : header_lines) count += text::WordCount(line);
  for (const Section& section : sections) {
    count += text::WordCount(section.header) + text::WordCount(section.body);
  }
  return count;
}

namespace {

std::string NormalizeLabel(std::string_view label) {
  std::string out;
  bool pending_space = false;
  for (char c : text::Trim(label)) {
    if (text::IsSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    out.push_back(c);
  }
  return out;
}

bool IsUppercaseLabel(std::string_view label) {
  std::size_t letters = 0;
  for (const char c : label) {
    if (c >= 'A' && c <= 'Z') {
      ++letters;
    } else if (c != ' ') {
      return false;
    }
  }
  return letters >= 3;
}

struct HeaderMatch {
  SectionKind kind;
  std::size_t header_length;  // through the colon, relative to line start
};

std::optional<HeaderMatch> MatchHeader(std::string_view line,
                                       const HeaderConfig& config) {
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  const std::size_t label_begin = i;
  if (i >= line.size() || !text::IsAsciiAlpha(line[i])) return std::nullopt;
  while (i < line.size() && (text::IsAsciiAlpha(line[i]) || line[i] == ' ' ||
                             line[i] == '/' || line[i] == '-' ||
                             line[i] == '&')) {
    ++i;
  }
  if (i >= line.size() || line[i] != ':') return std::nullopt;
  const std::string_view label =
      text::Trim(line.substr(label_begin, i - label_begin));
  if (const auto kind = config.Lookup(label)) {
    return HeaderMatch{SectionKind{*kind, {}}, i + 1};
  }
  if (config.accept_uppercase_other && IsUppercaseLabel(label)) {
    return HeaderMatch{SectionKind::Other(std::string(label)), i + 1};
  }
  return std::nullopt;
}

HeaderConfig MakeDefaultConfig() {
  HeaderConfig config;
  for (const char* label :
       {"HISTORY", "CLINICAL HISTORY", "INDICATION", "INDICATIONS",
        "CLINICAL INDICATION", "CLINICAL STATEMENT", "CLINICAL INFORMATION",
        "REASON FOR EXAM", "REASON FOR EXAMINATION"}) {
    config.Add(label, SectionKind::kHistoryOrIndication);
  }
  config.Add("TECHNIQUE", SectionKind::kTechnique);
  config.Add("COMPARISON", SectionKind::kComparison);
  config.Add("COMPARISONS", SectionKind::kComparison);
  config.Add("FINDINGS", SectionKind::kFindings);
  config.Add("FINDING", SectionKind::kFindings);
  config.Add("IMPRESSION", SectionKind::kImpression);
  config.Add("IMPRESSIONS", SectionKind::kImpression);
  config.Add("CONCLUSION", SectionKind::kImpression);
  return config;
}

}  // namespace

const HeaderConfig& HeaderConfig::Default() {
  static const HeaderConfig* const kDefault =
      new HeaderConfig(MakeDefaultConfig());
  return *kDefault;
}

void HeaderConfig::Add(std::string_view label, SectionKind::Kind kind) {
  entries_.emplace_back(NormalizeLabel(label), kind);
}

std::optional<SectionKind::Kind> HeaderConfig::Lookup(
    std::string_view label) const {
  const std::string normalized = NormalizeLabel(label);
  for (const auto& [entry, kind] : entries_) {
    if (entry == normalized) return kind;
  }
  return std::nullopt;
}

Report ParseReport(std::string_view text, const ParseOptions& options) {
  if (text::Trim(text).empty()) {
    throw Error(ErrorCode::kEmptyInput, "report text is blank");
  }
  const HeaderConfig& config =
      options.headers != nullptr ? *options.headers : HeaderConfig::Default();

  Report report;
  report.raw_text = std::string(text);

  std::size_t preamble_end = text.size();
  bool in_preamble = true;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line =
        text.substr(line_start, line_end - line_start);

    if (auto match = MatchHeader(line, config)) {
      const bool history =
          match->kind.kind == SectionKind::kHistoryOrIndication;
      if (!(in_preamble && history)) {
        if (in_preamble) preamble_end = line_start;
        in_preamble = false;
        if (!report.sections.empty()) {
          Section& previous = report.sections.back();
          previous.body = std::string(
              text.substr(previous.body_offset, line_start - previous.body_offset));
        }
        Section section;
        section.kind = std::move(match->kind);
        section.header_offset = line_start;
        section.header = std::string(line.substr(0, match->header_length));
        section.body_offset = line_start + match->header_length;
        report.sections.push_back(std::move(section));
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (!report.sections.empty()) {
    Section& last = report.sections.back();
    last.body = std::string(text.substr(last.body_offset));
  }

  const std::string_view preamble = text.substr(0, preamble_end);
  if (!preamble.empty()) {
    std::vector<std::string_view> lines = text::SplitLines(preamble);
    // A preamble followed by a section always ends in '\n'; the empty piece
    // after it is re-created by RenderReport.
    if (!report.sections.empty()) lines.pop_back();
    for (const std::string_view line : lines) {
      report.header_lines.emplace_back(line);
    }
  }

  if (report.FindSection(SectionKind::kFindings) == nullptr &&
      report.FindSection(SectionKind::kImpression) == nullptr) {
    if (options.strict) {
      throw Error(ErrorCode::kMissingSections,
                  "report has neither FINDINGS nor IMPRESSION");
    }
    report.missing_sections = true;
  }
  return report;
}

std::string RenderReport(const Report& report) {
  std::string out;
  for (std::size_t i = 0; i < report.header_lines.size(); ++i) {
    if (i > 0) out.push_back('\n');
    out += report.header_lines[i];
  }
  if (!report.header_lines.empty() && !report.sections.empty()) {
    out.push_back('\n');
  }
  for (const Section& section : report.sections) {
    out += section.header;
    out += section.body;
  }
  return out;
}

}  // namespace radproof::corpus
