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

#include "radproof/injector/oracle.h"

#include <algorithm>
#include <string>
#include <vector>

#include "radproof/common/error.h"
#include "radproof/common/text.h"
#include "radproof/injector/edit_region.h"
#include "radproof/injector/vocabulary.h"

namespace radproof::injector {

namespace {

std::vector<std::string> LowerWords(std::string_view s) {
  std::vector<std::string> out;
  for (const text::Token& t : text::Tokenize(s)) {
    if (t.IsWordLike()) out.push_back(text::ToLower(s.substr(t.begin, t.size())));
  }
  return out;
}

bool HasDigit(std::string_view s) {
  return std::any_of(s.begin(), s.end(), text::IsAsciiDigit);
}

// Word lists of equal length whose differing positions all satisfy `pred`;
// false when nothing differs.
template <typename Pred>
bool AllChangesSatisfy(const std::vector<std::string>& a,
                       const std::vector<std::string>& b, Pred pred) {
  if (a.size() != b.size()) return false;
  bool changed = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (!pred(a[i], b[i])) return false;
    changed = true;
  }
  return changed;
}

bool IsLateralitySwap(const std::string& a, const std::string& b) {
  const auto other = vocab::LateralityCounterpart(a);
  return other && *other == b;
}

// Drops negation cues, counting how many were removed.
std::vector<std::string> StripCues(const std::vector<std::string>& words,
                                   std::size_t& cues) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (vocab::IsNegationCue(words[i])) {
      ++cues;
    } else if (words[i] == "free" && i + 1 < words.size() &&
               words[i + 1] == "of") {
      ++cues;
      ++i;
    } else {
      out.push_back(words[i]);
    }
  }
  return out;
}

bool IsNegationChange(const std::vector<std::string>& a,
                      const std::vector<std::string>& b) {
  const bool with_swap = AllChangesSatisfy(
      a, b, [](const std::string& x, const std::string& y) {
        return (x == "without" && y == "with") ||
               (x == "with" && y == "without");
      });
  if (with_swap) return true;
  std::size_t cues_a = 0;
  std::size_t cues_b = 0;
  const auto stripped_a = StripCues(a, cues_a);
  const auto stripped_b = StripCues(b, cues_b);
  return cues_a != cues_b && stripped_a == stripped_b;
}

bool IsIntervalChange(const std::vector<std::string>& a,
                      const std::vector<std::string>& b) {
  return AllChangesSatisfy(a, b, [](const std::string& x, const std::string& y) {
    return (vocab::IsTemporalTerm(x) && vocab::IsTemporalTerm(y)) ||
           (HasDigit(x) && HasDigit(y));
  });
}

corpus::SectionKind SectionAt(const corpus::Report& report, std::size_t begin,
                              std::size_t end) {
  for (const corpus::Section& s : report.sections) {
    if (begin >= s.body_offset && end <= s.end_offset()) return s.kind;
  }
  for (const corpus::Section& s : report.sections) {
    if (begin < s.end_offset()) return s.kind;
  }
  return {corpus::SectionKind::kOther, ""};
}

}  // namespace

ErrorAnnotation OracleDetect(const corpus::Report& original,
                             const corpus::Report& corrupted) {
  const std::string_view before = original.raw_text;
  const std::string_view after = corrupted.raw_text;
  if (before == after) {
    throw Error(ErrorCode::kIdenticalInputs,
                "reports '" + original.id + "' and '" + corrupted.id +
                    "' have identical text");
  }
  const EditRegion region = MinimalTokenDiff(before, after);
  ErrorAnnotation a;
  a.span_start = region.after_begin;
  a.span_end = region.after_end;
  a.original_text = std::string(
      before.substr(region.before_begin, region.before_end - region.before_begin));
  a.corrupted_text = std::string(
      after.substr(region.after_begin, region.after_end - region.after_begin));
  a.section = SectionAt(corrupted, a.span_start, a.span_end);

  const auto words_a = LowerWords(a.original_text);
  const auto words_b = LowerWords(a.corrupted_text);
  if (AllChangesSatisfy(words_a, words_b, IsLateralitySwap)) {
    a.error_type = ErrorType::kLeftRight;
  } else if (IsNegationChange(words_a, words_b)) {
    a.error_type = ErrorType::kNegation;
  } else if (IsIntervalChange(words_a, words_b)) {
    a.error_type = ErrorType::kIntervalChange;
  } else {
    a.error_type = ErrorType::kTranscription;
  }
  a.rule_id = "oracle." + std::string(ErrorTypeName(a.error_type));
  return a;
}

}  // namespace radproof::injector
