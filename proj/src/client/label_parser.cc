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

#include "radproof/client/label_parser.h"

#include <array>
#include <utility>

#include "radproof/common/text.h"

namespace radproof::client {

namespace {

// Phrases in normalized form (lower case, single spaces).
constexpr std::array<std::pair<std::string_view, Label>, 25> kSynonyms = {{
    {"none", Label::kNone},
    {"no error", Label::kNone},
    {"no errors", Label::kNone},
    {"error free", Label::kNone},
    {"correct", Label::kNone},
    {"negation", Label::kNegation},
    {"negated", Label::kNegation},
    {"left right", Label::kLeftRight},
    {"right left", Label::kLeftRight},
    {"laterality", Label::kLeftRight},
    {"side", Label::kLeftRight},
    {"sidedness", Label::kLeftRight},
    {"interval change", Label::kIntervalChange},
    {"interval", Label::kIntervalChange},
    {"temporal change", Label::kIntervalChange},
    {"temporal", Label::kIntervalChange},
    {"transcription", Label::kTranscription},
    {"transcriptional", Label::kTranscription},
    {"typo", Label::kTranscription},
    {"typographical", Label::kTranscription},
    {"spelling", Label::kTranscription},
    {"misspelling", Label::kTranscription},
    {"misspelled", Label::kTranscription},
    {"speech recognition", Label::kTranscription},
    {"dictation", Label::kTranscription},
}};

// Offset of the first whole-word occurrence of `phrase` in `text`, which
// both use single spaces as the only separator.
std::size_t FindWords(std::string_view text, std::string_view phrase) {
  for (std::size_t at = text.find(phrase); at != std::string_view::npos;
       at = text.find(phrase, at + 1)) {
    const bool starts = at == 0 || text[at - 1] == ' ';
    const std::size_t end = at + phrase.size();
    const bool ends = end == text.size() || text[end] == ' ';
    if (starts && ends) return at;
  }
  return std::string_view::npos;
}

}  // namespace

std::string NormalizeResponse(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (const char c : raw) {
    const char lower = text::ToLower(std::string_view(&c, 1))[0];
    const bool keep = text::IsAsciiAlpha(lower) || text::IsAsciiDigit(lower);
    if (keep) {
      out.push_back(lower);
    } else if (!out.empty() && out.back() != ' ') {
      out.push_back(' ');
    }
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

Label ParseLabel(std::string_view raw) {
  const std::string text = NormalizeResponse(raw);
  for (const Label label : {Label::kNone, Label::kNegation, Label::kLeftRight,
                            Label::kIntervalChange, Label::kTranscription}) {
    if (text == NormalizeResponse(LabelName(label))) return label;
  }
  std::size_t best_at = std::string_view::npos;
  std::size_t best_len = 0;
  Label best = Label::kUnparseable;
  for (const auto& [phrase, label] : kSynonyms) {
    const std::size_t at = FindWords(text, phrase);
    if (at == std::string_view::npos) continue;
    // Earliest wins; at the same offset the longer phrase is more specific.
    if (at < best_at || (at == best_at && phrase.size() > best_len)) {
      best_at = at;
      best_len = phrase.size();
      best = label;
    }
  }
  return best;
}

}  // namespace radproof::client
