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

#include "radproof/injector/lexicon.h"

#include <algorithm>
#include <set>

#include "radproof/common/error.h"
#include "radproof/common/io.h"
#include "radproof/common/text.h"

namespace radproof::injector {

namespace {

bool IsSingleWord(std::string_view s) {
  if (s.empty()) return false;
  const auto tokens = text::Tokenize(s);
  return tokens.size() == 1 && tokens[0].kind == text::TokenKind::kWord;
}

// Keep in sync with data/confusion_lexicon.tsv.
const ConfusionLexicon::Entry kDefaultEntries[] = {
    {"scarring", "starring"},       {"pleural", "plural"},
    {"effusion", "infusion"},       {"opacity", "capacity"},
    {"lucency", "lunacy"},          {"nodule", "module"},
    {"pneumonia", "ammonia"},       {"fissure", "fisher"},
    {"consolidation", "consultation"}, {"calcified", "classified"},
    {"mediastinal", "medicinal"},   {"edema", "eczema"},
    {"carina", "corona"},           {"bibasilar", "bipolar"},
    {"apical", "topical"},          {"ileus", "illness"},
};

}  // namespace

ConfusionLexicon::ConfusionLexicon(std::vector<Entry> entries) {
  std::set<std::string> seen;
  for (auto& [correct, misheard] : entries) {
    if (!IsSingleWord(correct) || !IsSingleWord(misheard)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lexicon entries must be single words: '" + correct +
                      "' -> '" + misheard + "'");
    }
    std::string key = text::ToLower(correct);
    if (key == text::ToLower(misheard)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lexicon entry maps '" + correct + "' to itself");
    }
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate lexicon entry for '" + correct + "'");
    }
    entries_.emplace_back(std::move(key), std::move(misheard));
  }
}

const ConfusionLexicon& ConfusionLexicon::Default() {
  static const ConfusionLexicon* const kLexicon = new ConfusionLexicon(
      std::vector<Entry>(std::begin(kDefaultEntries), std::end(kDefaultEntries)));
  return *kLexicon;
}

ConfusionLexicon ConfusionLexicon::ParseTsv(std::string_view tsv) {
  std::vector<Entry> entries;
  std::size_t line_no = 0;
  for (std::string_view line : text::SplitLines(tsv)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::Trim(line).empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos ||
        line.find('\t', tab + 1) != std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lexicon line " + std::to_string(line_no) +
                      ": expected two tab-separated columns");
    }
    entries.emplace_back(std::string(text::Trim(line.substr(0, tab))),
                         std::string(text::Trim(line.substr(tab + 1))));
  }
  return ConfusionLexicon(std::move(entries));
}

ConfusionLexicon ConfusionLexicon::LoadTsv(const std::filesystem::path& path) {
  return ParseTsv(io::ReadFile(path));
}

std::optional<std::string> ConfusionLexicon::Substitute(
    std::string_view word) const {
  const std::string key = text::ToLower(word);
  for (const auto& [correct, misheard] : entries_) {
    if (correct == key) return text::MatchCase(word, misheard);
  }
  return std::nullopt;
}

}  // namespace radproof::injector
