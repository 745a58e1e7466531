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

#include "radproof/injector/vocabulary.h"

#include <algorithm>
#include <array>
#include <utility>

namespace radproof::injector::vocab {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 4>
    kLaterality = {{{"left", "right"},
                    {"leftward", "rightward"},
                    {"leftsided", "rightsided"},
                    {"leftmost", "rightmost"}}};

struct TemporalEntry {
  std::string_view term;
  std::array<std::string_view, 2> flips;
};

constexpr std::array<TemporalEntry, 12> kTemporal = {{
    {"unchanged", {"increased", "decreased"}},
    {"increased", {"unchanged", "decreased"}},
    {"decreased", {"unchanged", "increased"}},
    {"stable", {"worsened", ""}},
    {"worsened", {"stable", "improved"}},
    {"improved", {"worsened", ""}},
    {"larger", {"smaller", ""}},
    {"smaller", {"larger", ""}},
    {"increasing", {"decreasing", ""}},
    {"decreasing", {"increasing", ""}},
    {"improving", {"worsening", ""}},
    {"worsening", {"improving", ""}},
}};

constexpr auto kUnits = std::to_array<std::string_view>({"mm", "cm", "m",
                                                    "ml", "cc", "mmhg"});

constexpr auto kMonths = std::to_array<std::string_view>({
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december",
    "jan",     "feb",      "mar",       "apr",     "may",      "jun",
    "jul",     "aug",      "sep",       "oct",     "nov",      "dec"});

constexpr auto kStopwords = std::to_array<std::string_view>({
    "about",    "above",     "abnormal",    "across",    "after",
    "again",    "along",     "also",        "although",  "among",
    "appear",   "appears",   "approximately", "around",  "because",
    "before",   "being",     "below",       "between",   "cannot",
    "chest",    "clear",     "clinical",    "clinically", "compared",
    "comparison", "consistent", "could",    "dated",     "demonstrated",
    "demonstrates", "described", "during",  "either",    "evaluate",
    "evaluation", "evidence", "examination", "exclude",  "findings",
    "following", "further",  "given",       "grossly",   "however",
    "identified", "impression", "including", "likely",   "limits",
    "might",    "minimal",   "moderate",    "normal",    "noted",
    "other",    "otherwise", "perhaps",     "please",    "possible",
    "possibly", "present",   "previously",  "prior",     "probably",
    "radiograph", "recommend", "related",   "remains",   "report",
    "since",    "slight",    "slightly",    "small",     "seen",
    "should",   "showing",   "shows",       "significant", "similar",
    "study",    "suggest",   "suggestive",  "technique", "their",
    "there",    "these",     "those",       "through",   "under",
    "views",    "which",     "while",       "within",    "without",
    "would"});

}  // namespace

std::optional<std::string_view> LateralityCounterpart(std::string_view word) {
  for (const auto& [a, b] : kLaterality) {
    if (word == a) return b;
    if (word == b) return a;
  }
  return std::nullopt;
}

bool IsNegationCue(std::string_view word) {
  return word == "no" || word == "not" || word == "without";
}

bool IsTemporalTerm(std::string_view word) {
  return std::any_of(kTemporal.begin(), kTemporal.end(),
                     [&](const TemporalEntry& e) { return e.term == word; });
}

std::vector<std::string_view> TemporalFlips(std::string_view word) {
  std::vector<std::string_view> out;
  for (const TemporalEntry& e : kTemporal) {
    if (e.term != word) continue;
    for (const std::string_view flip : e.flips) {
      if (!flip.empty()) out.push_back(flip);
    }
  }
  return out;
}

bool IsMeasurementUnit(std::string_view word) {
  return std::find(kUnits.begin(), kUnits.end(), word) != kUnits.end();
}

std::optional<int> MonthNumber(std::string_view word) {
  for (std::size_t i = 0; i < kMonths.size(); ++i) {
    if (kMonths[i] == word) return static_cast<int>(i % 12) + 1;
  }
  return std::nullopt;
}

bool IsStopword(std::string_view word) {
  return std::find(kStopwords.begin(), kStopwords.end(), word) !=
         kStopwords.end();
}

bool IsProtectedTerm(std::string_view word) {
  return IsStopword(word) || IsNegationCue(word) || IsTemporalTerm(word) ||
         LateralityCounterpart(word).has_value() || word == "with" ||
         word == "free" || IsMeasurementUnit(word) ||
         MonthNumber(word).has_value();
}

}  // namespace radproof::injector::vocab
