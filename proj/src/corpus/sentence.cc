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

#include "radproof/corpus/sentence.h"

#include <algorithm>
#include <array>

#include "radproof/common/text.h"

namespace radproof::corpus {

namespace {

constexpr std::array<std::string_view, 14> kAbbreviations = {
    "dr", "mr", "mrs", "ms", "prof", "st", "vs", "e.g", "i.e", "approx",
    "fig", "cf", "al", "resp"};

bool IsClosing(char c) {
  return c == '.' || c == '!' || c == '?' || c == ')' || c == '"' ||
         c == '\'' || c == ']';
}

bool AtLineStart(std::string_view body, std::size_t pos) {
  while (pos > 0) {
    const char c = body[pos - 1];
    if (c == '\n') return true;
    if (c != ' ' && c != '\t') return false;
    --pos;
  }
  return true;
}

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), text::IsAsciiDigit);
}

// `period` indexes a '.' that is followed by whitespace or end of text.
bool IsProtectedPeriod(std::string_view body, std::size_t period) {
  std::size_t word_begin = period;
  while (word_begin > 0 && !text::IsSpace(body[word_begin - 1])) --word_begin;
  std::string_view word = body.substr(word_begin, period - word_begin);
  while (!word.empty() && (word.front() == '(' || word.front() == '"')) {
    word.remove_prefix(1);
    ++word_begin;
  }
  if (word.empty()) return false;
  if (AllDigits(word) && AtLineStart(body, word_begin)) return true;
  if (word.size() == 1 && text::IsAsciiAlpha(word[0])) return true;
  const std::string lower = text::ToLower(word);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) !=
         kAbbreviations.end();
}

// Length of a list marker ("12." or "3)") followed by a blank at `pos`, or
// 0 if there is none.
std::size_t ListMarkerLength(std::string_view body, std::size_t pos) {
  std::size_t i = pos;
  while (i < body.size() && text::IsAsciiDigit(body[i])) ++i;
  if (i == pos || i - pos > 3 || i >= body.size()) return 0;
  if (body[i] != '.' && body[i] != ')') return 0;
  ++i;
  if (i < body.size() && (body[i] == ' ' || body[i] == '\t')) return i - pos;
  return 0;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> SplitSentenceSpans(
    std::string_view body) {
  // Cut positions split the body into segments; each non-blank segment,
  // trimmed, is a sentence.
  std::vector<std::size_t> cuts;
  std::size_t i = 0;
  while (i < body.size()) {
    const char c = body[i];
    if (c == '.' || c == '!' || c == '?') {
      std::size_t j = i + 1;
      while (j < body.size() && IsClosing(body[j])) ++j;
      const bool followed_by_space = j == body.size() || text::IsSpace(body[j]);
      if (followed_by_space && !(c == '.' && j == i + 1 &&
                                 IsProtectedPeriod(body, i))) {
        cuts.push_back(j);
      }
      i = j;
      continue;
    }
    if (c == '\n') {
      std::size_t j = i + 1;
      bool blank_line = false;
      while (j < body.size() && text::IsSpace(body[j])) {
        if (body[j] == '\n') blank_line = true;
        ++j;
      }
      if (blank_line) {
        cuts.push_back(i);
      } else if (j < body.size() && ListMarkerLength(body, j) > 0) {
        cuts.push_back(j);
      }
      i = j;
      continue;
    }
    ++i;
  }
  cuts.push_back(body.size());

  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t start = 0;
  for (const std::size_t cut : cuts) {
    std::size_t b = start;
    std::size_t e = cut;
    while (b < e && text::IsSpace(body[b])) ++b;
    while (e > b && text::IsSpace(body[e - 1])) --e;
    if (b < e) spans.emplace_back(b, e);
    start = cut;
  }
  return spans;
}

std::vector<Sentence> SegmentSentences(const Report& report) {
  std::vector<Sentence> sentences;
  for (std::size_t s = 0; s < report.sections.size(); ++s) {
    const Section& section = report.sections[s];
    for (const auto& [b, e] : SplitSentenceSpans(section.body)) {
      Sentence sentence;
      sentence.section = section.kind;
      sentence.section_index = s;
      sentence.start_offset = section.body_offset + b;
      sentence.end_offset = section.body_offset + e;
      sentence.text = section.body.substr(b, e - b);
      sentences.push_back(std::move(sentence));
    }
  }
  return sentences;
}

}  // namespace radproof::corpus
