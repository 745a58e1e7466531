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

#ifndef RADPROOF_CORPUS_SENTENCE_H_
#define RADPROOF_CORPUS_SENTENCE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "radproof/corpus/report.h"

namespace radproof::corpus {

// A sentence is a trimmed span [start_offset, end_offset) of the report's
// raw_text lying inside the body of `section`.
struct Sentence {
  SectionKind section;
  std::size_t section_index = 0;  // index into Report::sections
  std::size_t start_offset = 0;
  std::size_t end_offset = 0;
  std::string text;
};

// Splits `body` into sentence spans relative to the start of `body`.
//
// Boundaries fall after sentence-final punctuation followed by whitespace,
// at blank lines, and before a numbered list marker that starts a line.
// A period does not end a sentence when it closes a protected abbreviation
// ("Dr.", "e.g."), a single initial, or a list marker such as "1.".
std::vector<std::pair<std::size_t, std::size_t>> SplitSentenceSpans(
    std::string_view body);

// Sentences of every section body, in document order.
std::vector<Sentence> SegmentSentences(const Report& report);

}  // namespace radproof::corpus

#endif  // RADPROOF_CORPUS_SENTENCE_H_
