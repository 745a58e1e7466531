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

#ifndef RADPROOF_INJECTOR_LEXICON_H_
#define RADPROOF_INJECTOR_LEXICON_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace radproof::injector {

// Pairs of (correct term, misheard term) used for speech-recognition style
// substitutions, e.g. ("scarring", "starring").
class ConfusionLexicon {
 public:
  using Entry = std::pair<std::string, std::string>;

  // Throws Error(kInvalidArgument) if a pair has identical sides, a side is
  // not a single word, or a correct term repeats.
  explicit ConfusionLexicon(std::vector<Entry> entries);

  static const ConfusionLexicon& Default();

  // Two-column TSV: correct<TAB>misheard. Blank lines and lines starting with
  // '#' are ignored.
  static ConfusionLexicon ParseTsv(std::string_view tsv);
  static ConfusionLexicon LoadTsv(const std::filesystem::path& path);

  // Case-insensitive lookup; the result follows the casing of `word`.
  std::optional<std::string> Substitute(std::string_view word) const;

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;  // correct terms stored lower-case
};

}  // namespace radproof::injector

#endif  // RADPROOF_INJECTOR_LEXICON_H_
