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

#ifndef RADPROOF_INJECTOR_VOCABULARY_H_
#define RADPROOF_INJECTOR_VOCABULARY_H_

#include <optional>
#include <string_view>
#include <vector>

// Word lists shared by the injector and the diff oracle. All lookups take
// lower-case words.
namespace radproof::injector::vocab {

// "left" -> "right", "rightward" -> "leftward", ...
std::optional<std::string_view> LateralityCounterpart(std::string_view word);

// Single-token negation cues: "no", "not", "without".
bool IsNegationCue(std::string_view word);

// Temporal-comparison terms ("unchanged", "stable", "increased", ...).
bool IsTemporalTerm(std::string_view word);
// Replacement candidates for a temporal term, in fixed order.
std::vector<std::string_view> TemporalFlips(std::string_view word);

bool IsMeasurementUnit(std::string_view word);
// 1-based month number for "january".."december" and "jan".."dec".
std::optional<int> MonthNumber(std::string_view word);

// Function words and reporting verbs that never carry a finding.
bool IsStopword(std::string_view word);

// Words the injector must not corrupt with typos because a change to them
// reads as a different error class.
bool IsProtectedTerm(std::string_view word);

}  // namespace radproof::injector::vocab

#endif  // RADPROOF_INJECTOR_VOCABULARY_H_
