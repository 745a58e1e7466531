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

#ifndef RADPROOF_INJECTOR_ORACLE_H_
#define RADPROOF_INJECTOR_ORACLE_H_

#include "radproof/corpus/report.h"
#include "radproof/injector/injector.h"

namespace radproof::injector {

// Recovers an annotation from a (source, corrupted) pair without knowing
// how the corruption was made. The edit region is the corrupted text left
// after removing the longest common prefix and then the longest common
// suffix of whole tokens. It is classified with precedence
// LeftRight > Negation > IntervalChange > Transcription:
//
//   LeftRight       every changed word is a laterality swap
//   Negation        the only difference is a negation cue ("no", "not",
//                   "without", "free of") added or removed, or
//                   "without" <-> "with"
//   IntervalChange  every changed word is a temporal term or carries digits
//   Transcription   anything else
//
// rule_id is "oracle.<type>". Throws Error(kIdenticalInputs) when the texts
// are equal.
ErrorAnnotation OracleDetect(const corpus::Report& original,
                             const corpus::Report& corrupted);

}  // namespace radproof::injector

#endif  // RADPROOF_INJECTOR_ORACLE_H_
