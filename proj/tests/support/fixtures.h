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

#ifndef RADPROOF_TESTS_SUPPORT_FIXTURES_H_
#define RADPROOF_TESTS_SUPPORT_FIXTURES_H_

#include <string>
#include <vector>

#include "radproof/common/rng.h"
#include "radproof/corpus/report.h"

namespace radproof::testing {

// Error-free chest reports, each offering an eligible site for every error
// type. At least 50 entries; ids are "clean-NNN".
const std::vector<corpus::Report>& CleanCorpus();

// Raw texts used to build CleanCorpus(), before the eligibility filter.
std::vector<std::string> CleanCorpusTexts();

// Worked examples with known structure.
std::string NegationSourceReport();     // FINDINGS asserts an effusion
std::string LeftRightSourceReport();    // right-sided pneumothorax
std::string TranscriptionErrorReport(); // contains "starring"
std::string ListImpressionReport();     // numbered impression, dated exam

// Random parser-accepted text: random header lines, sections in random
// order with random header casing and spacing, and random body text. Always
// contains FINDINGS or IMPRESSION.
std::string RandomReportText(Rng& rng);

}  // namespace radproof::testing

#endif  // RADPROOF_TESTS_SUPPORT_FIXTURES_H_
