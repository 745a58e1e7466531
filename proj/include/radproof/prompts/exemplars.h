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

#ifndef RADPROOF_PROMPTS_EXEMPLARS_H_
#define RADPROOF_PROMPTS_EXEMPLARS_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "radproof/common/labels.h"
#include "radproof/common/rng.h"
#include "radproof/dataset/dataset.h"
#include "radproof/prompts/prompt_mode.h"

namespace radproof::prompts {

struct Exemplar {
  std::string report_text;
  Label label = Label::kNone;
  std::string pair_id;  // empty for curated exemplars

  bool operator==(const Exemplar&) const = default;
};

// Items in slot order. One-shot sets hold one item; four-shot sets hold one
// item per error type in kFourShotSlots order.
struct ExemplarSet {
  std::vector<Exemplar> items;

  bool operator==(const ExemplarSet&) const = default;
};

inline constexpr std::array<ErrorType, 4> kFourShotSlots = {
    ErrorType::kTranscription, ErrorType::kIntervalChange,
    ErrorType::kLeftRight, ErrorType::kNegation};

// Curated exemplars for the specified modes.
const ExemplarSet& SpecifiedOneShot();
const ExemplarSet& SpecifiedFourShot();

// Picks exemplars for `mode`. Random modes draw uniformly from the error
// records of `training_set` (one-shot) or from each error type's records
// (four-shot), skipping records whose pair_id equals `exclude_pair_id`.
// Specified modes ignore the training set.
//
// Throws Error(kModeHasNoExemplars) for kZeroShot and
// Error(kInsufficientExemplars) when a required stratum is empty.
ExemplarSet SelectExemplars(PromptMode mode,
                            const std::vector<dataset::LabeledReport>& training_set,
                            Seed seed, std::string_view exclude_pair_id = {});

// Seed for drawing the exemplars of one input report, so that each report
// gets its own draw regardless of batch order.
Seed ExemplarSeed(Seed run_seed, std::string_view pair_id);

// Throws Error(kArityMismatch) when `set` does not fit `mode`, and
// Error(kInvalidArgument) when four-shot labels are out of slot order or a
// label is kUnparseable.
void ValidateExemplars(PromptMode mode, const ExemplarSet& set);

}  // namespace radproof::prompts

#endif  // RADPROOF_PROMPTS_EXEMPLARS_H_
