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

#include "radproof/prompts/exemplars.h"

#include "radproof/common/error.h"

namespace radproof::prompts {

namespace {

using dataset::LabeledReport;

std::vector<const LabeledReport*> Candidates(
    const std::vector<LabeledReport>& training_set,
    std::string_view exclude_pair_id, std::optional<ErrorType> type) {
  std::vector<const LabeledReport*> out;
  for (const auto& r : training_set) {
    const auto error_type = ToErrorType(r.label);
    if (!error_type) continue;
    if (type && *error_type != *type) continue;
    if (!exclude_pair_id.empty() && r.pair_id == exclude_pair_id) continue;
    out.push_back(&r);
  }
  return out;
}

Exemplar Draw(const std::vector<const LabeledReport*>& candidates, Rng& rng) {
  const LabeledReport& r = *candidates[rng.UniformIndex(candidates.size())];
  return Exemplar{r.report.raw_text, r.label, r.pair_id};
}

}  // namespace

ExemplarSet SelectExemplars(PromptMode mode,
                            const std::vector<LabeledReport>& training_set,
                            Seed seed, std::string_view exclude_pair_id) {
  switch (mode) {
    case PromptMode::kZeroShot:
      throw Error(ErrorCode::kModeHasNoExemplars,
                  "zero-shot prompts take no exemplars");
    case PromptMode::kOneShotSpecified: return SpecifiedOneShot();
    case PromptMode::kFourShotSpecified: return SpecifiedFourShot();
    case PromptMode::kOneShotRandom: {
      const auto candidates =
          Candidates(training_set, exclude_pair_id, std::nullopt);
      if (candidates.empty()) {
        throw Error(ErrorCode::kInsufficientExemplars,
                    "training set has no error reports");
      }
      Rng rng(seed);
      return ExemplarSet{{Draw(candidates, rng)}};
    }
    case PromptMode::kFourShotRandom: {
      Rng rng(seed);
      ExemplarSet set;
      for (const ErrorType slot : kFourShotSlots) {
        const auto candidates = Candidates(training_set, exclude_pair_id, slot);
        if (candidates.empty()) {
          throw Error(ErrorCode::kInsufficientExemplars,
                      "training set has no " +
                          std::string(ErrorTypeName(slot)) + " reports");
        }
        set.items.push_back(Draw(candidates, rng));
      }
      return set;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown prompt mode");
}

Seed ExemplarSeed(Seed run_seed, std::string_view pair_id) {
  return DeriveSeed(run_seed, Fnv1a64(pair_id));
}

void ValidateExemplars(PromptMode mode, const ExemplarSet& set) {
  const std::size_t expected = ExemplarCount(mode);
  if (set.items.size() != expected) {
    throw Error(ErrorCode::kArityMismatch,
                std::string(ShortName(mode)) + " expects " +
                    std::to_string(expected) + " exemplars, got " +
                    std::to_string(set.items.size()));
  }
  for (std::size_t i = 0; i < set.items.size(); ++i) {
    const Label label = set.items[i].label;
    if (label == Label::kUnparseable) {
      throw Error(ErrorCode::kInvalidArgument,
                  "exemplar " + std::to_string(i + 1) + " is unparseable");
    }
    if (expected == 4 && label != ToLabel(kFourShotSlots[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "four-shot slot " + std::to_string(i + 1) + " must be " +
                      std::string(ErrorTypeName(kFourShotSlots[i])) + ", got " +
                      std::string(LabelName(label)));
    }
  }
}

}  // namespace radproof::prompts
