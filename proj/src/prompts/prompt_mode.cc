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

#include "radproof/prompts/prompt_mode.h"

namespace radproof::prompts {

std::string_view ShortName(PromptMode mode) {
  switch (mode) {
    case PromptMode::kZeroShot: return "zs";
    case PromptMode::kOneShotRandom: return "os-ran";
    case PromptMode::kOneShotSpecified: return "os-sp";
    case PromptMode::kFourShotRandom: return "fs-ran";
    case PromptMode::kFourShotSpecified: return "fs-sp";
  }
  return "?";
}

std::optional<PromptMode> ParsePromptMode(std::string_view short_name) {
  for (const PromptMode mode : kAllPromptModes) {
    if (ShortName(mode) == short_name) return mode;
  }
  return std::nullopt;
}

std::size_t ExemplarCount(PromptMode mode) {
  switch (mode) {
    case PromptMode::kZeroShot: return 0;
    case PromptMode::kOneShotRandom:
    case PromptMode::kOneShotSpecified: return 1;
    case PromptMode::kFourShotRandom:
    case PromptMode::kFourShotSpecified: return 4;
  }
  return 0;
}

bool IsSpecified(PromptMode mode) {
  return mode == PromptMode::kOneShotSpecified ||
         mode == PromptMode::kFourShotSpecified;
}

}  // namespace radproof::prompts
