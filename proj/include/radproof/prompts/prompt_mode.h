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

#ifndef RADPROOF_PROMPTS_PROMPT_MODE_H_
#define RADPROOF_PROMPTS_PROMPT_MODE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace radproof::prompts {

enum class PromptMode {
  kZeroShot,
  kOneShotRandom,
  kOneShotSpecified,
  kFourShotRandom,
  kFourShotSpecified,
};

inline constexpr std::array<PromptMode, 5> kAllPromptModes = {
    PromptMode::kZeroShot, PromptMode::kOneShotRandom,
    PromptMode::kOneShotSpecified, PromptMode::kFourShotRandom,
    PromptMode::kFourShotSpecified};

// "zs", "os-ran", "os-sp", "fs-ran", "fs-sp".
std::string_view ShortName(PromptMode mode);
std::optional<PromptMode> ParsePromptMode(std::string_view short_name);

// Number of exemplar blocks: 0, 1 or 4.
std::size_t ExemplarCount(PromptMode mode);
bool IsSpecified(PromptMode mode);

}  // namespace radproof::prompts

#endif  // RADPROOF_PROMPTS_PROMPT_MODE_H_
