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

#include "radproof/prompts/prompt_builder.h"

#include <map>

#include "radproof/common/error.h"

namespace radproof::prompts {

std::string_view TemplateName(PromptMode mode) {
  switch (ExemplarCount(mode)) {
    case 0: return "detect_zero_shot.v1";
    case 1: return "detect_one_shot.v1";
    default: return "detect_four_shot.v1";
  }
}

std::string BuildPrompt(PromptMode mode, const corpus::Report& input,
                        const ExemplarSet* exemplars,
                        const templates::TemplateStore& store) {
  static const ExemplarSet kNone;
  const ExemplarSet& set = exemplars ? *exemplars : kNone;
  ValidateExemplars(mode, set);

  std::map<std::string, std::string> values = {
      {"ERROR_DEFINITIONS", templates::ErrorDefinitions(store)},
      {"INPUT_REPORT", input.raw_text},
  };
  for (std::size_t i = 0; i < set.items.size(); ++i) {
    const std::string slot = "EXAMPLE_" + std::to_string(i + 1);
    values[slot + "_TEXT"] = set.items[i].report_text;
    values[slot + "_LABEL"] = std::string(LabelName(set.items[i].label));
  }
  return templates::Render(store.Get(TemplateName(mode)), values);
}

}  // namespace radproof::prompts
