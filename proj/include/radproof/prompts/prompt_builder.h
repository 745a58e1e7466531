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

#ifndef RADPROOF_PROMPTS_PROMPT_BUILDER_H_
#define RADPROOF_PROMPTS_PROMPT_BUILDER_H_

#include <string>
#include <string_view>

#include "radproof/corpus/report.h"
#include "radproof/prompts/exemplars.h"
#include "radproof/prompts/prompt_mode.h"
#include "radproof/templates/template_store.h"

namespace radproof::prompts {

// Stem of the detection template used for `mode`.
std::string_view TemplateName(PromptMode mode);

// Instantiates the detection template: error definitions, exemplar blocks
// in slot order, the input report verbatim, then the answer format line.
// `exemplars` must be null for kZeroShot and match ExemplarCount(mode)
// otherwise; see ValidateExemplars for the errors thrown.
std::string BuildPrompt(
    PromptMode mode, const corpus::Report& input,
    const ExemplarSet* exemplars,
    const templates::TemplateStore& store = templates::TemplateStore::Embedded());

}  // namespace radproof::prompts

#endif  // RADPROOF_PROMPTS_PROMPT_BUILDER_H_
