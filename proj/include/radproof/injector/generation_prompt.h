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

#ifndef RADPROOF_INJECTOR_GENERATION_PROMPT_H_
#define RADPROOF_INJECTOR_GENERATION_PROMPT_H_

#include <optional>
#include <string>

#include "radproof/common/labels.h"
#include "radproof/corpus/report.h"
#include "radproof/templates/template_store.h"

namespace radproof::injector {

// Prompts for the optional LLM-based generation path.
enum class GenerationKind {
  kSyntheticPair,    // write an error-free report and its corrupted twin
  kMimicCorruption,  // corrupt a supplied clean report
};

// Instantiates "generate_synthetic_pair.v1" or
// "generate_mimic_corruption.v1". kMimicCorruption throws
// Error(kMissingSource) without a source report and Error(kInvalidArgument)
// without an error type. kSyntheticPair with no error type asks for any one
// of the four.
std::string BuildGenerationPrompt(
    GenerationKind kind, const corpus::Report* source,
    std::optional<ErrorType> error_type,
    const templates::TemplateStore& store = templates::TemplateStore::Embedded());

}  // namespace radproof::injector

#endif  // RADPROOF_INJECTOR_GENERATION_PROMPT_H_
