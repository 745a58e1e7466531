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

#include "radproof/injector/generation_prompt.h"

#include <map>

#include "radproof/common/error.h"

namespace radproof::injector {

std::string BuildGenerationPrompt(GenerationKind kind,
                                  const corpus::Report* source,
                                  std::optional<ErrorType> error_type,
                                  const templates::TemplateStore& store) {
  std::map<std::string, std::string> values;
  if (error_type) {
    values["ERROR_TYPE"] = std::string(ErrorTypeName(*error_type));
    values["ERROR_DEFINITION"] = templates::ErrorDefinition(store, *error_type);
  } else {
    values["ERROR_TYPE"] =
        "negation, left_right, interval_change or transcription (choose one)";
    values["ERROR_DEFINITION"] = templates::ErrorDefinitions(store);
  }

  if (kind == GenerationKind::kSyntheticPair) {
    return templates::Render(store.Get("generate_synthetic_pair.v1"), values);
  }
  if (source == nullptr) {
    throw Error(ErrorCode::kMissingSource,
                "mimic_corruption prompt needs a source report");
  }
  if (!error_type) {
    throw Error(ErrorCode::kInvalidArgument,
                "mimic_corruption prompt needs an error type");
  }
  values["REPORT"] = source->raw_text;
  return templates::Render(store.Get("generate_mimic_corruption.v1"), values);
}

}  // namespace radproof::injector
