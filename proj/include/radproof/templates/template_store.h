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

#ifndef RADPROOF_TEMPLATES_TEMPLATE_STORE_H_
#define RADPROOF_TEMPLATES_TEMPLATE_STORE_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "radproof/common/labels.h"

namespace radproof::templates {

// Prompt templates keyed by file stem, e.g. "detect_zero_shot.v1".
//
// The default store serves the copies compiled in from templates/*.txt.
// FromDirectory() overlays a directory of *.txt files on top of them, which
// lets a deployment revise wording without rebuilding.
class TemplateStore {
 public:
  static const TemplateStore& Embedded();
  static TemplateStore FromDirectory(const std::filesystem::path& dir);

  // Throws Error(kTemplateNotFound).
  const std::string& Get(std::string_view name) const;
  bool Contains(std::string_view name) const;

 private:
  std::map<std::string, std::string, std::less<>> templates_;
};

// Replaces every {{NAME}} with values.at(NAME) in a single left-to-right
// pass; substituted text is never rescanned, so report text containing
// braces cannot inject placeholders. A placeholder without a value throws
// Error(kInvalidArgument).
std::string Render(std::string_view tmpl,
                   const std::map<std::string, std::string>& values);

// Text of "definition_<type>.v1" with surrounding whitespace trimmed.
std::string ErrorDefinition(const TemplateStore& store, ErrorType type);

// All four definitions in canonical type order, one paragraph each.
std::string ErrorDefinitions(const TemplateStore& store);

}  // namespace radproof::templates

#endif  // RADPROOF_TEMPLATES_TEMPLATE_STORE_H_
