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

#include "radproof/common/labels.h"

namespace radproof {

std::string_view ErrorTypeName(ErrorType type) {
  switch (type) {
    case ErrorType::kNegation: return "negation";
    case ErrorType::kLeftRight: return "left_right";
    case ErrorType::kIntervalChange: return "interval_change";
    case ErrorType::kTranscription: return "transcription";
  }
  return "";
}

std::optional<ErrorType> ParseErrorType(std::string_view name) {
  for (const ErrorType type : kAllErrorTypes) {
    if (ErrorTypeName(type) == name) return type;
  }
  return std::nullopt;
}

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kNone: return "none";
    case Label::kUnparseable: return "unparseable";
    default: return ErrorTypeName(*ToErrorType(label));
  }
}

std::optional<Label> ParseLabelName(std::string_view name) {
  if (name == "none") return Label::kNone;
  if (name == "unparseable") return Label::kUnparseable;
  if (const auto type = ParseErrorType(name)) return ToLabel(*type);
  return std::nullopt;
}

}  // namespace radproof
