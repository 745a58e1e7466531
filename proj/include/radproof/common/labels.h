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

#ifndef RADPROOF_COMMON_LABELS_H_
#define RADPROOF_COMMON_LABELS_H_

#include <array>
#include <optional>
#include <string_view>

namespace radproof {

// The four error classes. Serialized names are part of the dataset and
// prediction file formats and must not change.
enum class ErrorType {
  kNegation,
  kLeftRight,
  kIntervalChange,
  kTranscription,
};

inline constexpr std::array<ErrorType, 4> kAllErrorTypes = {
    ErrorType::kNegation, ErrorType::kLeftRight, ErrorType::kIntervalChange,
    ErrorType::kTranscription};

// Report-level label. kUnparseable only ever appears on predictions.
enum class Label {
  kNone,
  kNegation,
  kLeftRight,
  kIntervalChange,
  kTranscription,
  kUnparseable,
};

std::string_view ErrorTypeName(ErrorType type);
std::optional<ErrorType> ParseErrorType(std::string_view name);

std::string_view LabelName(Label label);
std::optional<Label> ParseLabelName(std::string_view name);

constexpr Label ToLabel(ErrorType type) {
  switch (type) {
    case ErrorType::kNegation: return Label::kNegation;
    case ErrorType::kLeftRight: return Label::kLeftRight;
    case ErrorType::kIntervalChange: return Label::kIntervalChange;
    case ErrorType::kTranscription: return Label::kTranscription;
  }
  return Label::kNone;
}

// nullopt for kNone and kUnparseable.
constexpr std::optional<ErrorType> ToErrorType(Label label) {
  switch (label) {
    case Label::kNegation: return ErrorType::kNegation;
    case Label::kLeftRight: return ErrorType::kLeftRight;
    case Label::kIntervalChange: return ErrorType::kIntervalChange;
    case Label::kTranscription: return ErrorType::kTranscription;
    default: return std::nullopt;
  }
}

constexpr std::size_t Index(ErrorType type) {
  return static_cast<std::size_t>(type);
}

}  // namespace radproof

#endif  // RADPROOF_COMMON_LABELS_H_
