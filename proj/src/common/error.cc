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

#include "radproof/common/error.h"

namespace radproof {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kMissingSections: return "MissingSections";
    case ErrorCode::kNoEligibleSite: return "NoEligibleSite";
    case ErrorCode::kIdenticalInputs: return "IdenticalInputs";
    case ErrorCode::kMissingSource: return "MissingSource";
    case ErrorCode::kTemplateNotFound: return "TemplateNotFound";
    case ErrorCode::kCountExceedsPairs: return "CountExceedsPairs";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kInsufficientExemplars: return "InsufficientExemplars";
    case ErrorCode::kModeHasNoExemplars: return "ModeHasNoExemplars";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kBackendUnavailable: return "BackendUnavailable";
    case ErrorCode::kBackendError: return "BackendError";
    case ErrorCode::kAuthMissing: return "AuthMissing";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kIdSetMismatch: return "IdSetMismatch";
    case ErrorCode::kUnknownReviewer: return "UnknownReviewer";
    case ErrorCode::kDuplicateJudgment: return "DuplicateJudgment";
    case ErrorCode::kUnknownReport: return "UnknownReport";
    case ErrorCode::kBatchClosed: return "BatchClosed";
  }
  return "Unknown";
}

}  // namespace radproof
