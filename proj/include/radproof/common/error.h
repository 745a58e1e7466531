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

#ifndef RADPROOF_COMMON_ERROR_H_
#define RADPROOF_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace radproof {

// Every failure surfaced by the library carries one of these codes so that
// callers (and tests) can branch on the kind of failure without parsing
// messages.
enum class ErrorCode {
  kInvalidArgument,
  kIo,
  // corpus
  kEmptyInput,
  kMissingSections,
  // injector
  kNoEligibleSite,
  kIdenticalInputs,
  kMissingSource,
  kTemplateNotFound,
  // dataset
  kCountExceedsPairs,
  kSchemaViolation,
  // prompts
  kInsufficientExemplars,
  kModeHasNoExemplars,
  kArityMismatch,
  // client
  kBackendUnavailable,
  kBackendError,
  kAuthMissing,
  // metrics
  kLengthMismatch,
  kUnknownLabel,
  // ensemble
  kIdSetMismatch,
  kUnknownReviewer,
  kDuplicateJudgment,
  kUnknownReport,
  kBatchClosed,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace radproof

#endif  // RADPROOF_COMMON_ERROR_H_
