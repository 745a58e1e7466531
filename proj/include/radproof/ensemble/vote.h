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

#ifndef RADPROOF_ENSEMBLE_VOTE_H_
#define RADPROOF_ENSEMBLE_VOTE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "radproof/client/prediction.h"
#include "radproof/common/labels.h"

namespace radproof::ensemble {

// A report on which both backends named the same error type.
struct Detection {
  std::string report_id;
  ErrorType error_type = ErrorType::kNegation;
  std::vector<std::string> backends_agreeing;  // sorted

  bool operator==(const Detection&) const = default;
};

// One Detection per report where both predictions carry the same concrete
// error type; none and unparseable never vote. Output follows the order of
// `a`. Throws Error(kIdSetMismatch) unless both lists cover the same ids,
// and Error(kInvalidArgument) for a repeated id.
std::vector<Detection> Vote(const std::vector<client::Prediction>& a,
                            const std::vector<client::Prediction>& b);

// {"report_id","error_type","backends"} per line.
std::string SerializeDetection(const Detection& d);
// Throws Error(kSchemaViolation) naming `line_no`.
Detection ParseDetection(std::string_view line, std::size_t line_no);
std::vector<Detection> ReadDetections(const std::filesystem::path& path);
void WriteDetections(const std::vector<Detection>& detections,
                     const std::filesystem::path& path);

}  // namespace radproof::ensemble

#endif  // RADPROOF_ENSEMBLE_VOTE_H_
