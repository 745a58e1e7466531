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

#ifndef RADPROOF_DATASET_JSONL_H_
#define RADPROOF_DATASET_JSONL_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "radproof/dataset/dataset.h"

// Dataset files are UTF-8 JSONL, one record per line, keys in this order:
//
//   {"id", "pair_id", "source", "label", "split", "text",
//    "error": {"type", "section", "span_start", "span_end",
//              "original_text", "rule_id"} | null}
//
// Offsets are byte offsets into "text". The corrupted text of an annotation
// is not stored; it is the [span_start, span_end) slice of "text".
namespace radproof::dataset {

// One line without the trailing newline. Throws Error(kSchemaViolation) if
// the record breaks a dataset invariant (label/error mismatch, span outside
// the text, invalid UTF-8).
std::string SerializeRecord(const LabeledReport& record);

// Parses one line. `line_no` (1-based) is used in error messages, which name
// the offending field: "line 7: field 'label': ...".
LabeledReport ParseRecord(std::string_view line, std::size_t line_no);

// Whole-file helpers. Writing goes through a temporary file renamed into
// place. Blank lines are skipped on read.
void WriteDataset(const std::vector<LabeledReport>& records,
                  const std::filesystem::path& path);
std::vector<LabeledReport> ReadDataset(const std::filesystem::path& path);
std::vector<LabeledReport> ParseDataset(std::string_view jsonl);

}  // namespace radproof::dataset

#endif  // RADPROOF_DATASET_JSONL_H_
