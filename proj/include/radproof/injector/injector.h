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

#ifndef RADPROOF_INJECTOR_INJECTOR_H_
#define RADPROOF_INJECTOR_INJECTOR_H_

#include <cstddef>
#include <string>
#include <vector>

#include "radproof/common/labels.h"
#include "radproof/common/rng.h"
#include "radproof/corpus/report.h"
#include "radproof/injector/lexicon.h"

namespace radproof::injector {

// What an injection changed. The span indexes the corrupted report's
// raw_text: replacing [span_start, span_end) with original_text restores
// the source report byte for byte.
struct ErrorAnnotation {
  ErrorType error_type = ErrorType::kNegation;
  corpus::SectionKind section;
  std::size_t span_start = 0;
  std::size_t span_end = 0;
  std::string original_text;
  std::string corrupted_text;
  std::string rule_id;

  bool operator==(const ErrorAnnotation&) const = default;
};

struct InjectionResult {
  corpus::Report corrupted;
  ErrorAnnotation annotation;
};

struct InjectorOptions {
  const ConfusionLexicon* lexicon = nullptr;  // nullptr means Default()
};

// Produces the corrupted twin of `report` carrying exactly one error of
// `type`. Edits are confined to FINDINGS and IMPRESSION, except that
// interval-change date edits may also touch COMPARISON. Candidate sites are
// ranked into tiers (cross-section mirrors first, IMPRESSION before
// FINDINGS) and one site is drawn uniformly from the best non-empty tier in
// document order.
//
// Deterministic in (report, type, seed). Throws Error(kNoEligibleSite) when
// the report offers no site for `type`.
InjectionResult Inject(const corpus::Report& report, ErrorType type, Seed seed,
                       const InjectorOptions& options = {});

// Whether Inject(report, type, ...) would find at least one site.
bool HasEligibleSite(const corpus::Report& report, ErrorType type,
                     const InjectorOptions& options = {});

// Replaces [span_start, span_end) of the corrupted report's text with
// original_text.
std::string RevertAnnotation(const std::string& corrupted_text,
                             const ErrorAnnotation& annotation);

// Applies a single text edit to a report, keeping section offsets
// consistent. The edit must lie inside one section body.
corpus::Report ApplyEdit(const corpus::Report& report, std::size_t begin,
                         std::size_t end, std::string_view replacement);

}  // namespace radproof::injector

#endif  // RADPROOF_INJECTOR_INJECTOR_H_
