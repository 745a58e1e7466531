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

#ifndef RADPROOF_INJECTOR_EDIT_REGION_H_
#define RADPROOF_INJECTOR_EDIT_REGION_H_

#include <cstddef>
#include <string_view>

namespace radproof::injector {

// Byte ranges [before_begin, before_end) of `before` and
// [after_begin, after_end) of `after` that remain once the longest common
// prefix and then the longest common suffix of whole tokens are removed.
// Token boundaries follow text::Tokenize, so edit regions never split a
// word or a number.
struct EditRegion {
  std::size_t before_begin = 0;
  std::size_t before_end = 0;
  std::size_t after_begin = 0;
  std::size_t after_end = 0;

  bool empty() const {
    return before_begin == before_end && after_begin == after_end;
  }
};

EditRegion MinimalTokenDiff(std::string_view before, std::string_view after);

// Number of maximal contiguous token runs in which the two strings disagree
// under a longest-common-subsequence alignment of their tokens. 0 for
// identical inputs, 1 for a single edit.
std::size_t CountTokenDiffRegions(std::string_view a, std::string_view b);

}  // namespace radproof::injector

#endif  // RADPROOF_INJECTOR_EDIT_REGION_H_
