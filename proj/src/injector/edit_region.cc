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

#include "radproof/injector/edit_region.h"

#include <algorithm>
#include <vector>

#include "radproof/common/text.h"

namespace radproof::injector {

namespace {

struct TokenSpan {
  std::vector<text::Token> tokens;
  std::string_view source;

  std::string_view At(std::size_t i) const {
    return source.substr(tokens[i].begin, tokens[i].size());
  }
};

struct TrimResult {
  std::size_t prefix = 0;  // common leading tokens
  std::size_t suffix = 0;  // common trailing tokens
};

TrimResult TrimCommon(const TokenSpan& a, const TokenSpan& b) {
  TrimResult r;
  const std::size_t na = a.tokens.size();
  const std::size_t nb = b.tokens.size();
  while (r.prefix < na && r.prefix < nb && a.At(r.prefix) == b.At(r.prefix)) {
    ++r.prefix;
  }
  while (r.suffix < na - r.prefix && r.suffix < nb - r.prefix &&
         a.At(na - 1 - r.suffix) == b.At(nb - 1 - r.suffix)) {
    ++r.suffix;
  }
  return r;
}

}  // namespace

EditRegion MinimalTokenDiff(std::string_view before, std::string_view after) {
  const TokenSpan a{text::Tokenize(before), before};
  const TokenSpan b{text::Tokenize(after), after};
  const TrimResult t = TrimCommon(a, b);
  const std::size_t na = a.tokens.size();
  const std::size_t nb = b.tokens.size();

  auto begin_of = [](const TokenSpan& s, std::size_t i) {
    return i < s.tokens.size() ? s.tokens[i].begin : s.source.size();
  };
  EditRegion region;
  region.before_begin = begin_of(a, t.prefix);
  region.before_end = begin_of(a, na - t.suffix);
  region.after_begin = begin_of(b, t.prefix);
  region.after_end = begin_of(b, nb - t.suffix);
  return region;
}

std::size_t CountTokenDiffRegions(std::string_view a_text,
                                  std::string_view b_text) {
  const TokenSpan a{text::Tokenize(a_text), a_text};
  const TokenSpan b{text::Tokenize(b_text), b_text};
  const TrimResult t = TrimCommon(a, b);
  const std::size_t n = a.tokens.size() - t.prefix - t.suffix;
  const std::size_t m = b.tokens.size() - t.prefix - t.suffix;
  if (n == 0 && m == 0) return 0;
  if (n == 0 || m == 0) return 1;

  // LCS table over the untrimmed middle; it is a handful of tokens for a
  // single edit, so quadratic space is fine.
  std::vector<std::vector<std::size_t>> lcs(n + 1,
                                            std::vector<std::size_t>(m + 1));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      if (a.At(t.prefix + i) == b.At(t.prefix + j)) {
        lcs[i][j] = lcs[i + 1][j + 1] + 1;
      } else {
        lcs[i][j] = std::max(lcs[i + 1][j], lcs[i][j + 1]);
      }
    }
  }
  std::size_t regions = 0;
  bool in_region = false;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a.At(t.prefix + i) == b.At(t.prefix + j) &&
        lcs[i][j] == lcs[i + 1][j + 1] + 1) {
      in_region = false;
      ++i;
      ++j;
      continue;
    }
    if (!in_region) ++regions;
    in_region = true;
    if (j >= m || (i < n && lcs[i + 1][j] >= lcs[i][j + 1])) {
      ++i;
    } else {
      ++j;
    }
  }
  return regions;
}

}  // namespace radproof::injector
