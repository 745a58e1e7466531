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

#ifndef RADPROOF_COMMON_TEXT_H_
#define RADPROOF_COMMON_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace radproof::text {

enum class TokenKind { kWord, kNumber, kSpace, kPunct };

// A token is a byte range [begin, end) of the tokenized string.
struct Token {
  TokenKind kind;
  std::size_t begin;
  std::size_t end;

  std::size_t size() const { return end - begin; }
  bool IsWordLike() const {
    return kind == TokenKind::kWord || kind == TokenKind::kNumber;
  }
};

// Splits into maximal alphanumeric runs, whitespace runs and single
// punctuation characters. '.', ',', ':' and '/' between two digits stay
// inside a number, so "3.5", "04/03/2010" and "07:32" are single tokens.
// Bytes >= 0x80 are treated as letters so UTF-8 sequences are never split.
std::vector<Token> Tokenize(std::string_view s);

bool IsAsciiAlpha(char c);
bool IsAsciiDigit(char c);
bool IsSpace(char c);

std::string ToLower(std::string_view s);
bool EqualsIgnoreCase(std::string_view a, std::string_view b);

// Number of whitespace-delimited tokens.
std::size_t WordCount(std::string_view s);

std::string_view Trim(std::string_view s);

// Re-cases `word` to follow the pattern of `model`: ALL CAPS, Capitalized
// or lower case.
std::string MatchCase(std::string_view model, std::string_view word);

std::vector<std::string_view> SplitLines(std::string_view s);

}  // namespace radproof::text

#endif  // RADPROOF_COMMON_TEXT_H_
