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

#include "radproof/common/text.h"

namespace radproof::text {

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

namespace {

bool IsWordByte(char c) {
  return IsAsciiAlpha(c) || IsAsciiDigit(c) ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool IsNumberJoiner(char c) {
  return c == '.' || c == ',' || c == ':' || c == '/';
}

}  // namespace

std::vector<Token> Tokenize(std::string_view s) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t begin = i;
    if (IsSpace(s[i])) {
      while (i < s.size() && IsSpace(s[i])) ++i;
      tokens.push_back({TokenKind::kSpace, begin, i});
    } else if (IsWordByte(s[i])) {
      bool has_alpha = false;
      while (i < s.size()) {
        if (IsWordByte(s[i])) {
          has_alpha = has_alpha || !IsAsciiDigit(s[i]);
          ++i;
        } else if (IsNumberJoiner(s[i]) && i > begin &&
                   IsAsciiDigit(s[i - 1]) && i + 1 < s.size() &&
                   IsAsciiDigit(s[i + 1])) {
          ++i;
        } else {
          break;
        }
      }
      tokens.push_back(
          {has_alpha ? TokenKind::kWord : TokenKind::kNumber, begin, i});
    } else {
      ++i;
      tokens.push_back({TokenKind::kPunct, begin, i});
    }
  }
  return tokens;
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char x = a[i];
    char y = b[i];
    if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
    if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
    if (x != y) return false;
  }
  return true;
}

std::size_t WordCount(std::string_view s) {
  std::size_t count = 0;
  bool in_word = false;
  for (const char c : s) {
    if (IsSpace(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++count;
    }
  }
  return count;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::string MatchCase(std::string_view model, std::string_view word) {
  std::string out(word);
  bool any_alpha = false;
  bool all_upper = true;
  for (const char c : model) {
    if (!IsAsciiAlpha(c)) continue;
    any_alpha = true;
    if (c >= 'a' && c <= 'z') all_upper = false;
  }
  if (!any_alpha) return out;
  if (all_upper && model.size() > 1) {
    for (char& c : out) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return out;
  }
  out = ToLower(out);
  if (!out.empty() && model.front() >= 'A' && model.front() <= 'Z' &&
      out.front() >= 'a' && out.front() <= 'z') {
    out.front() = static_cast<char>(out.front() - 'a' + 'A');
  }
  return out;
}

std::vector<std::string_view> SplitLines(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (true) {
    const std::size_t nl = s.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(s.substr(start));
      break;
    }
    lines.push_back(s.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace radproof::text
