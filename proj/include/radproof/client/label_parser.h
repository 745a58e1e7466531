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

#ifndef RADPROOF_CLIENT_LABEL_PARSER_H_
#define RADPROOF_CLIENT_LABEL_PARSER_H_

#include <string>
#include <string_view>

#include "radproof/common/labels.h"

namespace radproof::client {

// Maps a free-text model answer to a label. The text is lower-cased and
// every non-alphanumeric character becomes a space. A response that is
// exactly a canonical name wins outright; otherwise the earliest phrase
// from the synonym table decides, so "negation, not laterality" is
// kNegation. Returns kUnparseable when nothing matches.
Label ParseLabel(std::string_view raw);

// The normalization step, exposed for tests.
std::string NormalizeResponse(std::string_view raw);

}  // namespace radproof::client

#endif  // RADPROOF_CLIENT_LABEL_PARSER_H_
