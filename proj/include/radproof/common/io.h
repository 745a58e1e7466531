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

#ifndef RADPROOF_COMMON_IO_H_
#define RADPROOF_COMMON_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace radproof::io {

// Whole file as bytes. Throws Error(kIo).
std::string ReadFile(const std::filesystem::path& path);

// Writes `content` to a sibling temporary file and renames it over `path`,
// so readers never observe a half-written file. Throws Error(kIo).
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view content);

}  // namespace radproof::io

#endif  // RADPROOF_COMMON_IO_H_
