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

#ifndef RADPROOF_CLI_RUN_H_
#define RADPROOF_CLI_RUN_H_

#include <ostream>
#include <string>
#include <vector>

namespace radproof::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Parses `args` (without the program name) and runs one subcommand:
// inject, split, stats, detect, evaluate, compare, vote, sample, serve or
// power. Usage errors print a diagnostic naming the flag and return 2;
// runtime failures return 1. Every successful run appends a manifest line.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace radproof::cli

#endif  // RADPROOF_CLI_RUN_H_
