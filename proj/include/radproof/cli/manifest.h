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

#ifndef RADPROOF_CLI_MANIFEST_H_
#define RADPROOF_CLI_MANIFEST_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radproof/common/rng.h"

namespace radproof::cli {

// 16 hex digits of FNV-1a over the file's bytes. Throws Error(kIo).
std::string HashFile(const std::filesystem::path& path);

// One line of the run manifest. Nothing in it depends on wall-clock time
// or the host, so two runs with equal manifests must have produced
// byte-identical outputs.
struct Manifest {
  std::string subcommand;
  std::string version;
  // Flag values as given, keyed by option name; paths are kept verbatim.
  std::map<std::string, std::string> args;
  std::optional<Seed> seed;
  bool seed_generated = false;
  std::vector<std::pair<std::string, std::string>> inputs;   // path, hash
  std::vector<std::pair<std::string, std::string>> outputs;  // path, hash

  void AddInput(const std::filesystem::path& path);
  void AddOutput(const std::filesystem::path& path);
  // Hash over subcommand, version, args, seed and input hashes.
  std::string ConfigHash() const;
  std::string ToJsonLine() const;
};

// Appends manifest.ToJsonLine() to `path`, creating it if needed.
void AppendManifest(const Manifest& manifest,
                    const std::filesystem::path& path);

}  // namespace radproof::cli

#endif  // RADPROOF_CLI_MANIFEST_H_
