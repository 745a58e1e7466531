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

#include "radproof/cli/manifest.h"

#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "radproof/common/error.h"
#include "radproof/common/io.h"

namespace radproof::cli {
namespace {

std::string Hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::ordered_json Files(
    const std::vector<std::pair<std::string, std::string>>& files) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [path, hash] : files) {
    out.push_back({{"path", path}, {"fnv1a64", hash}});
  }
  return out;
}

}  // namespace

std::string HashFile(const std::filesystem::path& path) {
  return Hex(Fnv1a64(io::ReadFile(path)));
}

void Manifest::AddInput(const std::filesystem::path& path) {
  inputs.emplace_back(path.string(), HashFile(path));
}

void Manifest::AddOutput(const std::filesystem::path& path) {
  outputs.emplace_back(path.string(), HashFile(path));
}

std::string Manifest::ConfigHash() const {
  nlohmann::ordered_json j;
  j["subcommand"] = subcommand;
  j["version"] = version;
  j["args"] = args;
  j["seed"] = seed ? nlohmann::ordered_json(*seed) : nullptr;
  j["inputs"] = Files(inputs);
  return Hex(Fnv1a64(j.dump()));
}

std::string Manifest::ToJsonLine() const {
  nlohmann::ordered_json j;
  j["tool"] = "radproof";
  j["version"] = version;
  j["subcommand"] = subcommand;
  j["args"] = args;
  j["seed"] = seed ? nlohmann::ordered_json(*seed) : nullptr;
  j["seed_generated"] = seed_generated;
  j["inputs"] = Files(inputs);
  j["config_hash"] = ConfigHash();
  j["outputs"] = Files(outputs);
  return j.dump();
}

void AppendManifest(const Manifest& manifest,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::app | std::ios::binary);
  out << manifest.ToJsonLine() << '\n';
  if (!out) throw Error(ErrorCode::kIo, "cannot append to " + path.string());
}

}  // namespace radproof::cli
