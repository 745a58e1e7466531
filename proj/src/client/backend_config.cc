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

#include "radproof/client/backend_config.h"

#include <cstdlib>
#include <set>

#include "json.hpp"
#include "radproof/common/error.h"
#include "radproof/common/io.h"

namespace radproof::client {

namespace {

[[noreturn]] void Invalid(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::kInvalidArgument,
              "backend field '" + field + "': " + why);
}

}  // namespace

void Validate(const BackendConfig& c) {
  if (c.name.empty()) Invalid("name", "must not be empty");
  if (!(c.base_url.starts_with("http://") ||
        c.base_url.starts_with("https://"))) {
    Invalid("base_url", "must start with http:// or https://");
  }
  if (c.model_id.empty()) Invalid("model_id", "must not be empty");
  if (!(c.temperature >= 0 && c.temperature <= 1)) {
    Invalid("temperature", "must be in [0, 1]");
  }
  if (c.max_output_tokens == 0) Invalid("max_output_tokens", "must be >= 1");
  if (!(c.timeout_seconds > 0)) Invalid("timeout_seconds", "must be > 0");
  if (c.parallelism == 0) Invalid("parallelism", "must be >= 1");
  if (c.backoff_max_ms < c.backoff_initial_ms) {
    Invalid("backoff_max_ms", "must be >= backoff_initial_ms");
  }
}

BackendConfig ParseBackendConfig(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("backend config is not JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "backend config must be an object");
  }
  static const std::set<std::string> kKeys = {
      "name",           "base_url",        "model_id",
      "api_key_env",    "temperature",     "max_output_tokens",
      "timeout_seconds", "max_retries",    "parallelism",
      "backoff_initial_ms", "backoff_max_ms"};
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.count(key)) Invalid(key, "unknown field");
  }
  BackendConfig c;
  auto read = [&](const char* key, auto& out) {
    if (!j.contains(key)) return;
    try {
      j.at(key).get_to(out);
    } catch (const nlohmann::json::exception&) {
      Invalid(key, "wrong type");
    }
  };
  auto read_count = [&](const char* key, std::size_t& out) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_unsigned()) Invalid(key, "must be a non-negative integer");
    out = j.at(key).get<std::size_t>();
  };
  read("name", c.name);
  read("base_url", c.base_url);
  read("model_id", c.model_id);
  read("api_key_env", c.api_key_env);
  read("temperature", c.temperature);
  read("timeout_seconds", c.timeout_seconds);
  read_count("max_output_tokens", c.max_output_tokens);
  read_count("max_retries", c.max_retries);
  read_count("parallelism", c.parallelism);
  read_count("backoff_initial_ms", c.backoff_initial_ms);
  read_count("backoff_max_ms", c.backoff_max_ms);
  Validate(c);
  return c;
}

BackendConfig LoadBackendConfig(const std::filesystem::path& path) {
  return ParseBackendConfig(io::ReadFile(path));
}

std::string ResolveApiKey(const BackendConfig& config) {
  if (config.api_key_env.empty()) return "";
  const char* value = std::getenv(config.api_key_env.c_str());
  if (value == nullptr || *value == '\0') {
    throw Error(ErrorCode::kAuthMissing,
                "environment variable " + config.api_key_env +
                    " is not set for backend " + config.name);
  }
  return value;
}

}  // namespace radproof::client
