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

#ifndef RADPROOF_CLIENT_BACKEND_CONFIG_H_
#define RADPROOF_CLIENT_BACKEND_CONFIG_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

namespace radproof::client {

// A chat-completion endpoint. Requests go to {base_url}/chat/completions.
struct BackendConfig {
  std::string name;
  std::string base_url;  // e.g. "http://localhost:8000/v1"
  std::string model_id;
  // Environment variable holding the bearer token; empty for servers that
  // take no key.
  std::string api_key_env;
  double temperature = 0.0;
  std::size_t max_output_tokens = 16;
  double timeout_seconds = 60.0;
  std::size_t max_retries = 3;
  std::size_t parallelism = 1;
  // First retry delay; doubles per retry up to backoff_max_ms.
  std::size_t backoff_initial_ms = 500;
  std::size_t backoff_max_ms = 8000;
};

// Throws Error(kInvalidArgument) naming the offending field.
void Validate(const BackendConfig& config);

// JSON object whose keys are the field names above. Unknown keys are
// rejected. Throws Error(kInvalidArgument) or Error(kIo).
BackendConfig ParseBackendConfig(std::string_view json_text);
BackendConfig LoadBackendConfig(const std::filesystem::path& path);

// Token from config.api_key_env, or "" when no variable is configured.
// Throws Error(kAuthMissing) when the variable is configured but unset or
// empty.
std::string ResolveApiKey(const BackendConfig& config);

}  // namespace radproof::client

#endif  // RADPROOF_CLIENT_BACKEND_CONFIG_H_
