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

#ifndef RADPROOF_CLIENT_DETECTOR_H_
#define RADPROOF_CLIENT_DETECTOR_H_

#include <chrono>
#include <functional>
#include <memory>
#include <string>

#include "radproof/client/backend_config.h"
#include "radproof/client/prediction.h"
#include "radproof/client/transport.h"
#include "radproof/corpus/report.h"
#include "radproof/prompts/exemplars.h"
#include "radproof/prompts/prompt_mode.h"
#include "radproof/templates/template_store.h"

namespace radproof::client {

// Request body for one detection prompt, in chat-completion shape.
std::string BuildChatRequest(const BackendConfig& config,
                             const std::string& system_prompt,
                             const std::string& user_prompt);

// First choice's message content. Throws Error(kBackendError) when the body
// is not a chat-completion response.
std::string ExtractContent(const std::string& response_body);

class Detector {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  // Validates `config`. A null transport means an HTTP transport to
  // config.base_url. `sleeper` defaults to std::this_thread::sleep_for.
  explicit Detector(BackendConfig config,
                    std::shared_ptr<ChatTransport> transport = nullptr,
                    const templates::TemplateStore& store =
                        templates::TemplateStore::Embedded(),
                    Sleeper sleeper = nullptr);

  // One request, retried on transport failures, 429 and 5xx with
  // exponential backoff, at most config.max_retries times.
  //
  // Throws Error(kAuthMissing) before sending anything when the key
  // variable is unset, Error(kBackendUnavailable) once retries are spent,
  // Error(kBackendError) for other HTTP errors or a malformed body, and
  // whatever BuildPrompt throws.
  Prediction DetectOne(const corpus::Report& report, prompts::PromptMode mode,
                       const prompts::ExemplarSet* exemplars) const;

  const BackendConfig& config() const { return config_; }

 private:
  BackendConfig config_;
  std::shared_ptr<ChatTransport> transport_;
  const templates::TemplateStore* store_;
  Sleeper sleeper_;
};

}  // namespace radproof::client

#endif  // RADPROOF_CLIENT_DETECTOR_H_
