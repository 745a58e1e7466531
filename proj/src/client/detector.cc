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

#include "radproof/client/detector.h"

#include <algorithm>
#include <thread>

#include "json.hpp"
#include "radproof/client/label_parser.h"
#include "radproof/common/error.h"
#include "radproof/common/text.h"
#include "radproof/prompts/prompt_builder.h"
#include "spdlog/spdlog.h"

namespace radproof::client {

namespace {

bool Retryable(const HttpResult& r) {
  return r.status == 0 || r.status == 429 || r.status >= 500;
}

std::string Describe(const HttpResult& r) {
  if (r.status == 0) return "transport error: " + r.error;
  std::string body = r.body.substr(0, 200);
  return "HTTP " + std::to_string(r.status) + ": " + body;
}

}  // namespace

std::string BuildChatRequest(const BackendConfig& config,
                             const std::string& system_prompt,
                             const std::string& user_prompt) {
  nlohmann::ordered_json j;
  j["model"] = config.model_id;
  j["messages"] = nlohmann::ordered_json::array(
      {{{"role", "system"}, {"content", system_prompt}},
       {{"role", "user"}, {"content", user_prompt}}});
  j["temperature"] = config.temperature;
  j["max_tokens"] = config.max_output_tokens;
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string ExtractContent(const std::string& response_body) {
  try {
    const auto j = nlohmann::json::parse(response_body);
    const auto& content = j.at("choices").at(0).at("message").at("content");
    if (content.is_null()) return "";
    return content.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kBackendError,
                std::string("unexpected response body: ") + e.what());
  }
}

Detector::Detector(BackendConfig config,
                   std::shared_ptr<ChatTransport> transport,
                   const templates::TemplateStore& store, Sleeper sleeper)
    : config_(std::move(config)),
      transport_(std::move(transport)),
      store_(&store),
      sleeper_(std::move(sleeper)) {
  Validate(config_);
  if (!transport_) transport_ = MakeHttpTransport(config_.base_url);
  if (!sleeper_) {
    sleeper_ = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  }
}

Prediction Detector::DetectOne(const corpus::Report& report,
                               prompts::PromptMode mode,
                               const prompts::ExemplarSet* exemplars) const {
  const std::string token = ResolveApiKey(config_);
  const std::string body = BuildChatRequest(
      config_, std::string(text::Trim(store_->Get("system.v1"))),
      prompts::BuildPrompt(mode, report, exemplars, *store_));

  Prediction p;
  p.report_id = report.id;
  p.backend_name = config_.name;
  const auto start = std::chrono::steady_clock::now();
  std::size_t delay_ms = config_.backoff_initial_ms;
  HttpResult result;
  for (;;) {
    ++p.attempts;
    result = transport_->PostJson("/chat/completions", body, token,
                                  config_.timeout_seconds);
    if (result.status >= 200 && result.status < 300) break;
    if (!Retryable(result)) {
      throw Error(ErrorCode::kBackendError,
                  config_.name + " rejected " + report.id + ": " +
                      Describe(result));
    }
    if (p.attempts > config_.max_retries) {
      throw Error(ErrorCode::kBackendUnavailable,
                  config_.name + " failed " + std::to_string(p.attempts) +
                      " attempts for " + report.id + ": " + Describe(result));
    }
    spdlog::debug("{}: {} for {}, retrying in {} ms", config_.name,
                  Describe(result), report.id, delay_ms);
    sleeper_(std::chrono::milliseconds(delay_ms));
    delay_ms = std::min(delay_ms * 2, config_.backoff_max_ms);
  }
  p.latency_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  p.raw_response = ExtractContent(result.body);
  p.predicted_label = ParseLabel(p.raw_response);
  return p;
}

}  // namespace radproof::client
