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

#include <cmath>
#include <regex>

#include "httplib.h"
#include "radproof/client/transport.h"
#include "radproof/common/error.h"

namespace radproof::client {

namespace {

class HttpTransport : public ChatTransport {
 public:
  HttpTransport(std::string origin, std::string prefix)
      : origin_(std::move(origin)), prefix_(std::move(prefix)) {}

  HttpResult PostJson(const std::string& path_suffix, const std::string& body,
                      const std::string& bearer_token,
                      double timeout_seconds) override {
    // A client per request: httplib::Client is not safe to share between
    // threads, and connection reuse buys little at a few requests per
    // second.
    httplib::Client client(origin_);
    const auto timeout = std::chrono::duration<double>(timeout_seconds);
    const auto usec =
        std::chrono::duration_cast<std::chrono::microseconds>(timeout);
    client.set_connection_timeout(usec);
    client.set_read_timeout(usec);
    client.set_write_timeout(usec);
    httplib::Headers headers;
    if (!bearer_token.empty()) {
      headers.emplace("Authorization", "Bearer " + bearer_token);
    }
    HttpResult result;
    auto response =
        client.Post(prefix_ + path_suffix, headers, body, "application/json");
    if (!response) {
      result.error = httplib::to_string(response.error());
      return result;
    }
    result.status = response->status;
    result.body = std::move(response->body);
    return result;
  }

 private:
  std::string origin_;
  std::string prefix_;
};

}  // namespace

std::shared_ptr<ChatTransport> MakeHttpTransport(const std::string& base_url) {
  static const std::regex kUrl(R"(^(https?://[^/?#]+)(/[^?#]*)?$)");
  std::smatch m;
  if (!std::regex_match(base_url, m, kUrl)) {
    throw Error(ErrorCode::kInvalidArgument, "malformed base_url " + base_url);
  }
  std::string prefix = m[2].str();
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return std::make_shared<HttpTransport>(m[1].str(), prefix);
}

}  // namespace radproof::client
