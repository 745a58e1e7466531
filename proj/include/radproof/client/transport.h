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

#ifndef RADPROOF_CLIENT_TRANSPORT_H_
#define RADPROOF_CLIENT_TRANSPORT_H_

#include <memory>
#include <string>

namespace radproof::client {

struct HttpResult {
  int status = 0;  // 0 when no HTTP response arrived
  std::string body;
  std::string error;  // transport failure description when status == 0
};

// Sends one JSON POST. Implementations must be safe to call from several
// threads at once.
class ChatTransport {
 public:
  virtual ~ChatTransport() = default;
  virtual HttpResult PostJson(const std::string& path_suffix,
                              const std::string& body,
                              const std::string& bearer_token,
                              double timeout_seconds) = 0;
};

// cpp-httplib transport rooted at `base_url` ("http[s]://host[:port][/prefix]").
// Throws Error(kInvalidArgument) for a malformed URL.
std::shared_ptr<ChatTransport> MakeHttpTransport(const std::string& base_url);

}  // namespace radproof::client

#endif  // RADPROOF_CLIENT_TRANSPORT_H_
