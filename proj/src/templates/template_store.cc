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

#include "radproof/templates/template_store.h"

#include <utility>

#include "radproof/common/error.h"
#include "radproof/common/io.h"
#include "radproof/common/text.h"

namespace radproof::templates {
namespace internal {
extern const std::pair<std::string_view, std::string_view> kEmbedded[];
extern const std::size_t kEmbeddedCount;
}  // namespace internal

const TemplateStore& TemplateStore::Embedded() {
  static const TemplateStore* const kStore = [] {
    auto* store = new TemplateStore();
    for (std::size_t i = 0; i < internal::kEmbeddedCount; ++i) {
      store->templates_.emplace(internal::kEmbedded[i].first,
                                internal::kEmbedded[i].second);
    }
    return store;
  }();
  return *kStore;
}

TemplateStore TemplateStore::FromDirectory(const std::filesystem::path& dir) {
  TemplateStore store = Embedded();
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") {
      continue;
    }
    store.templates_[entry.path().stem().string()] = io::ReadFile(entry.path());
  }
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot read template directory " + dir.string());
  }
  return store;
}

const std::string& TemplateStore::Get(std::string_view name) const {
  const auto it = templates_.find(name);
  if (it == templates_.end()) {
    throw Error(ErrorCode::kTemplateNotFound, std::string(name));
  }
  return it->second;
}

bool TemplateStore::Contains(std::string_view name) const {
  return templates_.find(name) != templates_.end();
}

namespace {

bool IsPlaceholderChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

std::string Render(std::string_view tmpl,
                   const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl.compare(i, 2, "{{") == 0) {
      std::size_t j = i + 2;
      while (j < tmpl.size() && IsPlaceholderChar(tmpl[j])) ++j;
      if (j > i + 2 && tmpl.compare(j, 2, "}}") == 0) {
        const std::string name(tmpl.substr(i + 2, j - i - 2));
        const auto it = values.find(name);
        if (it == values.end()) {
          throw Error(ErrorCode::kInvalidArgument,
                      "no value for template placeholder {{" + name + "}}");
        }
        out += it->second;
        i = j + 2;
        continue;
      }
    }
    out.push_back(tmpl[i]);
    ++i;
  }
  return out;
}

std::string ErrorDefinition(const TemplateStore& store, ErrorType type) {
  const std::string name =
      "definition_" + std::string(ErrorTypeName(type)) + ".v1";
  return std::string(text::Trim(store.Get(name)));
}

std::string ErrorDefinitions(const TemplateStore& store) {
  std::string out;
  for (const ErrorType type : kAllErrorTypes) {
    if (!out.empty()) out += "\n\n";
    out += ErrorDefinition(store, type);
  }
  return out;
}

}  // namespace radproof::templates
