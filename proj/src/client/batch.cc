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

#include "radproof/client/batch.h"

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "radproof/common/error.h"
#include "radproof/common/io.h"
#include "radproof/common/text.h"
#include "radproof/prompts/exemplars.h"
#include "spdlog/spdlog.h"

namespace radproof::client {

namespace {

using prompts::PromptMode;

// Completed predictions from an earlier run. A torn final line from a
// crash is dropped; any other malformed line is an error.
std::map<std::string, Prediction> LoadCheckpoint(
    const std::filesystem::path& path) {
  std::map<std::string, Prediction> done;
  if (!std::filesystem::exists(path)) return done;
  const std::string body = io::ReadFile(path);
  const auto lines = text::SplitLines(body);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (text::Trim(lines[i]).empty()) continue;
    Prediction p;
    try {
      p = ParsePrediction(lines[i], i + 1);
    } catch (const Error&) {
      const bool torn_tail = i + 1 == lines.size() && !body.ends_with('\n');
      if (!torn_tail) throw;
      spdlog::warn("{}: dropping incomplete final line", path.string());
      continue;
    }
    if (!p.failed) done[p.report_id] = std::move(p);
  }
  return done;
}

// Serializes appends from the worker threads.
class CheckpointWriter {
 public:
  explicit CheckpointWriter(const std::filesystem::path& path)
      : out_(path, std::ios::binary | std::ios::app) {
    if (!out_) throw Error(ErrorCode::kIo, "cannot append to " + path.string());
  }

  void Append(const Prediction& p) {
    const std::string line = SerializePrediction(p) + "\n";
    std::lock_guard lock(mu_);
    out_ << line;
    out_.flush();
  }

 private:
  std::mutex mu_;
  std::ofstream out_;
};

Prediction Failed(const Detector& detector, const std::string& report_id,
                  const std::string& reason) {
  Prediction p;
  p.report_id = report_id;
  p.backend_name = detector.config().name;
  p.predicted_label = Label::kUnparseable;
  p.failed = true;
  p.error = reason;
  return p;
}

}  // namespace

std::vector<Prediction> DetectBatch(
    const Detector& detector,
    const std::vector<dataset::LabeledReport>& inputs,
    const BatchOptions& options) {
  std::set<std::string> ids;
  for (const auto& r : inputs) {
    if (!ids.insert(r.report.id).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate report id " + r.report.id);
    }
  }
  ResolveApiKey(detector.config());  // fail fast, before any request
  const bool random = options.mode == PromptMode::kOneShotRandom ||
                      options.mode == PromptMode::kFourShotRandom;
  if (random && options.training_set == nullptr) {
    throw Error(ErrorCode::kInsufficientExemplars,
                std::string(prompts::ShortName(options.mode)) +
                    " needs a training set");
  }
  std::optional<prompts::ExemplarSet> fixed;
  if (prompts::IsSpecified(options.mode)) {
    fixed = prompts::SelectExemplars(options.mode, {}, options.seed);
  }

  std::vector<std::optional<Prediction>> results(inputs.size());
  std::unique_ptr<CheckpointWriter> writer;
  if (options.checkpoint) {
    auto done = LoadCheckpoint(*options.checkpoint);
    std::vector<Prediction> kept;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      auto it = done.find(inputs[i].report.id);
      if (it == done.end()) continue;
      results[i] = it->second;
      kept.push_back(it->second);
    }
    // Drop stale, failed and torn records before appending.
    WritePredictions(kept, *options.checkpoint);
    writer = std::make_unique<CheckpointWriter>(*options.checkpoint);
    if (!kept.empty()) {
      spdlog::info("resuming: {} of {} reports already done", kept.size(),
                   inputs.size());
    }
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!results[i]) pending.push_back(i);
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> finished{0};
  auto work = [&] {
    for (std::size_t k = next++; k < pending.size(); k = next++) {
      const auto& input = inputs[pending[k]];
      Prediction p;
      try {
        std::optional<prompts::ExemplarSet> drawn;
        const prompts::ExemplarSet* exemplars = fixed ? &*fixed : nullptr;
        if (random) {
          drawn = prompts::SelectExemplars(
              options.mode, *options.training_set,
              prompts::ExemplarSeed(options.seed, input.pair_id),
              input.pair_id);
          exemplars = &*drawn;
        }
        p = detector.DetectOne(input.report, options.mode, exemplars);
      } catch (const std::exception& e) {
        spdlog::warn("{}: {}", input.report.id, e.what());
        p = Failed(detector, input.report.id, e.what());
      }
      if (writer) writer->Append(p);
      results[pending[k]] = std::move(p);
      const std::size_t n = ++finished;
      if (n % 100 == 0 || n == pending.size()) {
        spdlog::info("{}: {}/{} reports", detector.config().name, n,
                     pending.size());
      }
    }
  };
  {
    const std::size_t workers =
        std::min(detector.config().parallelism, pending.size());
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<Prediction> out;
  out.reserve(inputs.size());
  for (auto& r : results) out.push_back(std::move(*r));
  if (options.checkpoint) WritePredictions(out, *options.checkpoint);
  return out;
}

}  // namespace radproof::client
