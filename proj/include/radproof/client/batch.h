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

#ifndef RADPROOF_CLIENT_BATCH_H_
#define RADPROOF_CLIENT_BATCH_H_

#include <filesystem>
#include <optional>
#include <vector>

#include "radproof/client/detector.h"
#include "radproof/client/prediction.h"
#include "radproof/common/rng.h"
#include "radproof/dataset/dataset.h"
#include "radproof/prompts/prompt_mode.h"

namespace radproof::client {

struct BatchOptions {
  prompts::PromptMode mode = prompts::PromptMode::kZeroShot;
  Seed seed = 0;
  // Pool for random exemplar modes. Each report draws with
  // ExemplarSeed(seed, pair_id) and never sees its own pair.
  const std::vector<dataset::LabeledReport>* training_set = nullptr;
  // When set, each finished prediction is appended here as it completes,
  // and predictions already present (and not failed) are reused instead of
  // queried again. On success the file is rewritten in input order.
  std::optional<std::filesystem::path> checkpoint;
};

// Runs detection over `inputs` with at most config().parallelism requests in
// flight. The result has one prediction per input, in input order. Failures
// of individual reports become failed kUnparseable predictions; an unset API
// key or duplicate report ids throw before any request is sent.
std::vector<Prediction> DetectBatch(
    const Detector& detector,
    const std::vector<dataset::LabeledReport>& inputs,
    const BatchOptions& options);

}  // namespace radproof::client

#endif  // RADPROOF_CLIENT_BATCH_H_
