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

#ifndef RADPROOF_CLI_COMMANDS_H_
#define RADPROOF_CLI_COMMANDS_H_

#include <array>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "radproof/cli/manifest.h"
#include "radproof/dataset/dataset.h"
#include "radproof/metrics/proportion.h"
#include "radproof/prompts/prompt_mode.h"

// Subcommand bodies. Each reads and validates every input before writing
// anything, records its files in the manifest, and throws radproof::Error
// on failure.
namespace radproof::cli {

using Path = std::filesystem::path;

struct Context {
  std::ostream& out;
  std::ostream& err;
  Manifest& manifest;
};

// Reports from JSONL lines carrying at least "id" and "text". "source"
// and "pair_id" are honoured when present, so dataset files qualify too.
std::vector<dataset::LabeledReport> ReadReports(const Path& path);

struct InjectArgs {
  Path in;
  Path out;
  std::string type;  // an error type name, or "all"
  Seed seed = 0;
};
// Pairs each clean report with a corrupted twin. With "all", report i
// takes type i mod 4, moving on to the next type with an eligible site.
// Reports offering no site are skipped and counted on `err`.
void Inject(const InjectArgs& args, Context& ctx);

struct SplitArgs {
  Path in;
  Path train_out;
  Path test_out;
  dataset::SplitOptions options;
  Seed seed = 0;
};
void SplitDataset(const SplitArgs& args, Context& ctx);

struct StatsArgs {
  Path in;
  std::optional<Path> json_out;
};
void Stats(const StatsArgs& args, Context& ctx);

struct DetectArgs {
  Path in;
  Path out;  // also the resume checkpoint
  Path backend;
  prompts::PromptMode mode = prompts::PromptMode::kZeroShot;
  std::optional<Path> train;
  Seed seed = 0;
};
void Detect(const DetectArgs& args, Context& ctx);

struct EvaluateArgs {
  Path gold;
  Path pred;
  std::optional<Path> out;  // JSONL rows
  std::string model;        // defaults to the predictions' backend name
  std::size_t bootstrap = 100;
  Seed seed = 0;
};
void Evaluate(const EvaluateArgs& args, Context& ctx);

struct CompareArgs {
  Path gold;
  Path pred_a;
  Path pred_b;
  std::optional<Path> out;  // JSON report
  std::size_t bootstrap = 100;
  Seed seed = 0;
};
void Compare(const CompareArgs& args, Context& ctx);

struct VoteArgs {
  Path pred_a;
  Path pred_b;
  Path out;
};
void VoteCmd(const VoteArgs& args, Context& ctx);

struct SampleArgs {
  Path in;
  Path out;
  std::size_t per_type = 50;
  Seed seed = 0;
  // Optional review batch creation.
  std::optional<Path> store;
  std::optional<Path> reports;
  std::string batch_id;
  std::array<std::string, 2> reviewers;
};
void Sample(const SampleArgs& args, Context& ctx);

struct ServeArgs {
  Path store;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<Path> ui_dir;
  std::optional<Path> port_file;  // receives the bound port
};
// Blocks until SIGINT, SIGTERM or RequestServeStop().
void Serve(const ServeArgs& args, Context& ctx);
void RequestServeStop();

struct PowerArgs {
  metrics::PowerSpec spec;
  metrics::PowerMethod method = metrics::PowerMethod::kArcsine;
  int digits = 3;
};
void PowerCmd(const PowerArgs& args, Context& ctx);

}  // namespace radproof::cli

#endif  // RADPROOF_CLI_COMMANDS_H_
