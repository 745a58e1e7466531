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

#include "radproof/cli/run.h"

#include <random>

#include "CLI11.hpp"
#include "radproof/cli/commands.h"
#include "radproof/common/error.h"

namespace radproof::cli {
namespace {

std::vector<std::string> TypeChoices(bool with_all) {
  std::vector<std::string> out;
  for (const ErrorType t : kAllErrorTypes) out.emplace_back(ErrorTypeName(t));
  if (with_all) out.emplace_back("all");
  return out;
}

std::vector<std::string> ModeChoices() {
  std::vector<std::string> out;
  for (const auto m : prompts::kAllPromptModes) {
    out.emplace_back(prompts::ShortName(m));
  }
  return out;
}

// A --seed option whose absence is recorded rather than defaulted.
struct SeedFlag {
  Seed value = 0;
  CLI::Option* option = nullptr;

  void Add(CLI::App* app) {
    option = app->add_option("--seed", value,
                             "RNG seed; generated and recorded when omitted");
  }
  // The seed to use; generates one when the flag was not given.
  Seed Resolve(Manifest& manifest, std::ostream& err) {
    if (option->count() == 0) {
      std::random_device device;
      value = (static_cast<Seed>(device()) << 32) | device();
      manifest.seed_generated = true;
      err << "seed: " << value << " (generated)\n";
    }
    manifest.seed = value;
    return value;
  }
};

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Proofreading toolkit for radiology reports", "radproof"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", RADPROOF_VERSION);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path,
                 "Run manifest JSONL to append to (default: "
                 "radproof_manifest.jsonl beside the first output, else "
                 "the first input)");

  // inject
  InjectArgs inject;
  SeedFlag inject_seed;
  auto* inject_cmd =
      app.add_subcommand("inject", "Pair clean reports with corrupted twins");
  inject_cmd->add_option("--in", inject.in, "Clean reports JSONL (id, text)")
      ->required()
      ->check(CLI::ExistingFile);
  inject_cmd->add_option("--out", inject.out, "Dataset JSONL to write")
      ->required();
  inject_cmd->add_option("--type", inject.type, "Error type, or 'all'")
      ->required()
      ->check(CLI::IsMember(TypeChoices(true)));
  inject_seed.Add(inject_cmd);

  // split
  SplitArgs split;
  SeedFlag split_seed;
  std::size_t train_pairs = 0;
  auto* split_cmd =
      app.add_subcommand("split", "Pair-coherent train/test split");
  split_cmd->add_option("--in", split.in, "Dataset JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  split_cmd->add_option("--train", split.train_out, "Train JSONL to write")
      ->required();
  split_cmd->add_option("--test", split.test_out, "Test JSONL to write")
      ->required();
  auto* ratio_opt =
      split_cmd->add_option("--ratio", split.options.ratio,
                            "Fraction of pairs for training")
          ->check(CLI::Range(0.0, 1.0));
  auto* pairs_opt = split_cmd->add_option("--train-pairs", train_pairs,
                                          "Exact number of training pairs");
  ratio_opt->excludes(pairs_opt);
  split_cmd->add_flag("--stratify", split.options.stratify,
                      "Keep error-type shares equal across splits");
  split_seed.Add(split_cmd);

  // stats
  StatsArgs stats;
  std::string stats_json;
  auto* stats_cmd = app.add_subcommand("stats", "Dataset statistics");
  stats_cmd->add_option("--in", stats.in, "Dataset JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  auto* stats_json_opt =
      stats_cmd->add_option("--json", stats_json, "Also write JSON here");

  // detect
  DetectArgs detect;
  SeedFlag detect_seed;
  std::string detect_mode;
  std::string detect_train;
  auto* detect_cmd =
      app.add_subcommand("detect", "Query a backend for each report");
  detect_cmd->add_option("--in", detect.in, "Reports JSONL (id, text)")
      ->required()
      ->check(CLI::ExistingFile);
  detect_cmd->add_option("--out", detect.out,
                         "Predictions JSONL; an existing file is resumed")
      ->required();
  detect_cmd->add_option("--backend", detect.backend, "Backend config JSON")
      ->required()
      ->check(CLI::ExistingFile);
  detect_cmd->add_option("--mode", detect_mode, "Prompt mode")
      ->required()
      ->check(CLI::IsMember(ModeChoices()));
  auto* detect_train_opt =
      detect_cmd
          ->add_option("--train", detect_train,
                       "Training dataset for random exemplar modes")
          ->check(CLI::ExistingFile);
  detect_seed.Add(detect_cmd);

  // evaluate
  EvaluateArgs evaluate;
  SeedFlag evaluate_seed;
  std::string evaluate_out;
  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "Per-type and macro F1 with CIs");
  evaluate_cmd->add_option("--gold", evaluate.gold, "Labelled dataset JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--pred", evaluate.pred, "Predictions JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--bootstrap", evaluate.bootstrap,
                           "Bootstrap replicates (0 disables intervals)")
      ->capture_default_str();
  evaluate_cmd->add_option("--model", evaluate.model, "Model name in output");
  auto* evaluate_out_opt = evaluate_cmd->add_option(
      "--out", evaluate_out, "JSONL rows (model, error_type, precision, ...)");
  evaluate_seed.Add(evaluate_cmd);

  // compare
  CompareArgs compare;
  SeedFlag compare_seed;
  std::string compare_out;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Paired t-tests on shared bootstrap resamples");
  compare_cmd->add_option("--gold", compare.gold, "Labelled dataset JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  compare_cmd->add_option("--pred-a", compare.pred_a, "Predictions of model A")
      ->required()
      ->check(CLI::ExistingFile);
  compare_cmd->add_option("--pred-b", compare.pred_b, "Predictions of model B")
      ->required()
      ->check(CLI::ExistingFile);
  compare_cmd->add_option("--bootstrap", compare.bootstrap,
                          "Bootstrap replicates")
      ->capture_default_str();
  auto* compare_out_opt =
      compare_cmd->add_option("--out", compare_out, "JSON report");
  compare_seed.Add(compare_cmd);

  // vote
  VoteArgs vote;
  auto* vote_cmd = app.add_subcommand(
      "vote", "Reports where both backends name the same error type");
  vote_cmd->add_option("--a", vote.pred_a, "Predictions of backend A")
      ->required()
      ->check(CLI::ExistingFile);
  vote_cmd->add_option("--b", vote.pred_b, "Predictions of backend B")
      ->required()
      ->check(CLI::ExistingFile);
  vote_cmd->add_option("--out", vote.out, "Detections JSONL")->required();

  // sample
  SampleArgs sample;
  SeedFlag sample_seed;
  std::string sample_store;
  std::string sample_reports;
  std::vector<std::string> reviewers;
  auto* sample_cmd = app.add_subcommand(
      "sample", "Stratified sample of detections for review");
  sample_cmd->add_option("--in", sample.in, "Detections JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  sample_cmd->add_option("--out", sample.out, "Sampled detections JSONL")
      ->required();
  sample_cmd->add_option("--per-type", sample.per_type,
                         "Detections drawn per error type")
      ->capture_default_str();
  auto* store_opt = sample_cmd->add_option(
      "--store", sample_store, "Review store JSONL; queues a review batch");
  sample_cmd
      ->add_option("--reports", sample_reports,
                   "Reports JSONL holding the detected reports' text")
      ->check(CLI::ExistingFile)
      ->needs(store_opt);
  sample_cmd->add_option("--batch", sample.batch_id, "Review batch id")
      ->needs(store_opt);
  sample_cmd
      ->add_option("--reviewers", reviewers, "Two reviewer ids")
      ->expected(2)
      ->delimiter(',')
      ->needs(store_opt);
  sample_seed.Add(sample_cmd);

  // serve
  ServeArgs serve;
  std::string serve_ui;
  std::string serve_port_file;
  auto* serve_cmd =
      app.add_subcommand("serve", "Review API and static review UI");
  serve_cmd->add_option("--store", serve.store, "Review store JSONL")
      ->required();
  serve_cmd->add_option("--host", serve.host, "Bind address")
      ->capture_default_str();
  serve_cmd->add_option("--port", serve.port, "Port; 0 picks a free one")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  auto* ui_opt = serve_cmd->add_option("--ui", serve_ui, "Static UI directory")
                     ->check(CLI::ExistingDirectory);
  auto* port_file_opt = serve_cmd->add_option(
      "--port-file", serve_port_file, "Write the bound port here");

  // power
  PowerArgs power;
  int sides = 2;
  std::string method = "arcsine";
  auto* power_cmd = app.add_subcommand(
      "power", "Power of a one-sample proportion test");
  power_cmd->add_option("--n", power.spec.n, "Sample size")
      ->required()
      ->check(CLI::PositiveNumber);
  power_cmd->add_option("--p0", power.spec.p0, "Null proportion")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  power_cmd->add_option("--p1", power.spec.p1, "Alternative proportion")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  power_cmd->add_option("--alpha", power.spec.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  power_cmd->add_option("--sides", sides, "1 or 2")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  power_cmd->add_option("--method", method, "arcsine or exact")
      ->check(CLI::IsMember({"arcsine", "exact"}))
      ->capture_default_str();
  power_cmd->add_option("--digits", power.digits, "Decimal places")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (reviewers.size() == 1 || reviewers.size() > 2) {
    err << "--reviewers: expected two ids\n";
    return kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  Manifest manifest;
  manifest.subcommand = cmd->get_name();
  manifest.version = RADPROOF_VERSION;
  for (const CLI::Option* opt : cmd->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string joined;
    for (const std::string& r : opt->results()) {
      joined += (joined.empty() ? "" : ",") + r;
    }
    manifest.args[opt->get_name()] = joined;
  }
  Context ctx{out, err, manifest};

  try {
    if (cmd == inject_cmd) {
      inject.seed = inject_seed.Resolve(manifest, err);
      Inject(inject, ctx);
    } else if (cmd == split_cmd) {
      if (pairs_opt->count()) split.options.train_pairs = train_pairs;
      split.seed = split_seed.Resolve(manifest, err);
      SplitDataset(split, ctx);
    } else if (cmd == stats_cmd) {
      if (stats_json_opt->count()) stats.json_out = stats_json;
      Stats(stats, ctx);
    } else if (cmd == detect_cmd) {
      detect.mode = *prompts::ParsePromptMode(detect_mode);
      if (detect_train_opt->count()) detect.train = detect_train;
      detect.seed = detect_seed.Resolve(manifest, err);
      Detect(detect, ctx);
    } else if (cmd == evaluate_cmd) {
      if (evaluate_out_opt->count()) evaluate.out = evaluate_out;
      if (evaluate.bootstrap > 0) {
        evaluate.seed = evaluate_seed.Resolve(manifest, err);
      }
      Evaluate(evaluate, ctx);
    } else if (cmd == compare_cmd) {
      if (compare_out_opt->count()) compare.out = compare_out;
      compare.seed = compare_seed.Resolve(manifest, err);
      Compare(compare, ctx);
    } else if (cmd == vote_cmd) {
      VoteCmd(vote, ctx);
    } else if (cmd == sample_cmd) {
      if (store_opt->count()) {
        sample.store = sample_store;
        sample.reports = sample_reports;
      }
      if (reviewers.size() == 2) sample.reviewers = {reviewers[0], reviewers[1]};
      sample.seed = sample_seed.Resolve(manifest, err);
      Sample(sample, ctx);
    } else if (cmd == serve_cmd) {
      if (ui_opt->count()) serve.ui_dir = serve_ui;
      if (port_file_opt->count()) serve.port_file = serve_port_file;
      Serve(serve, ctx);
    } else if (cmd == power_cmd) {
      power.spec.sidedness =
          sides == 1 ? metrics::Sidedness::kOne : metrics::Sidedness::kTwo;
      power.method = method == "exact" ? metrics::PowerMethod::kExactBinomial
                                       : metrics::PowerMethod::kArcsine;
      PowerCmd(power, ctx);
    }
    Path where = manifest_path;
    if (where.empty()) {
      Path dir;
      if (!manifest.outputs.empty()) {
        dir = Path(manifest.outputs.front().first).parent_path();
      } else if (!manifest.inputs.empty()) {
        dir = Path(manifest.inputs.front().first).parent_path();
      }
      where = (dir.empty() ? Path(".") : dir) / "radproof_manifest.jsonl";
    }
    AppendManifest(manifest, where);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace radproof::cli
