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

#include "radproof/cli/commands.h"

#include <atomic>
#include <cmath>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "radproof/client/batch.h"
#include "radproof/client/detector.h"
#include "radproof/client/prediction.h"
#include "radproof/common/error.h"
#include "radproof/common/io.h"
#include "radproof/common/text.h"
#include "radproof/dataset/jsonl.h"
#include "radproof/ensemble/review_server.h"
#include "radproof/ensemble/review_store.h"
#include "radproof/ensemble/sampling.h"
#include "radproof/ensemble/vote.h"
#include "radproof/metrics/bootstrap.h"
#include "radproof/metrics/significance.h"

namespace radproof::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string Fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::string Pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string Ci(const std::optional<metrics::Interval>& ci) {
  if (!ci) return "-";
  return "[" + Fixed(ci->low, 3) + ", " + Fixed(ci->high, 3) + "]";
}

Json CiBound(const std::optional<metrics::Interval>& ci, bool low) {
  if (!ci) return nullptr;
  return low ? ci->low : ci->high;
}

void WriteText(const Path& path, const std::string& body, Context& ctx) {
  io::WriteFileAtomic(path, body);
  ctx.manifest.AddOutput(path);
}

std::vector<dataset::LabeledReport> ReadGold(const Path& path, Context& ctx) {
  auto gold = dataset::ReadDataset(path);
  ctx.manifest.AddInput(path);
  return gold;
}

std::vector<client::Prediction> ReadPreds(const Path& path, Context& ctx) {
  auto preds = client::ReadPredictions(path);
  ctx.manifest.AddInput(path);
  return preds;
}

// Predicted labels in gold order. Throws Error(kIdSetMismatch) unless the
// id sets agree.
std::vector<Label> Align(const std::vector<dataset::LabeledReport>& gold,
                         const std::vector<client::Prediction>& preds,
                         const Path& pred_path) {
  std::unordered_map<std::string, Label> by_id;
  for (const auto& p : preds) {
    if (!by_id.emplace(p.report_id, p.predicted_label).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  pred_path.string() + ": repeated report id '" + p.report_id +
                      "'");
    }
  }
  if (by_id.size() != gold.size()) {
    throw Error(ErrorCode::kIdSetMismatch,
                pred_path.string() + " has " + std::to_string(by_id.size()) +
                    " predictions for " + std::to_string(gold.size()) +
                    " gold reports");
  }
  std::vector<Label> out;
  for (const auto& g : gold) {
    const auto it = by_id.find(g.report.id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kIdSetMismatch,
                  pred_path.string() + " has no prediction for '" +
                      g.report.id + "'");
    }
    out.push_back(it->second);
  }
  return out;
}

std::vector<Label> GoldLabels(const std::vector<dataset::LabeledReport>& gold) {
  std::vector<Label> out;
  for (const auto& g : gold) out.push_back(g.label);
  return out;
}

std::atomic<bool> g_stop_serving{false};

extern "C" void HandleStopSignal(int) { g_stop_serving = true; }

}  // namespace

std::vector<dataset::LabeledReport> ReadReports(const Path& path) {
  const std::string body = io::ReadFile(path);
  std::vector<dataset::LabeledReport> out;
  std::set<std::string> ids;
  std::size_t line_no = 0;
  for (std::string_view line : text::SplitLines(body)) {
    ++line_no;
    if (text::Trim(line).empty()) continue;
    const std::string where =
        path.string() + ": line " + std::to_string(line_no) + ": ";
    const Json j = Json::parse(line, nullptr, false);
    if (!j.is_object()) {
      throw Error(ErrorCode::kSchemaViolation, where + "not a JSON object");
    }
    for (const char* key : {"id", "text"}) {
      if (!j.contains(key) || !j[key].is_string()) {
        throw Error(ErrorCode::kSchemaViolation,
                    where + "field '" + key + "': expected a string");
      }
    }
    dataset::LabeledReport r;
    try {
      r.report = corpus::ParseReport(j["text"].get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::kSchemaViolation,
                  where + "field 'text': " + e.what());
    }
    r.report.id = j["id"].get<std::string>();
    if (j.contains("source") && j["source"].is_string()) {
      const auto source = corpus::ParseReportSource(j["source"].get<std::string>());
      if (!source) {
        throw Error(ErrorCode::kSchemaViolation,
                    where + "field 'source': unknown source");
      }
      r.report.source = *source;
    }
    r.pair_id = j.contains("pair_id") && j["pair_id"].is_string()
                    ? j["pair_id"].get<std::string>()
                    : r.report.id;
    if (!ids.insert(r.report.id).second) {
      throw Error(ErrorCode::kSchemaViolation,
                  where + "field 'id': repeated id '" + r.report.id + "'");
    }
    out.push_back(std::move(r));
  }
  return out;
}

void Inject(const InjectArgs& args, Context& ctx) {
  std::vector<ErrorType> order;
  const bool all = args.type == "all";
  if (!all) {
    const auto type = ParseErrorType(args.type);
    if (!type) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--type: unknown error type '" + args.type + "'");
    }
    order.push_back(*type);
  }
  const auto clean = ReadReports(args.in);
  ctx.manifest.AddInput(args.in);

  std::vector<dataset::ReportPair> pairs;
  std::array<std::size_t, 4> made{};
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    const corpus::Report& report = clean[i].report;
    std::vector<ErrorType> candidates = order;
    if (all) {
      for (std::size_t k = 0; k < 4; ++k) {
        candidates.push_back(kAllErrorTypes[(i + k) % 4]);
      }
    }
    bool done = false;
    for (const ErrorType type : candidates) {
      if (!injector::HasEligibleSite(report, type)) continue;
      pairs.push_back(dataset::MakePair(
          report.id, report, type, DeriveSeed(args.seed, Fnv1a64(report.id))));
      ++made[Index(type)];
      done = true;
      break;
    }
    if (!done) ++skipped;
  }
  if (pairs.empty()) {
    throw Error(ErrorCode::kNoEligibleSite,
                "no report in " + args.in.string() + " offers an eligible site");
  }
  dataset::WriteDataset(dataset::Flatten(pairs), args.out);
  ctx.manifest.AddOutput(args.out);
  ctx.out << "pairs: " << pairs.size();
  for (const ErrorType t : kAllErrorTypes) {
    ctx.out << "  " << ErrorTypeName(t) << ": " << made[Index(t)];
  }
  ctx.out << "\n";
  if (skipped > 0) {
    ctx.err << "skipped " << skipped << " report(s) with no eligible site\n";
  }
}

void SplitDataset(const SplitArgs& args, Context& ctx) {
  const auto records = ReadGold(args.in, ctx);
  const auto pairs = dataset::Regroup(records);
  const auto split = dataset::SplitPairs(pairs, args.options, args.seed);
  dataset::WriteDataset(split.train, args.train_out);
  ctx.manifest.AddOutput(args.train_out);
  dataset::WriteDataset(split.test, args.test_out);
  ctx.manifest.AddOutput(args.test_out);
  ctx.out << "train: " << split.train.size() << " reports ("
          << split.train.size() / 2 << " pairs)\n"
          << "test: " << split.test.size() << " reports ("
          << split.test.size() / 2 << " pairs)\n";
}

void Stats(const StatsArgs& args, Context& ctx) {
  const auto records = ReadGold(args.in, ctx);
  const dataset::DatasetStats s = dataset::ComputeStats(records);
  ctx.out << Pad("", 18) << Pad("reports", 10) << "mean words\n";
  ctx.out << Pad("error-free", 18) << Pad(std::to_string(s.error_free), 10)
          << Fixed(s.mean_words_error_free, 1) << "\n";
  for (const ErrorType t : kAllErrorTypes) {
    ctx.out << Pad(std::string(ErrorTypeName(t)), 18)
            << Pad(std::to_string(s.per_type[Index(t)]), 10)
            << Fixed(s.mean_words[Index(t)], 1) << "\n";
  }
  ctx.out << Pad("total", 18) << s.total << "\n"
          << "train " << s.train << "  test " << s.test << "  unassigned "
          << s.unassigned << "\n";
  if (args.json_out) {
    Json j;
    j["total"] = s.total;
    j["error_free"] = s.error_free;
    j["with_errors"] = s.with_errors;
    Json per_type;
    Json words;
    for (const ErrorType t : kAllErrorTypes) {
      per_type[std::string(ErrorTypeName(t))] = s.per_type[Index(t)];
      words[std::string(ErrorTypeName(t))] = s.mean_words[Index(t)];
    }
    j["per_type"] = per_type;
    j["mean_words"] = words;
    j["mean_words_error_free"] = s.mean_words_error_free;
    j["train"] = s.train;
    j["test"] = s.test;
    j["unassigned"] = s.unassigned;
    WriteText(*args.json_out, j.dump(2) + "\n", ctx);
  }
}

void Detect(const DetectArgs& args, Context& ctx) {
  const client::BackendConfig config = client::LoadBackendConfig(args.backend);
  ctx.manifest.AddInput(args.backend);
  const auto inputs = ReadReports(args.in);
  ctx.manifest.AddInput(args.in);
  std::vector<dataset::LabeledReport> training;
  if (args.train) {
    training = dataset::ReadDataset(*args.train);
    ctx.manifest.AddInput(*args.train);
  }
  const client::Detector detector(config);
  client::BatchOptions options;
  options.mode = args.mode;
  options.seed = args.seed;
  options.training_set = args.train ? &training : nullptr;
  options.checkpoint = args.out;
  const auto predictions = client::DetectBatch(detector, inputs, options);
  ctx.manifest.AddOutput(args.out);
  std::size_t failed = 0;
  std::array<std::size_t, 6> counts{};
  for (const auto& p : predictions) {
    failed += p.failed ? 1 : 0;
    ++counts[static_cast<std::size_t>(p.predicted_label)];
  }
  ctx.out << "predictions: " << predictions.size() << "  failed: " << failed
          << "\n";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    ctx.out << "  " << LabelName(static_cast<Label>(i)) << ": " << counts[i]
            << "\n";
  }
  if (failed > 0) {
    ctx.err << failed << " report(s) failed; rerun the same command to retry "
            << "them\n";
  }
}

void Evaluate(const EvaluateArgs& args, Context& ctx) {
  const auto gold = ReadGold(args.gold, ctx);
  const auto preds = ReadPreds(args.pred, ctx);
  const auto pred_labels = Align(gold, preds, args.pred);
  const auto gold_labels = GoldLabels(gold);
  const metrics::EvalSummary s =
      args.bootstrap > 0
          ? metrics::EvaluateWithIntervals(gold_labels, pred_labels,
                                           args.bootstrap, args.seed)
          : metrics::Evaluate(gold_labels, pred_labels);
  std::string model = args.model;
  if (model.empty()) model = preds.empty() ? "model" : preds[0].backend_name;

  ctx.out << "model: " << model << "  reports: " << s.n_reports;
  if (s.bootstrap_b > 0) ctx.out << "  bootstrap: " << s.bootstrap_b;
  ctx.out << "\n"
          << Pad("error type", 18) << Pad("precision", 11) << Pad("recall", 8)
          << Pad("f1", 7) << "95% CI\n";
  std::string rows;
  for (const ErrorType t : kAllErrorTypes) {
    const metrics::TypeMetrics& m = s.per_type[Index(t)];
    ctx.out << Pad(std::string(ErrorTypeName(t)), 18)
            << Pad(Fixed(m.precision, 3), 11) << Pad(Fixed(m.recall, 3), 8)
            << Pad(Fixed(m.f1, 3), 7) << Ci(m.f1_ci) << "\n";
    Json row;
    row["model"] = model;
    row["error_type"] = ErrorTypeName(t);
    row["precision"] = m.precision;
    row["recall"] = m.recall;
    row["f1"] = m.f1;
    row["ci_low"] = CiBound(m.f1_ci, true);
    row["ci_high"] = CiBound(m.f1_ci, false);
    row["macro_f1"] = s.macro_f1;
    row["macro_ci_low"] = CiBound(s.macro_f1_ci, true);
    row["macro_ci_high"] = CiBound(s.macro_f1_ci, false);
    row["tp"] = m.counts.tp;
    row["fp"] = m.counts.fp;
    row["fn"] = m.counts.fn;
    row["tn"] = m.counts.tn;
    row["n_reports"] = s.n_reports;
    row["bootstrap"] = s.bootstrap_b;
    rows += row.dump() + "\n";
  }
  ctx.out << Pad("macro", 37) << Pad(Fixed(s.macro_f1, 3), 7)
          << Ci(s.macro_f1_ci) << "\n";
  if (args.out) WriteText(*args.out, rows, ctx);
}

void Compare(const CompareArgs& args, Context& ctx) {
  if (args.bootstrap < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "--bootstrap: a paired test needs at least 2 replicates");
  }
  const auto gold = ReadGold(args.gold, ctx);
  const auto preds_a = ReadPreds(args.pred_a, ctx);
  const auto preds_b = ReadPreds(args.pred_b, ctx);
  const auto labels_a = Align(gold, preds_a, args.pred_a);
  const auto labels_b = Align(gold, preds_b, args.pred_b);
  const auto gold_labels = GoldLabels(gold);
  // Same seed, same n: both models see identical resamples.
  const auto boot_a =
      metrics::Bootstrap(gold_labels, labels_a, args.bootstrap, args.seed);
  const auto boot_b =
      metrics::Bootstrap(gold_labels, labels_b, args.bootstrap, args.seed);
  const auto point_a = metrics::Evaluate(gold_labels, labels_a);
  const auto point_b = metrics::Evaluate(gold_labels, labels_b);
  const std::string name_a = preds_a.empty() ? "A" : preds_a[0].backend_name;
  const std::string name_b = preds_b.empty() ? "B" : preds_b[0].backend_name;

  ctx.out << "A: " << name_a << "  B: " << name_b << "  reports: "
          << gold.size() << "  bootstrap: " << args.bootstrap << "\n"
          << Pad("metric", 18) << Pad("f1 A", 8) << Pad("f1 B", 8)
          << Pad("t", 10) << Pad("p", 12) << "sig\n";
  Json report;
  report["model_a"] = name_a;
  report["model_b"] = name_b;
  report["n_reports"] = gold.size();
  report["bootstrap"] = args.bootstrap;
  report["seed"] = args.seed;
  Json rows = Json::array();
  for (std::size_t col = 0; col <= metrics::kMacroColumn; ++col) {
    const std::string name =
        col == metrics::kMacroColumn
            ? "macro"
            : std::string(ErrorTypeName(kAllErrorTypes[col]));
    const double f1_a = col == metrics::kMacroColumn
                            ? point_a.macro_f1
                            : point_a.per_type[col].f1;
    const double f1_b = col == metrics::kMacroColumn
                            ? point_b.macro_f1
                            : point_b.per_type[col].f1;
    const auto xs = metrics::Column(boot_a.replicates, col);
    const auto ys = metrics::Column(boot_b.replicates, col);
    const metrics::StatTestResult t = metrics::PairedTTest(xs, ys);
    const std::string stars(metrics::SignificanceStars(t.p_value));
    char p_text[32];
    std::snprintf(p_text, sizeof(p_text), "%.3g", t.p_value);
    ctx.out << Pad(name, 18) << Pad(Fixed(f1_a, 3), 8)
            << Pad(Fixed(f1_b, 3), 8) << Pad(Fixed(t.statistic, 3), 10)
            << Pad(p_text, 12) << stars << "\n";
    Json row;
    row["metric"] = name;
    row["f1_a"] = f1_a;
    row["f1_b"] = f1_b;
    row["statistic"] = std::isfinite(t.statistic) ? Json(t.statistic)
                                                  : Json(t.statistic > 0
                                                             ? "inf"
                                                             : "-inf");
    row["df"] = t.df;
    row["p_value"] = t.p_value;
    row["stars"] = stars;
    row["method"] = t.method;
    row["degenerate"] = t.degenerate;
    row["replicates_a"] = xs;
    row["replicates_b"] = ys;
    rows.push_back(std::move(row));
  }
  report["rows"] = std::move(rows);
  if (args.out) WriteText(*args.out, report.dump(2) + "\n", ctx);
}

void VoteCmd(const VoteArgs& args, Context& ctx) {
  const auto a = ReadPreds(args.pred_a, ctx);
  const auto b = ReadPreds(args.pred_b, ctx);
  const auto detections = ensemble::Vote(a, b);
  ensemble::WriteDetections(detections, args.out);
  ctx.manifest.AddOutput(args.out);
  std::array<std::size_t, 4> per_type{};
  for (const auto& d : detections) ++per_type[Index(d.error_type)];
  ctx.out << "detections: " << detections.size() << " of " << a.size()
          << " reports\n";
  for (const ErrorType t : kAllErrorTypes) {
    ctx.out << "  " << ErrorTypeName(t) << ": " << per_type[Index(t)] << "\n";
  }
}

void Sample(const SampleArgs& args, Context& ctx) {
  const bool batch = args.store.has_value();
  if (batch && (!args.reports || args.batch_id.empty() ||
                args.reviewers[0].empty() || args.reviewers[1].empty())) {
    throw Error(ErrorCode::kInvalidArgument,
                "--store needs --reports, --batch and --reviewers");
  }
  const auto detections = ensemble::ReadDetections(args.in);
  ctx.manifest.AddInput(args.in);
  const auto result =
      ensemble::StratifiedSample(detections, args.per_type, args.seed);

  std::vector<ensemble::ReviewItem> items;
  if (batch) {
    const std::string body = io::ReadFile(*args.reports);
    const auto reports = ReadReports(*args.reports);
    ctx.manifest.AddInput(*args.reports);
    std::unordered_map<std::string, const dataset::LabeledReport*> by_id;
    for (const auto& r : reports) by_id[r.report.id] = &r;
    // Annotated spans, when the reports file is a dataset file.
    std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> spans;
    for (std::string_view line : text::SplitLines(body)) {
      const Json j = Json::parse(line, nullptr, false);
      if (!j.is_object() || !j.contains("id") || !j.contains("error") ||
          !j["error"].is_object()) {
        continue;
      }
      const Json& e = j["error"];
      if (e.contains("span_start") && e.contains("span_end") &&
          e.contains("type")) {
        spans[j["id"].get<std::string>() + "\n" + e["type"].get<std::string>()] =
            {e["span_start"].get<std::size_t>(), e["span_end"].get<std::size_t>()};
      }
    }
    for (const auto& d : result.sample) {
      const auto it = by_id.find(d.report_id);
      if (it == by_id.end()) {
        throw Error(ErrorCode::kUnknownReport,
                    args.reports->string() + " has no report '" + d.report_id +
                        "'");
      }
      ensemble::ReviewItem item;
      item.detection = d;
      item.report_text = it->second->report.raw_text;
      const auto span = spans.find(d.report_id + "\n" +
                                   std::string(ErrorTypeName(d.error_type)));
      if (span != spans.end()) item.span = span->second;
      items.push_back(std::move(item));
    }
  }

  ensemble::WriteDetections(result.sample, args.out);
  ctx.manifest.AddOutput(args.out);
  if (batch) {
    ensemble::ReviewStore store(*args.store);
    store.CreateBatch(args.batch_id, args.reviewers, std::move(items));
  }
  ctx.out << "sampled: " << result.sample.size() << "\n";
  for (const ErrorType t : kAllErrorTypes) {
    ctx.out << "  " << ErrorTypeName(t) << ": " << result.taken[Index(t)]
            << " of " << result.stratum_size[Index(t)] << "\n";
  }
  if (result.shortfall) {
    ctx.err << "warning: some strata held fewer than " << args.per_type
            << " detections and were taken whole\n";
  }
  if (batch) {
    ctx.out << "batch '" << args.batch_id << "' queued in "
            << args.store->string() << "\n";
  }
}

void RequestServeStop() { g_stop_serving = true; }

void Serve(const ServeArgs& args, Context& ctx) {
  ensemble::ReviewStore store(args.store);
  if (std::filesystem::exists(args.store)) ctx.manifest.AddInput(args.store);
  ensemble::ReviewServer server(store, args.ui_dir);
  const int port = server.Bind(args.host, args.port);
  g_stop_serving = false;
  const auto old_int = std::signal(SIGINT, HandleStopSignal);
  const auto old_term = std::signal(SIGTERM, HandleStopSignal);
  std::thread listener([&server] { server.Listen(); });
  server.WaitUntilReady();
  if (args.port_file) io::WriteFileAtomic(*args.port_file, std::to_string(port));
  ctx.out << "serving review API on http://" << args.host << ":" << port
          << "\n"
          << std::flush;
  while (!g_stop_serving) {
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
  server.Stop();
  listener.join();
  std::signal(SIGINT, old_int);
  std::signal(SIGTERM, old_term);
}

void PowerCmd(const PowerArgs& args, Context& ctx) {
  ctx.out << Fixed(metrics::Power(args.spec, args.method), args.digits)
          << "\n";
}

}  // namespace radproof::cli
