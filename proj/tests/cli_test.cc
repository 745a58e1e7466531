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

#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "radproof/cli/commands.h"
#include "radproof/cli/run.h"
#include "radproof/client/prediction.h"
#include "radproof/common/io.h"
#include "radproof/dataset/jsonl.h"
#include "radproof/ensemble/review_store.h"
#include "radproof/ensemble/vote.h"
#include "spdlog/spdlog.h"
#include "support/fixtures.h"

namespace radproof::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("radproof_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  // The clean fixture corpus as {"id", "text"} lines.
  std::string WriteCorpus(const std::string& name = "clean.jsonl") const {
    std::string body;
    for (const corpus::Report& r : testing::CleanCorpus()) {
      body += json{{"id", r.id}, {"text", r.raw_text}}.dump() + "\n";
    }
    io::WriteFileAtomic(P(name), body);
    return P(name);
  }

  std::vector<json> Lines(const std::string& path) const {
    std::vector<json> out;
    std::istringstream in(io::ReadFile(path));
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) out.push_back(json::parse(line));
    }
    return out;
  }

  // Predictions from `backend` equal to gold, or wrong everywhere.
  std::string WritePreds(const std::string& gold, const std::string& backend,
                         bool correct, const std::string& name) const {
    std::vector<client::Prediction> preds;
    for (const auto& r : dataset::ReadDataset(gold)) {
      client::Prediction p;
      p.report_id = r.report.id;
      p.backend_name = backend;
      if (correct) {
        p.predicted_label = r.label;
      } else {
        const auto type = ToErrorType(r.label);
        p.predicted_label =
            type ? ToLabel(kAllErrorTypes[(Index(*type) + 1) % 4])
                 : Label::kNegation;
      }
      preds.push_back(p);
    }
    client::WritePredictions(preds, P(name));
    return P(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, PowerPrintsReferenceValue) {
  const auto r = Cli({"power", "--n", "200", "--p0", "0.4", "--p1", "0.5",
                      "--alpha", "0.05", "--manifest", P("m.jsonl")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "0.813\n");
  const auto manifest = Lines(P("m.jsonl"));
  ASSERT_EQ(manifest.size(), 1u);
  EXPECT_EQ(manifest[0]["subcommand"], "power");
  EXPECT_EQ(manifest[0]["args"]["--n"], "200");
  EXPECT_TRUE(manifest[0]["seed"].is_null());
  EXPECT_FALSE(manifest[0]["version"].get<std::string>().empty());
}

TEST_F(CliTest, UsageErrorsExitTwoNamingTheFlag) {
  struct Case {
    std::vector<std::string> args;
    std::string flag;
  };
  const std::string corpus = WriteCorpus();
  const Case cases[] = {
      {{"power", "--n", "200", "--p0", "0.4"}, "--p1"},
      {{"power", "--n", "x", "--p0", "0.4", "--p1", "0.5"}, "--n"},
      {{"power", "--n", "9", "--p0", "1.4", "--p1", "0.5"}, "--p0"},
      {{"power", "--n", "9", "--p0", ".4", "--p1", ".5", "--sides", "3"},
       "--sides"},
      {{"inject", "--in", corpus, "--out", P("o"), "--type", "typo"}, "--type"},
      {{"inject", "--in", P("missing"), "--out", P("o"), "--type", "all"},
       "--in"},
      {{"split", "--in", corpus, "--train", P("a"), "--test", P("b"),
        "--ratio", "0.5", "--train-pairs", "3"},
       "--ratio"},
      {{"detect", "--in", corpus, "--out", P("o"), "--backend", corpus,
        "--mode", "two-shot"},
       "--mode"},
  };
  for (const Case& c : cases) {
    const auto r = Cli(c.args);
    EXPECT_EQ(r.code, kExitUsage) << c.flag << ": " << r.err;
    EXPECT_NE(r.err.find(c.flag), std::string::npos) << r.err;
  }
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_FALSE(fs::exists(P("o")));
}

TEST_F(CliTest, RuntimeErrorsExitOneBeforeWriting) {
  io::WriteFileAtomic(P("bad.jsonl"), "{\"id\": \"a\"}\n");
  const auto r = Cli({"inject", "--in", P("bad.jsonl"), "--out", P("o.jsonl"),
                      "--type", "negation", "--seed", "1"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("field 'text'"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(P("o.jsonl")));

  // Prediction ids that do not cover the gold set.
  const std::string corpus = WriteCorpus();
  ASSERT_EQ(Cli({"inject", "--in", corpus, "--out", P("pairs.jsonl"),
                 "--type", "all", "--seed", "3"})
                .code,
            kExitOk);
  io::WriteFileAtomic(P("few.jsonl"), "");
  const auto e = Cli({"evaluate", "--gold", P("pairs.jsonl"), "--pred",
                      P("few.jsonl"), "--seed", "1", "--out", P("rows.jsonl")});
  EXPECT_EQ(e.code, kExitFailure);
  EXPECT_NE(e.err.find("IdSetMismatch"), std::string::npos) << e.err;
  EXPECT_FALSE(fs::exists(P("rows.jsonl")));
}

TEST_F(CliTest, InjectAnnotatesEveryCorruptedRecord) {
  const std::string corpus = WriteCorpus();
  const auto r = Cli({"inject", "--in", corpus, "--type", "left_right",
                      "--seed", "7", "--out", P("pairs.jsonl")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto records = dataset::ReadDataset(P("pairs.jsonl"));
  ASSERT_EQ(records.size(), 2 * testing::CleanCorpus().size());
  for (const auto& rec : records) {
    if (rec.label == Label::kNone) {
      EXPECT_FALSE(rec.error);
      continue;
    }
    EXPECT_EQ(rec.label, Label::kLeftRight);
    ASSERT_TRUE(rec.error);
    EXPECT_EQ(rec.error->error_type, ErrorType::kLeftRight);
  }
}

TEST_F(CliTest, IdenticalManifestsGiveIdenticalOutputs) {
  const std::string corpus = WriteCorpus();
  const std::vector<std::string> args = {
      "inject", "--in", corpus, "--type", "all", "--seed", "11", "--out",
      P("pairs.jsonl")};
  ASSERT_EQ(Cli(args).code, kExitOk);
  const std::string first = io::ReadFile(P("pairs.jsonl"));
  ASSERT_EQ(Cli(args).code, kExitOk);
  EXPECT_EQ(io::ReadFile(P("pairs.jsonl")), first);
  const auto manifest = Lines(P("radproof_manifest.jsonl"));
  ASSERT_EQ(manifest.size(), 2u);
  EXPECT_EQ(manifest[0], manifest[1]);
  EXPECT_EQ(manifest[0]["seed"], 11);
  EXPECT_EQ(manifest[0]["inputs"][0]["path"], corpus);

  // Omitted seed: generated, recorded, and reproducible from the record.
  const auto gen = Cli({"inject", "--in", corpus, "--type", "all", "--out",
                        P("gen.jsonl")});
  ASSERT_EQ(gen.code, kExitOk);
  const auto rec = Lines(P("radproof_manifest.jsonl")).back();
  EXPECT_TRUE(rec["seed_generated"].get<bool>());
  const std::string seed = std::to_string(rec["seed"].get<std::uint64_t>());
  ASSERT_EQ(Cli({"inject", "--in", corpus, "--type", "all", "--seed", seed,
                 "--out", P("again.jsonl")})
                .code,
            kExitOk);
  EXPECT_EQ(io::ReadFile(P("again.jsonl")), io::ReadFile(P("gen.jsonl")));

  // Every randomized downstream stage is byte-stable too.
  for (int run = 0; run < 2; ++run) {
    ASSERT_EQ(Cli({"split", "--in", P("pairs.jsonl"), "--train",
                   P("train" + std::to_string(run)), "--test",
                   P("test" + std::to_string(run)), "--seed", "5"})
                  .code,
              kExitOk);
    WritePreds(P("test0"), "m", false, "pred.jsonl");
    ASSERT_EQ(Cli({"evaluate", "--gold", P("test0"), "--pred", P("pred.jsonl"),
                   "--seed", "2", "--out", P("eval" + std::to_string(run))})
                  .code,
              kExitOk);
  }
  EXPECT_EQ(io::ReadFile(P("train0")), io::ReadFile(P("train1")));
  EXPECT_EQ(io::ReadFile(P("eval0")), io::ReadFile(P("eval1")));
}

TEST_F(CliTest, SplitStatsAndEvaluate) {
  const std::string corpus = WriteCorpus();
  ASSERT_EQ(Cli({"inject", "--in", corpus, "--type", "all", "--seed", "1",
                 "--out", P("pairs.jsonl")})
                .code,
            kExitOk);
  const std::size_t n_pairs = testing::CleanCorpus().size();
  const auto split = Cli({"split", "--in", P("pairs.jsonl"), "--train",
                          P("train.jsonl"), "--test", P("test.jsonl"),
                          "--train-pairs", "30", "--seed", "4"});
  ASSERT_EQ(split.code, kExitOk) << split.err;
  EXPECT_EQ(dataset::ReadDataset(P("train.jsonl")).size(), 60u);
  EXPECT_EQ(dataset::ReadDataset(P("test.jsonl")).size(),
            2 * (n_pairs - 30));

  const auto stats = Cli({"stats", "--in", P("train.jsonl"), "--json",
                          P("stats.json")});
  ASSERT_EQ(stats.code, kExitOk) << stats.err;
  const json s = json::parse(io::ReadFile(P("stats.json")));
  EXPECT_EQ(s["total"], 60);
  EXPECT_EQ(s["error_free"], 30);
  EXPECT_EQ(s["train"], 60);
  EXPECT_NE(stats.out.find("error-free"), std::string::npos);

  WritePreds(P("test.jsonl"), "gpt", true, "pred.jsonl");
  const auto eval = Cli({"evaluate", "--gold", P("test.jsonl"), "--pred",
                         P("pred.jsonl"), "--bootstrap", "100", "--seed", "1",
                         "--out", P("rows.jsonl")});
  ASSERT_EQ(eval.code, kExitOk) << eval.err;
  const auto rows = Lines(P("rows.jsonl"));
  ASSERT_EQ(rows.size(), 4u);
  std::vector<std::string> keys;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    keys.push_back(it.key());
  }
  for (const char* key : {"model", "error_type", "precision", "recall", "f1",
                          "ci_low", "ci_high", "macro_f1"}) {
    EXPECT_NE(std::find(keys.begin(), keys.end(), key), keys.end()) << key;
  }
  for (const auto& row : rows) {
    EXPECT_EQ(row["model"], "gpt");
    EXPECT_EQ(row["f1"], 1.0);
    EXPECT_EQ(row["ci_low"], 1.0);
    EXPECT_EQ(row["ci_high"], 1.0);
    EXPECT_EQ(row["macro_f1"], 1.0);
  }
  EXPECT_NE(eval.out.find("macro"), std::string::npos);
}

TEST_F(CliTest, CompareStars) {
  const std::string corpus = WriteCorpus();
  ASSERT_EQ(Cli({"inject", "--in", corpus, "--type", "all", "--seed", "1",
                 "--out", P("gold.jsonl")})
                .code,
            kExitOk);
  const auto gold = P("gold.jsonl");
  ASSERT_GE(dataset::ReadDataset(gold).size(), 100u);
  const auto good = WritePreds(gold, "good", true, "good.jsonl");
  const auto bad = WritePreds(gold, "bad", false, "bad.jsonl");

  auto self = Cli({"compare", "--gold", gold, "--pred-a", good, "--pred-b",
                   good, "--seed", "3", "--out", P("self.json")});
  ASSERT_EQ(self.code, kExitOk) << self.err;
  for (const auto& row : json::parse(io::ReadFile(P("self.json")))["rows"]) {
    EXPECT_EQ(row["stars"], "ns");
    EXPECT_EQ(row["p_value"], 1.0);
  }
  auto diff = Cli({"compare", "--gold", gold, "--pred-a", good, "--pred-b",
                   bad, "--seed", "3", "--out", P("diff.json")});
  ASSERT_EQ(diff.code, kExitOk) << diff.err;
  const json report = json::parse(io::ReadFile(P("diff.json")));
  ASSERT_EQ(report["rows"].size(), 5u);
  for (const auto& row : report["rows"]) {
    EXPECT_LT(row["p_value"].get<double>(), 0.0001);
    EXPECT_EQ(row["stars"], "****");
    EXPECT_EQ(row["replicates_a"].size(), 100u);
  }
  EXPECT_NE(diff.out.find("****"), std::string::npos);
}

TEST_F(CliTest, VoteSampleAndServe) {
  const std::string corpus = WriteCorpus();
  ASSERT_EQ(Cli({"inject", "--in", corpus, "--type", "all", "--seed", "1",
                 "--out", P("pairs.jsonl")})
                .code,
            kExitOk);
  const auto a = WritePreds(P("pairs.jsonl"), "alpha", true, "a.jsonl");
  const auto b = WritePreds(P("pairs.jsonl"), "beta", true, "b.jsonl");
  ASSERT_EQ(Cli({"vote", "--a", a, "--b", b, "--out", P("det.jsonl")}).code,
            kExitOk);
  const auto detections = ensemble::ReadDetections(P("det.jsonl"));
  EXPECT_EQ(detections.size(), testing::CleanCorpus().size());

  const auto sample =
      Cli({"sample", "--in", P("det.jsonl"), "--out", P("sample.jsonl"),
           "--per-type", "5", "--seed", "9", "--store", P("review.jsonl"),
           "--reports", P("pairs.jsonl"), "--batch", "b1", "--reviewers",
           "rad1,rad2"});
  ASSERT_EQ(sample.code, kExitOk) << sample.err;
  EXPECT_EQ(ensemble::ReadDetections(P("sample.jsonl")).size(), 20u);
  {
    ensemble::ReviewStore store(P("review.jsonl"));
    const auto batch = store.Batch("b1");
    ASSERT_EQ(batch.items.size(), 20u);
    for (const auto& item : batch.items) {
      ASSERT_TRUE(item.span);
      EXPECT_LE(item.span->second, item.report_text.size());
    }
  }

  Outcome served;
  std::thread server([&] {
    served = Cli({"serve", "--store", P("review.jsonl"), "--port", "0",
                  "--port-file", P("port")});
  });
  for (int i = 0; i < 200 && !fs::exists(P("port")); ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  ASSERT_TRUE(fs::exists(P("port")));
  httplib::Client c("127.0.0.1", std::stoi(io::ReadFile(P("port"))));
  auto res = c.Get("/api/next?reviewer=rad2");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["total"], 20);
  RequestServeStop();
  server.join();
  EXPECT_EQ(served.code, kExitOk) << served.err;
  // No outputs: the manifest lands beside the store.
  EXPECT_EQ(Lines(P("radproof_manifest.jsonl")).back()["subcommand"], "serve");
}

TEST_F(CliTest, SampleNeedsStoreForBatchFlags) {
  io::WriteFileAtomic(P("det.jsonl"), "");
  const auto r = Cli({"sample", "--in", P("det.jsonl"), "--out", P("s.jsonl"),
                      "--batch", "b1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--batch"), std::string::npos) << r.err;
}

// Chat-completion stand-in answering "negation" and counting requests.
class MockBackend {
 public:
  MockBackend() {
    server_.Post("/v1/chat/completions",
                 [this](const httplib::Request&, httplib::Response& res) {
                   ++requests;
                   json j;
                   j["choices"] = json::array(
                       {{{"message",
                          {{"role", "assistant"}, {"content", "negation"}}}}});
                   res.set_content(j.dump(), "application/json");
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockBackend() {
    server_.stop();
    thread_.join();
  }
  std::string url() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/v1";
  }
  std::atomic<int> requests{0};

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

TEST_F(CliTest, DetectStreamsAndResumes) {
  MockBackend backend;
  const std::string corpus = WriteCorpus();
  io::WriteFileAtomic(
      P("backend.json"),
      json{{"name", "mock"}, {"base_url", backend.url()},
           {"model_id", "m"}, {"parallelism", 4}}
          .dump());
  const std::vector<std::string> args = {
      "detect", "--in", corpus, "--out", P("preds.jsonl"), "--backend",
      P("backend.json"), "--mode", "fs-sp", "--seed", "1"};
  const auto r = Cli(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto preds = client::ReadPredictions(P("preds.jsonl"));
  const std::size_t n = testing::CleanCorpus().size();
  ASSERT_EQ(preds.size(), n);
  EXPECT_EQ(preds[0].report_id, testing::CleanCorpus()[0].id);
  EXPECT_EQ(preds[0].predicted_label, Label::kNegation);
  EXPECT_EQ(backend.requests.load(), static_cast<int>(n));
  const auto again = Cli(args);
  ASSERT_EQ(again.code, kExitOk) << again.err;
  EXPECT_EQ(backend.requests.load(), static_cast<int>(n));

  // A random mode without a training set fails before querying.
  const auto no_train = Cli({"detect", "--in", corpus, "--out", P("x.jsonl"),
                             "--backend", P("backend.json"), "--mode",
                             "os-ran", "--seed", "1"});
  EXPECT_EQ(no_train.code, kExitFailure);
  EXPECT_NE(no_train.err.find("InsufficientExemplars"), std::string::npos)
      << no_train.err;
}

}  // namespace
}  // namespace radproof::cli

int main(int argc, char** argv) {
  spdlog::set_level(spdlog::level::off);
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
