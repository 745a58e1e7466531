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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>

#include "json.hpp"
#include "radproof/common/rng.h"
#include "radproof/metrics/agreement.h"
#include "radproof/metrics/bootstrap.h"
#include "radproof/metrics/classification.h"
#include "radproof/metrics/proportion.h"
#include "radproof/metrics/significance.h"
#include "support/error_matchers.h"

namespace radproof::metrics {
namespace {

constexpr std::array<Label, 5> kDatasetLabels = {
    Label::kNone, Label::kNegation, Label::kLeftRight, Label::kIntervalChange,
    Label::kTranscription};

const nlohmann::json& Reference() {
  static const nlohmann::json* const kRef = [] {
    std::ifstream in(std::string(RADPROOF_SOURCE_DIR) +
                     "/tests/data/reference_stats.json");
    return new nlohmann::json(nlohmann::json::parse(in));
  }();
  return *kRef;
}

// Same counter stream as tests/data/gen_reference.py.
double Unit(std::uint64_t stream, std::uint64_t i) {
  return static_cast<double>(Mix64((stream << 20) + i) >> 11) * 0x1.0p-53;
}

// Random gold/pred pair; predictions are right about 60% of the time and
// sometimes unparseable.
void RandomLabels(Rng& rng, std::size_t n, std::vector<Label>& gold,
                  std::vector<Label>& pred) {
  gold.clear();
  pred.clear();
  for (std::size_t i = 0; i < n; ++i) {
    gold.push_back(kDatasetLabels[rng.UniformIndex(5)]);
    const double u = rng.UniformDouble();
    if (u < 0.6) {
      pred.push_back(gold.back());
    } else if (u < 0.65) {
      pred.push_back(Label::kUnparseable);
    } else {
      pred.push_back(kDatasetLabels[rng.UniformIndex(5)]);
    }
  }
}

// Counting oracle: for each type, walk every (gold, pred) pair and sort it
// into one of the four cells by direct comparison.
std::array<ConfusionCounts, 4> NaiveCounts(const std::vector<Label>& gold,
                                           const std::vector<Label>& pred) {
  std::array<ConfusionCounts, 4> out{};
  for (std::size_t t = 0; t < 4; ++t) {
    const Label positive = kDatasetLabels[t + 1];
    for (std::size_t i = 0; i < gold.size(); ++i) {
      const bool g = gold[i] == positive;
      const bool p = pred[i] == positive;
      if (g && p) out[t].tp++;
      if (!g && p) out[t].fp++;
      if (g && !p) out[t].fn++;
      if (!g && !p) out[t].tn++;
    }
  }
  return out;
}

double NaiveF1(const ConfusionCounts& c) {
  if (c.tp == 0) return 0;
  const double p = static_cast<double>(c.tp) / (c.tp + c.fp);
  const double r = static_cast<double>(c.tp) / (c.tp + c.fn);
  return 2 * p * r / (p + r);
}

// Gold/pred lists with the given negation counts and no other types.
void NegationTable(std::size_t tp, std::size_t fp, std::size_t fn,
                   std::size_t tn, std::vector<Label>& gold,
                   std::vector<Label>& pred) {
  auto add = [&](std::size_t k, Label g, Label p) {
    for (std::size_t i = 0; i < k; ++i) {
      gold.push_back(g);
      pred.push_back(p);
    }
  };
  add(tp, Label::kNegation, Label::kNegation);
  add(fp, Label::kNone, Label::kNegation);
  add(fn, Label::kNegation, Label::kNone);
  add(tn, Label::kNone, Label::kNone);
}

TEST(EvaluateTest, TableRowPrecisionRecallGiveF1) {
  // 55 / 63 = 0.873 precision, 55 / 80 = 0.688 recall.
  std::vector<Label> gold, pred;
  NegationTable(55, 8, 25, 112, gold, pred);
  const EvalSummary s = Evaluate(gold, pred);
  const TypeMetrics& m = s.per_type[Index(ErrorType::kNegation)];
  EXPECT_NEAR(m.precision, 0.873, 0.001);
  EXPECT_NEAR(m.recall, 0.688, 0.001);
  EXPECT_NEAR(m.f1, 0.769, 0.001);
  EXPECT_NEAR(F1(0.873, 0.688), 0.769, 0.001);
}

TEST(EvaluateTest, MacroOfTableRow) {
  EXPECT_NEAR(MacroF1({0.769, 0.772, 0.750, 0.828}), 0.780, 0.001);
}

TEST(EvaluateTest, PerfectClassifier) {
  std::vector<Label> gold(kDatasetLabels.begin(), kDatasetLabels.end());
  const EvalSummary s = Evaluate(gold, gold);
  for (const auto& m : s.per_type) {
    EXPECT_EQ(m.precision, 1.0);
    EXPECT_EQ(m.recall, 1.0);
    EXPECT_EQ(m.f1, 1.0);
  }
  EXPECT_EQ(s.macro_f1, 1.0);
  EXPECT_EQ(s.n_reports, 5u);
}

TEST(EvaluateTest, CrossTypeMistakeIsFnAndFp) {
  const auto c = CountConfusion({Label::kNegation}, {Label::kLeftRight});
  EXPECT_EQ(c[Index(ErrorType::kNegation)], (ConfusionCounts{0, 0, 1, 0}));
  EXPECT_EQ(c[Index(ErrorType::kLeftRight)], (ConfusionCounts{0, 1, 0, 0}));
  EXPECT_EQ(c[Index(ErrorType::kIntervalChange)], (ConfusionCounts{0, 0, 0, 1}));
}

TEST(EvaluateTest, UnparseableCountsAsNone) {
  const auto a = CountConfusion({Label::kNegation, Label::kNone},
                                {Label::kUnparseable, Label::kUnparseable});
  const auto b = CountConfusion({Label::kNegation, Label::kNone},
                                {Label::kNone, Label::kNone});
  EXPECT_EQ(a, b);
}

TEST(EvaluateTest, ZeroDenominators) {
  const EvalSummary s = Evaluate({Label::kNone}, {Label::kNone});
  for (const auto& m : s.per_type) {
    EXPECT_EQ(m.precision, 0.0);
    EXPECT_EQ(m.recall, 0.0);
    EXPECT_EQ(m.f1, 0.0);
  }
  EXPECT_EQ(F1(0, 0), 0.0);
}

TEST(EvaluateTest, Errors) {
  EXPECT_RADPROOF_ERROR(Evaluate({Label::kNone}, {}),
                        ErrorCode::kLengthMismatch);
  EXPECT_RADPROOF_ERROR(Evaluate({Label::kUnparseable}, {Label::kNone}),
                        ErrorCode::kUnknownLabel);
}

TEST(EvaluateTest, MatchesCountingOracle) {
  Rng rng(2024);
  std::vector<Label> gold, pred;
  for (int trial = 0; trial < 200; ++trial) {
    RandomLabels(rng, 200, gold, pred);
    const EvalSummary s = Evaluate(gold, pred);
    const auto expected = NaiveCounts(gold, pred);
    double macro = 0;
    for (std::size_t t = 0; t < 4; ++t) {
      ASSERT_EQ(s.per_type[t].counts, expected[t]);
      const auto& c = s.per_type[t].counts;
      ASSERT_EQ(c.tp + c.fp + c.fn + c.tn, 200u);
      EXPECT_DOUBLE_EQ(s.per_type[t].f1, NaiveF1(expected[t]));
      macro += NaiveF1(expected[t]);
    }
    EXPECT_DOUBLE_EQ(s.macro_f1, macro / 4);
  }
}

TEST(EvaluateTest, F1Properties) {
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double p = rng.UniformDouble();
    const double r = rng.UniformDouble();
    const double f = F1(p, r);
    EXPECT_GE(f, std::min(p, r) - 1e-12);
    EXPECT_LE(f, std::max(p, r) + 1e-12);
    EXPECT_LE(f, (p + r) / 2 + 1e-12);
    EXPECT_NEAR(F1(p, p), p, 1e-12);
  }
}

TEST(EvaluateTest, MacroInvariantUnderTypePermutation) {
  Rng rng(8);
  std::vector<Label> gold, pred;
  std::array<std::size_t, 4> perm = {0, 1, 2, 3};
  for (int trial = 0; trial < 50; ++trial) {
    RandomLabels(rng, 100, gold, pred);
    std::vector<std::size_t> p(perm.begin(), perm.end());
    rng.Shuffle(p);
    auto relabel = [&](Label l) {
      const auto t = ToErrorType(l);
      return t ? ToLabel(kAllErrorTypes[p[Index(*t)]]) : l;
    };
    std::vector<Label> g2, p2;
    for (const Label l : gold) g2.push_back(relabel(l));
    for (const Label l : pred) p2.push_back(relabel(l));
    const EvalSummary a = Evaluate(gold, pred);
    const EvalSummary b = Evaluate(g2, p2);
    EXPECT_NEAR(a.macro_f1, b.macro_f1, 1e-12);
    for (std::size_t t = 0; t < 4; ++t) {
      EXPECT_EQ(a.per_type[t].counts, b.per_type[p[t]].counts);
    }
  }
}

TEST(BootstrapTest, PerfectPredictionsHaveDegenerateIntervals) {
  std::vector<Label> gold;
  for (int i = 0; i < 40; ++i) gold.push_back(kDatasetLabels[i % 5]);
  const BootstrapResult r = Bootstrap(gold, gold, 100, 3);
  ASSERT_EQ(r.replicates.size(), 100u);
  for (const Interval& ci : r.intervals) {
    EXPECT_EQ(ci.low, 1.0);
    EXPECT_EQ(ci.high, 1.0);
  }
}

TEST(BootstrapTest, Deterministic) {
  Rng rng(1);
  std::vector<Label> gold, pred;
  RandomLabels(rng, 150, gold, pred);
  const BootstrapResult a = Bootstrap(gold, pred, 100, 77);
  const BootstrapResult b = Bootstrap(gold, pred, 100, 77);
  EXPECT_EQ(a.replicates, b.replicates);
  const BootstrapResult c = Bootstrap(gold, pred, 100, 78);
  EXPECT_NE(a.replicates, c.replicates);
}

TEST(BootstrapTest, ResampleIndicesShareAcrossModels) {
  const auto a = ResampleIndices(9, 4, 50);
  EXPECT_EQ(a, ResampleIndices(9, 4, 50));
  EXPECT_NE(a, ResampleIndices(9, 5, 50));
  for (const std::size_t i : a) EXPECT_LT(i, 50u);
}

// Sort-and-index oracle: position q * (b - 1), interpolate between the two
// neighbouring order statistics.
double OraclePercentile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const long double pos = static_cast<long double>(q) * (v.size() - 1);
  const auto below = static_cast<std::size_t>(pos);
  if (below + 1 >= v.size()) return v.back();
  const long double w = pos - below;
  return static_cast<double>((1 - w) * v[below] + w * v[below + 1]);
}

TEST(BootstrapTest, PercentilesMatchOracle) {
  Rng rng(31);
  std::vector<Label> gold, pred;
  RandomLabels(rng, 60, gold, pred);
  const BootstrapResult r = Bootstrap(gold, pred, 100, 12);
  // Rebuild every replicate with the counting oracle.
  std::array<std::vector<double>, 5> columns;
  for (std::size_t rep = 0; rep < 100; ++rep) {
    std::vector<Label> g, p;
    for (const std::size_t i : ResampleIndices(12, rep, gold.size())) {
      g.push_back(gold[i]);
      p.push_back(pred[i]);
    }
    const auto counts = NaiveCounts(g, p);
    double macro = 0;
    for (std::size_t t = 0; t < 4; ++t) {
      columns[t].push_back(NaiveF1(counts[t]));
      macro += NaiveF1(counts[t]);
    }
    columns[4].push_back(macro / 4);
  }
  for (std::size_t c = 0; c < 5; ++c) {
    EXPECT_NEAR(r.intervals[c].low, OraclePercentile(columns[c], 0.025), 1e-12);
    EXPECT_NEAR(r.intervals[c].high, OraclePercentile(columns[c], 0.975), 1e-12);
  }
  EXPECT_DOUBLE_EQ(Percentile({4, 1, 3, 2}, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(Percentile({7}, 0.975), 7.0);
}

TEST(BootstrapTest, IntervalsNestByConfidence) {
  Rng rng(4);
  std::vector<Label> gold, pred;
  for (int trial = 0; trial < 20; ++trial) {
    RandomLabels(rng, 120, gold, pred);
    const auto a = Bootstrap(gold, pred, 100, trial, 0.80).intervals;
    const auto b = Bootstrap(gold, pred, 100, trial, 0.95).intervals;
    const auto c = Bootstrap(gold, pred, 100, trial, 0.99).intervals;
    for (std::size_t k = 0; k < 5; ++k) {
      EXPECT_LE(b[k].low, a[k].low);
      EXPECT_GE(b[k].high, a[k].high);
      EXPECT_LE(c[k].low, b[k].low);
      EXPECT_GE(c[k].high, b[k].high);
    }
  }
}

TEST(BootstrapTest, PointUsuallyInsideInterval) {
  Rng rng(6);
  std::vector<Label> gold, pred;
  int inside = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    RandomLabels(rng, 200, gold, pred);
    const EvalSummary s = EvaluateWithIntervals(gold, pred, 100, trial);
    ASSERT_TRUE(s.macro_f1_ci.has_value());
    EXPECT_EQ(s.bootstrap_b, 100u);
    if (s.macro_f1_ci->low <= s.macro_f1 && s.macro_f1 <= s.macro_f1_ci->high) {
      ++inside;
    }
  }
  EXPECT_GE(inside, 95);
}

TEST(BootstrapTest, Errors) {
  EXPECT_RADPROOF_ERROR(Bootstrap({}, {}, 100, 1), ErrorCode::kInvalidArgument);
  EXPECT_RADPROOF_ERROR(Bootstrap({Label::kNone}, {Label::kNone}, 0, 1),
                        ErrorCode::kInvalidArgument);
  EXPECT_RADPROOF_ERROR(Bootstrap({Label::kNone}, {}, 10, 1),
                        ErrorCode::kLengthMismatch);
}

TEST(PairedTTestTest, IdenticalSamples) {
  const StatTestResult r = PairedTTest({1, 2, 3}, {1, 2, 3});
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_TRUE(r.degenerate);
}

TEST(PairedTTestTest, ConstantShiftIsDegenerate) {
  const StatTestResult r = PairedTTest({2, 3, 4}, {1, 2, 3});
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.p_value, 0.0);
  EXPECT_TRUE(std::isinf(r.statistic));
  EXPECT_GT(r.statistic, 0);
}

TEST(PairedTTestTest, HandComputed) {
  // d = 1..5: mean 3, sample sd sqrt(2.5), t = 3 / sqrt(0.5).
  const StatTestResult r = PairedTTest({1, 2, 3, 4, 5}, {0, 0, 0, 0, 0});
  EXPECT_NEAR(r.statistic, 3 / std::sqrt(2.5 / 5), 1e-12);
  EXPECT_NEAR(r.statistic, 4.243, 0.001);
  EXPECT_EQ(r.df, 4u);
  EXPECT_FALSE(r.degenerate);
  EXPECT_EQ(r.method, "paired_t");
}

TEST(PairedTTestTest, MatchesReference) {
  const auto& cases = Reference().at("ttest");
  ASSERT_EQ(cases.size(), 1000u);
  for (const auto& c : cases) {
    const std::uint64_t k = c.at("case");
    const std::size_t n = 2 + Mix64(k) % 29;
    std::vector<double> xs, ys;
    const double shift = Unit(3000000 + k, 0) - 0.5;
    for (std::size_t i = 0; i < n; ++i) {
      xs.push_back(10 * Unit(2 * k, i));
      ys.push_back(10 * Unit(2 * k + 1, i) * 0.2 + xs[i] * 0.8 + shift);
    }
    const StatTestResult r = PairedTTest(xs, ys);
    EXPECT_NEAR(r.statistic, c.at("t").get<double>(),
                1e-9 * std::max(1.0, std::fabs(r.statistic)));
    EXPECT_NEAR(r.p_value, c.at("p").get<double>(), 1e-9) << k;
    EXPECT_GE(r.p_value, 0.0);
    EXPECT_LE(r.p_value, 1.0);
  }
}

TEST(PairedTTestTest, Errors) {
  EXPECT_RADPROOF_ERROR(PairedTTest({1, 2}, {1}), ErrorCode::kLengthMismatch);
  EXPECT_RADPROOF_ERROR(PairedTTest({1}, {1}), ErrorCode::kInvalidArgument);
}

TEST(SignificanceStarsTest, Thresholds) {
  EXPECT_EQ(SignificanceStars(0.0), "****");
  EXPECT_EQ(SignificanceStars(0.00009), "****");
  EXPECT_EQ(SignificanceStars(0.0001), "***");
  EXPECT_EQ(SignificanceStars(0.0005), "***");
  EXPECT_EQ(SignificanceStars(0.001), "**");
  EXPECT_EQ(SignificanceStars(0.0099), "**");
  EXPECT_EQ(SignificanceStars(0.01), "*");
  EXPECT_EQ(SignificanceStars(0.049), "*");
  EXPECT_EQ(SignificanceStars(0.05), "ns");
}

std::vector<std::string> Repeat(std::initializer_list<std::pair<const char*, int>> runs) {
  std::vector<std::string> out;
  for (const auto& [value, count] : runs) {
    for (int i = 0; i < count; ++i) out.emplace_back(value);
  }
  return out;
}

TEST(CohenKappaTest, PerfectAgreement) {
  const std::vector<std::string> a = {"x", "y", "z", "x"};
  EXPECT_DOUBLE_EQ(CohenKappa(a, a).kappa, 1.0);
  EXPECT_FALSE(CohenKappa(a, a).degenerate);
}

TEST(CohenKappaTest, HandComputedBinaryTable) {
  // yes/yes 40, yes/no 10, no/yes 10, no/no 40.
  const auto a = Repeat({{"yes", 40}, {"yes", 10}, {"no", 10}, {"no", 40}});
  const auto b = Repeat({{"yes", 40}, {"no", 10}, {"yes", 10}, {"no", 40}});
  const KappaResult k = CohenKappa(a, b);
  EXPECT_NEAR(k.observed, 0.8, 1e-12);
  EXPECT_NEAR(k.expected, 0.5, 1e-12);
  EXPECT_NEAR(k.kappa, 0.6, 1e-12);
}

TEST(CohenKappaTest, ConstantRatersAreDegenerate) {
  const KappaResult k = CohenKappa({"a", "a"}, {"a", "a"});
  EXPECT_TRUE(k.degenerate);
  EXPECT_EQ(k.kappa, 1.0);
}

TEST(CohenKappaTest, MatchesContingencyOracleAndIsSymmetric) {
  Rng rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t cats = 2 + rng.UniformIndex(4);
    const std::size_t n = 1 + rng.UniformIndex(80);
    std::vector<std::string> a, b;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(std::string(1, static_cast<char>('a' + rng.UniformIndex(cats))));
      b.push_back(rng.UniformDouble() < 0.5
                      ? a.back()
                      : std::string(1, static_cast<char>('a' + rng.UniformIndex(cats))));
    }
    // Contingency table over the fixed category range.
    std::vector<std::vector<double>> table(cats, std::vector<double>(cats));
    for (std::size_t i = 0; i < n; ++i) table[a[i][0] - 'a'][b[i][0] - 'a'] += 1;
    double po = 0, pe = 0;
    for (std::size_t i = 0; i < cats; ++i) {
      po += table[i][i] / n;
      double row = 0, col = 0;
      for (std::size_t j = 0; j < cats; ++j) {
        row += table[i][j];
        col += table[j][i];
      }
      pe += (row / n) * (col / n);
    }
    const KappaResult k = CohenKappa(a, b);
    const KappaResult swapped = CohenKappa(b, a);
    if (pe == 1) {
      EXPECT_TRUE(k.degenerate);
      continue;
    }
    EXPECT_NEAR(k.kappa, (po - pe) / (1 - pe), 1e-12);
    EXPECT_NEAR(k.kappa, swapped.kappa, 1e-12);
  }
}

TEST(CohenKappaTest, IndependentRatersNearZero) {
  Rng rng(12);
  std::vector<std::string> a, b;
  for (int i = 0; i < 10000; ++i) {
    a.push_back(std::to_string(rng.UniformIndex(5)));
    b.push_back(std::to_string(rng.UniformIndex(5)));
  }
  EXPECT_NEAR(CohenKappa(a, b).kappa, 0.0, 0.05);
}

TEST(CohenKappaTest, Errors) {
  EXPECT_RADPROOF_ERROR(CohenKappa({"a"}, {}), ErrorCode::kLengthMismatch);
  EXPECT_RADPROOF_ERROR(CohenKappa({}, {}), ErrorCode::kInvalidArgument);
}

TEST(ProportionCiTest, ReviewAccuracyIntervals) {
  const Interval unanimous = ProportionCiExact(99, 200, 0.95);
  EXPECT_NEAR(unanimous.low, 0.424, 0.005);
  EXPECT_NEAR(unanimous.high, 0.566, 0.005);
  const Interval any = ProportionCiExact(163, 200, 0.95);
  EXPECT_NEAR(any.low, 0.753, 0.005);
  EXPECT_NEAR(any.high, 0.866, 0.005);
  EXPECT_NEAR(any.high, 0.865, 0.005);
}

TEST(ProportionCiTest, Boundaries) {
  EXPECT_EQ(ProportionCiExact(0, 10, 0.95).low, 0.0);
  EXPECT_EQ(ProportionCiExact(10, 10, 0.95).high, 1.0);
  EXPECT_RADPROOF_ERROR(ProportionCiExact(11, 10, 0.95),
                        ErrorCode::kInvalidArgument);
  EXPECT_RADPROOF_ERROR(ProportionCiExact(0, 0, 0.95),
                        ErrorCode::kInvalidArgument);
  EXPECT_RADPROOF_ERROR(ProportionCiExact(1, 2, 1.0),
                        ErrorCode::kInvalidArgument);
}

TEST(ProportionCiTest, MatchesReference) {
  for (const auto& c : Reference().at("clopper_pearson")) {
    const Interval ci = ProportionCiExact(c.at("k"), c.at("n"), c.at("confidence"));
    EXPECT_NEAR(ci.low, c.at("low").get<double>(), 1e-9) << c.dump();
    EXPECT_NEAR(ci.high, c.at("high").get<double>(), 1e-9) << c.dump();
  }
}

TEST(ProportionCiTest, ReflectsUnderComplement) {
  for (std::size_t n = 1; n <= 60; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const Interval a = ProportionCiExact(k, n, 0.95);
      const Interval b = ProportionCiExact(n - k, n, 0.95);
      EXPECT_NEAR(a.low, 1 - b.high, 1e-9);
      EXPECT_NEAR(a.high, 1 - b.low, 1e-9);
      EXPECT_LE(a.low, static_cast<double>(k) / n);
      EXPECT_GE(a.high, static_cast<double>(k) / n);
    }
  }
}

TEST(PowerTest, ReviewSampleSize) {
  const PowerSpec spec{200, 0.4, 0.5, 0.05, Sidedness::kTwo};
  EXPECT_NEAR(Power(spec), 0.813, 0.002);
}

TEST(PowerTest, NullEffectLimit) {
  const double floor = 0.025;  // Phi(-z_{0.975})
  EXPECT_NEAR(Power({200, 0.4, 0.4 + 1e-9, 0.05, Sidedness::kTwo}), floor, 1e-6);
  EXPECT_NEAR(Power({200, 0.4, 0.4 + 1e-9, 0.05, Sidedness::kOne}), 0.05, 1e-6);
}

TEST(PowerTest, Monotone) {
  double last = 0;
  for (std::size_t n = 10; n <= 1000; n += 10) {
    const double p = Power({n, 0.4, 0.5, 0.05, Sidedness::kTwo});
    EXPECT_GT(p, last);
    last = p;
    if (p > 1 - 1e-9) break;
  }
  last = 0;
  for (double p1 = 0.41; p1 < 0.9; p1 += 0.01) {
    const double p = Power({200, 0.4, p1, 0.05, Sidedness::kTwo});
    EXPECT_GT(p, last);
    last = p;
    if (p > 1 - 1e-9) break;
  }
}

TEST(PowerTest, MatchesReference) {
  for (const auto& c : Reference().at("power")) {
    const PowerSpec spec{c.at("n"), c.at("p0"), c.at("p1"), c.at("alpha"),
                         c.at("two_sided").get<bool>() ? Sidedness::kTwo
                                                       : Sidedness::kOne};
    EXPECT_NEAR(Power(spec, PowerMethod::kArcsine),
                c.at("arcsine").get<double>(), 1e-9)
        << c.dump();
    EXPECT_NEAR(Power(spec, PowerMethod::kExactBinomial),
                c.at("exact").get<double>(), 1e-9)
        << c.dump();
  }
}

// The exact test's size sits below alpha by a sawtooth amount that shrinks
// with n, so the two methods only agree closely for large samples.
TEST(PowerTest, ArcsineTracksExactForLargeSamples) {
  Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    PowerSpec spec;
    spec.n = 2000 + rng.UniformIndex(3000);
    spec.p0 = 0.2 + 0.6 * rng.UniformDouble();
    spec.p1 = spec.p0 + (rng.UniformDouble() < 0.5 ? -1 : 1) *
                            (0.005 + 0.045 * rng.UniformDouble());
    spec.alpha = 0.05;
    spec.sidedness = i % 2 ? Sidedness::kOne : Sidedness::kTwo;
    EXPECT_NEAR(Power(spec, PowerMethod::kArcsine),
                Power(spec, PowerMethod::kExactBinomial), 0.05)
        << spec.n << " " << spec.p0 << " " << spec.p1;
  }
}

TEST(PowerTest, MethodsDivergeForSmallSkewedSamples) {
  const PowerSpec spec{135, 0.76754692478191378, 0.81814739233600942, 0.05,
                       Sidedness::kOne};
  EXPECT_NEAR(Power(spec, PowerMethod::kArcsine), 0.42399, 1e-5);
  EXPECT_NEAR(Power(spec, PowerMethod::kExactBinomial), 0.33061, 1e-5);
}

TEST(PowerTest, RejectsBadSpecs) {
  for (const PowerSpec& s : {PowerSpec{0, 0.4, 0.5, 0.05, Sidedness::kTwo},
                             PowerSpec{10, 0.4, 0.4, 0.05, Sidedness::kTwo},
                             PowerSpec{10, 0.0, 0.5, 0.05, Sidedness::kTwo},
                             PowerSpec{10, 0.4, 1.0, 0.05, Sidedness::kTwo},
                             PowerSpec{10, 0.4, 0.5, 1.0, Sidedness::kTwo}}) {
    EXPECT_RADPROOF_ERROR(Power(s), ErrorCode::kInvalidArgument);
  }
}

}  // namespace
}  // namespace radproof::metrics
