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
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "radproof/common/error.h"
#include "radproof/common/labels.h"
#include "radproof/common/rng.h"
#include "radproof/common/text.h"
#include "radproof/templates/template_store.h"
#include "support/error_matchers.h"

namespace radproof {
namespace {

std::vector<std::string> TokenTexts(std::string_view s) {
  std::vector<std::string> out;
  for (const text::Token& t : text::Tokenize(s)) {
    out.emplace_back(s.substr(t.begin, t.size()));
  }
  return out;
}

TEST(RngTest, SameSeedSameStream) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(RngTest, Mt19937_64ReferenceValue) {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the
  // standard.
  Rng rng(5489u);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.NextU64();
  EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(RngTest, UniformIndexStaysInRangeAndCoversIt) {
  Rng rng(7);
  std::vector<int> hits(7);
  for (int i = 0; i < 7000; ++i) {
    const std::size_t k = rng.UniformIndex(7);
    ASSERT_LT(k, 7u);
    ++hits[k];
  }
  for (const int h : hits) EXPECT_GT(h, 800);
}

TEST(RngTest, ShuffleIsAPermutation) {
  Rng rng(3);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  rng.Shuffle(v);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
  EXPECT_FALSE(std::is_sorted(v.begin(), v.end()));
}

TEST(RngTest, DerivedSeedsDifferPerStream) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(DeriveSeed(1, s));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(DeriveSeed(1, 2), DeriveSeed(2, 1));
}

TEST(RngTest, UniformDoubleInUnitInterval) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.UniformDouble();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(LabelsTest, SerializedNamesRoundTrip) {
  EXPECT_EQ(ErrorTypeName(ErrorType::kNegation), "negation");
  EXPECT_EQ(ErrorTypeName(ErrorType::kLeftRight), "left_right");
  EXPECT_EQ(ErrorTypeName(ErrorType::kIntervalChange), "interval_change");
  EXPECT_EQ(ErrorTypeName(ErrorType::kTranscription), "transcription");
  for (const ErrorType t : kAllErrorTypes) {
    EXPECT_EQ(ParseErrorType(ErrorTypeName(t)), t);
    EXPECT_EQ(ToErrorType(ToLabel(t)), t);
  }
  for (const Label l : {Label::kNone, Label::kNegation, Label::kLeftRight,
                        Label::kIntervalChange, Label::kTranscription,
                        Label::kUnparseable}) {
    EXPECT_EQ(ParseLabelName(LabelName(l)), l);
  }
  EXPECT_EQ(LabelName(Label::kNone), "none");
  EXPECT_FALSE(ParseErrorType("none").has_value());
  EXPECT_FALSE(ParseLabelName("Negation").has_value());
  EXPECT_FALSE(ToErrorType(Label::kUnparseable).has_value());
}

TEST(ErrorTest, MessageCarriesCodeName) {
  const Error e(ErrorCode::kNoEligibleSite, "left_right");
  EXPECT_EQ(e.code(), ErrorCode::kNoEligibleSite);
  EXPECT_STREQ(e.what(), "NoEligibleSite: left_right");
}

TEST(TextTest, NumbersDatesAndTimesStayWhole) {
  EXPECT_EQ(TokenTexts("dated 04/03/2010 at 07:32."),
            (std::vector<std::string>{"dated", " ", "04/03/2010", " ", "at",
                                      " ", "07:32", "."}));
  EXPECT_EQ(TokenTexts("3.5 cm, 1,200"),
            (std::vector<std::string>{"3.5", " ", "cm", ",", " ", "1,200"}));
  EXPECT_EQ(TokenTexts("1. Left"),
            (std::vector<std::string>{"1", ".", " ", "Left"}));
}

TEST(TextTest, TokenKinds) {
  const std::string s = "No 3.5cm ___ x2";
  const auto tokens = text::Tokenize(s);
  ASSERT_EQ(tokens.size(), 9u);
  EXPECT_EQ(tokens[0].kind, text::TokenKind::kWord);
  EXPECT_EQ(tokens[2].kind, text::TokenKind::kWord);  // "3.5cm"
  EXPECT_EQ(tokens[4].kind, text::TokenKind::kPunct);  // "_"
  EXPECT_EQ(tokens[8].kind, text::TokenKind::kWord);   // "x2"
  EXPECT_EQ(text::Tokenize("2010")[0].kind, text::TokenKind::kNumber);
}

TEST(TextTest, Utf8IsNeverSplit) {
  EXPECT_EQ(TokenTexts("37°C"), (std::vector<std::string>{"37°C"}));
}

TEST(TextTest, TokensCoverInput) {
  const std::string s = "  Lungs/Airways: clear.\n\n2) 7/24/2009 (chest)  ";
  std::string rebuilt;
  for (const auto& t : TokenTexts(s)) rebuilt += t;
  EXPECT_EQ(rebuilt, s);
}

TEST(TextTest, MatchCase) {
  EXPECT_EQ(text::MatchCase("Left", "right"), "Right");
  EXPECT_EQ(text::MatchCase("LEFT", "right"), "RIGHT");
  EXPECT_EQ(text::MatchCase("left", "Right"), "right");
  EXPECT_EQ(text::MatchCase("No", "acute"), "Acute");
}

TEST(TextTest, WordCountAndTrim) {
  EXPECT_EQ(text::WordCount("  FINDINGS:\n The lungs  are clear.\n"), 5u);
  EXPECT_EQ(text::WordCount(""), 0u);
  EXPECT_EQ(text::Trim(" \n a b \t"), "a b");
}

TEST(TextTest, SplitLinesJoinsBack) {
  for (const std::string s : {"", "a", "a\n", "\n\nb\nc", "x\n\n"}) {
    const auto lines = text::SplitLines(s);
    std::string joined;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i > 0) joined += '\n';
      joined += lines[i];
    }
    EXPECT_EQ(joined, s);
  }
}

TEST(TemplateStoreTest, EmbeddedTemplatesPresent) {
  const auto& store = templates::TemplateStore::Embedded();
  for (const char* name :
       {"detect_zero_shot.v1", "detect_one_shot.v1", "detect_four_shot.v1",
        "system.v1", "generate_synthetic_pair.v1",
        "generate_mimic_corruption.v1", "definition_negation.v1",
        "definition_left_right.v1", "definition_interval_change.v1",
        "definition_transcription.v1"}) {
    EXPECT_TRUE(store.Contains(name)) << name;
  }
  EXPECT_RADPROOF_ERROR(store.Get("detect_zero_shot"),
                        ErrorCode::kTemplateNotFound);
}

TEST(TemplateStoreTest, EmbeddedMatchesFilesOnDisk) {
  const auto& store = templates::TemplateStore::Embedded();
  const std::filesystem::path dir =
      std::filesystem::path(RADPROOF_SOURCE_DIR) / "templates";
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    const std::string body((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    EXPECT_EQ(store.Get(entry.path().stem().string()), body);
  }
}

TEST(TemplateStoreTest, RenderSubstitutesOnce) {
  const std::string out = templates::Render(
      "a {{X}} b {{Y_1}} {{X}} {not} {{}}", {{"X", "{{Y_1}}"}, {"Y_1", "y"}});
  EXPECT_EQ(out, "a {{Y_1}} b y {{Y_1}} {not} {{}}");
}

TEST(TemplateStoreTest, RenderRejectsMissingValue) {
  EXPECT_RADPROOF_ERROR(templates::Render("{{MISSING}}", {}),
                        ErrorCode::kInvalidArgument);
}

TEST(TemplateStoreTest, DirectoryOverlaysEmbedded) {
  const auto dir = std::filesystem::temp_directory_path() / "radproof_tmpl";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "system.v1.txt") << "custom";
  std::ofstream(dir / "extra.v2.txt") << "extra";
  std::ofstream(dir / "ignored.md") << "no";
  const auto store = templates::TemplateStore::FromDirectory(dir);
  EXPECT_EQ(store.Get("system.v1"), "custom");
  EXPECT_EQ(store.Get("extra.v2"), "extra");
  EXPECT_FALSE(store.Contains("ignored"));
  EXPECT_TRUE(store.Contains("detect_zero_shot.v1"));
  std::filesystem::remove_all(dir);
}

TEST(TemplateStoreTest, MissingDirectoryIsAnIoError) {
  EXPECT_RADPROOF_ERROR(
      templates::TemplateStore::FromDirectory("/nonexistent/radproof"),
      ErrorCode::kIo);
}

TEST(TemplateStoreTest, DefinitionsCoverAllTypesInOrder) {
  const auto& store = templates::TemplateStore::Embedded();
  const std::string all = templates::ErrorDefinitions(store);
  std::size_t last = 0;
  for (const ErrorType t : kAllErrorTypes) {
    const std::string def = templates::ErrorDefinition(store, t);
    EXPECT_EQ(def.rfind(std::string(ErrorTypeName(t)) + ":", 0), 0u) << def;
    const std::size_t at = all.find(def);
    ASSERT_NE(at, std::string::npos);
    EXPECT_GE(at, last);
    last = at;
  }
}

}  // namespace
}  // namespace radproof
