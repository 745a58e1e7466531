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

#include "support/fixtures.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <string_view>

#include "radproof/common/labels.h"
#include "radproof/injector/injector.h"

namespace radproof::testing {

namespace {

struct Finding {
  std::string_view findings;
  std::string_view impression;
};

constexpr std::array<Finding, 18> kFindings = {{
    {"There is a small right pleural effusion, unchanged from the prior study.",
     "Small right pleural effusion, unchanged."},
    {"Mild left basilar atelectasis is again noted.",
     "Left basilar atelectasis."},
    {"A 2.5 cm nodule in the right upper lobe is stable.",
     "Stable right upper lobe nodule."},
    {"Patchy opacity at the left lung base may reflect atelectasis or "
     "consolidation.",
     "Left basilar opacity, atelectasis or consolidation."},
    {"Small pneumothorax present on the right side.",
     "Small pneumothorax noted on the right side."},
    {"The cardiomediastinal silhouette is within normal limits.",
     "No acute cardiopulmonary process."},
    {"Moderate pulmonary edema has increased since the prior radiograph.",
     "Increased pulmonary edema."},
    {"No focal consolidation is seen.", "No pneumonia."},
    {"Evidence of pleural effusion.", "Pleural effusion noted."},
    {"Healed fractures of the left posterior ribs.",
     "Old left rib fractures."},
    {"The right internal jugular catheter terminates in the superior vena "
     "cava.",
     "Right internal jugular catheter in satisfactory position."},
    {"Mild cardiomegaly is unchanged.", "Stable mild cardiomegaly."},
    {"Biapical scarring, worse on the right is again noted.",
     "Biapical scarring, worse on the right."},
    {"The lungs are clear without consolidation, effusion or edema.",
     "No acute cardiopulmonary process."},
    {"Leftward tracheal deviation is decreased.",
     "Decreased leftward tracheal deviation."},
    {"Calcified granuloma in the left lower lobe measures 8 mm.",
     "Calcified left lower lobe granuloma."},
    {"No pneumothorax is identified.", "No pneumothorax."},
    {"There is no pleural effusion on the left.",
     "No left pleural effusion."},
}};

constexpr std::array<std::string_view, 3> kHeaders = {
    "Patient ID: 00%03d\nHistory: 58 M with cough\n",
    "INDICATION: ___F with shortness of breath\n\n// Please evaluate for "
    "pneumonia\n",
    "",
};

constexpr std::array<std::string_view, 4> kTechniques = {
    "AP chest and abdomen radiograph.",
    "PA and lateral views of the chest.",
    "Portable AP chest radiograph.",
    "Single AP chest dated 04/03/2010 at 07:32.",
};

constexpr std::array<std::string_view, 5> kComparisons = {
    "Radiograph from one day prior.",
    "7/24/2009.",
    "January 21, 2010.",
    "___.",
    "June 11, 2012 and 03/14/2011.",
};

std::string Format(std::string_view pattern, int value) {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern.compare(i, 4, "%03d") == 0) {
      std::string v = std::to_string(value);
      while (v.size() < 3) v.insert(v.begin(), '0');
      out += v;
      i += 3;
    } else {
      out.push_back(pattern[i]);
    }
  }
  return out;
}

std::string BuildText(int i) {
  const bool caps = i % 2 == 0;
  const bool blank = i % 3 != 1;
  const std::string sep = blank ? "\n\n" : "\n";
  std::vector<std::size_t> picks;
  for (const std::size_t p :
       {static_cast<std::size_t>(i) % kFindings.size(),
        static_cast<std::size_t>(i * 5 + 3) % kFindings.size(),
        static_cast<std::size_t>(i * 7 + 11) % kFindings.size()}) {
    if (std::find(picks.begin(), picks.end(), p) == picks.end()) {
      picks.push_back(p);
    }
  }
  std::string text = Format(kHeaders[i % 3], i);
  if (!text.empty()) text += "\n";
  text += caps ? "TECHNIQUE: " : "Technique: ";
  text += kTechniques[i % 4];
  text += sep;
  text += caps ? "COMPARISON: " : "Comparison: ";
  text += kComparisons[i % 5];
  text += sep;
  text += caps ? "FINDINGS:" : "Findings:";
  text += sep;
  for (std::size_t k = 0; k < picks.size(); ++k) {
    text += kFindings[picks[k]].findings;
    text += (k + 1 < picks.size()) ? (i % 4 == 0 ? " " : sep) : sep;
  }
  text += caps ? "IMPRESSION:" : "Impression:";
  text += sep;
  if (i % 2 == 1) {
    text += "1. ";
    text += kFindings[picks[0]].impression;
    text += "\n2. ";
    text += kFindings[picks[1]].impression;
  } else {
    text += kFindings[picks[0]].impression;
  }
  text += "\n";
  return text;
}

}  // namespace

std::vector<std::string> CleanCorpusTexts() {
  std::vector<std::string> texts;
  for (int i = 0; i < 80; ++i) texts.push_back(BuildText(i));
  texts.push_back(NegationSourceReport());
  texts.push_back(LeftRightSourceReport());
  texts.push_back(ListImpressionReport());
  return texts;
}

const std::vector<corpus::Report>& CleanCorpus() {
  static const std::vector<corpus::Report>* const kCorpus = [] {
    auto* corpus = new std::vector<corpus::Report>();
    int n = 0;
    for (const std::string& text : CleanCorpusTexts()) {
      corpus::Report report = corpus::ParseReport(text);
      const bool all = std::all_of(
          kAllErrorTypes.begin(), kAllErrorTypes.end(),
          [&](ErrorType t) { return injector::HasEligibleSite(report, t); });
      if (!all) continue;
      std::string id = std::to_string(n++);
      while (id.size() < 3) id.insert(id.begin(), '0');
      report.id = "clean-" + id;
      corpus->push_back(std::move(report));
    }
    return corpus;
  }();
  return *kCorpus;
}

std::string NegationSourceReport() {
  return "Patient ID: 00033\n\n"
         "History: 30 F with sharp left-sided chest pain, evaluate for pleural\n"
         "effusion\n\n"
         "TECHNIQUE: AP chest and abdomen radiograph.\n\n"
         "COMPARISON: Radiograph from one day prior.\n\n"
         "FINDINGS:\n\n"
         "Lines/tubes: None\n\n"
         "Mediastinum/Heart: The cardiomediastinal silhouette is\n"
         "unremarkable.\n\n"
         "Lungs/Airways/Pleura: Evidence of pleural effusion. Lung fields are\n"
         "clear.\n\n"
         "Bones/Soft Tissue: No acute osseous abnormalities.\n\n"
         "Upper abdomen: Unremarkable\n\n"
         "IMPRESSION:\n\n"
         "Pleural effusion noted.\n";
}

std::string LeftRightSourceReport() {
  return "Patient ID: 00014\n\n"
         "History: 45 M with history of pneumothorax\n\n"
         "TECHNIQUE: AP chest and abdomen radiograph.\n\n"
         "COMPARISON: Radiograph from one day prior.\n\n"
         "FINDINGS:\n\n"
         "Lines/tubes: None\n\n"
         "Mediastinum/Heart: The cardiomediastinal silhouette is\n"
         "unremarkable.\n\n"
         "Lungs/Airways/Pleura: Small pneumothorax present on the right side.\n\n"
         "Bones/Soft Tissue: No acute osseous abnormalities.\n\n"
         "Upper abdomen: Unremarkable\n\n"
         "IMPRESSION:\n\n"
         "Small pneumothorax noted on the right side.\n";
}

std::string TranscriptionErrorReport() {
  return "INDICATION: ___F with shortness of breath\n\n"
         "// Please evaluate for pneumonia, effusions, edema\n\n"
         "TECHNIQUE: PA and lateral views of the chest.\n\n"
         "COMPARISON: ___.\n\n"
         "FINDINGS:\n\n"
         "The lungs are clear without consolidation, effusion or edema.\n\n"
         "Biapical starring, worse on the right is again noted.\n\n"
         "The cardiomediastinal silhouette is within normal limits.\n\n"
         "No acute osseous abnormalities.\n\n"
         "IMPRESSION:\n\n"
         "No acute cardiopulmonary process.\n";
}

std::string ListImpressionReport() {
  return "Technique: PA and lateral views of the chest.\n"
         "Supine and upright views of the abdomen.\n\n"
         "Comparison: 7/24/2009 (chest). No prior abdominal radiographs for\n"
         "comparison.\n\n"
         "Findings:\n\n"
         "Chest: Minimal patchy opacity at the right lung base may reflect\n"
         "atelectasis or consolidation.\n\n"
         "There is no pleural effusion or pneumothorax. The cardiomediastinal\n"
         "silhouette remains enlarged.\n\n"
         "Impression:\n\n"
         "1. Enlarged cardiomediastinal silhouette.\n\n"
         "2. Minimal right basilar atelectasis or consolidation.\n\n"
         "3. Nonobstructive bowel gas pattern.\n";
}

std::string RandomReportText(Rng& rng) {
  static constexpr auto kLabels = std::to_array<std::string_view>(
      {"FINDINGS", "Findings", "findings", "IMPRESSION", "Impression",
       "TECHNIQUE", "Technique", "COMPARISON", "Comparison", "RECOMMENDATION",
       "CONCLUSION", "Indication"});
  static constexpr auto kWords = std::to_array<std::string_view>(
      {"the", "lungs", "are", "clear", "no", "left", "right", "effusion",
       "3.5", "cm", "04/03/2010", "07:32", "Dr.", "e.g.", "___", "1.",
       "unchanged", "stable", "opacity", "(chest)", "-", "/", "°"});
  static constexpr auto kSpaces =
      std::to_array<std::string_view>({" ", " ", " ", "\n", "\n\n", "  ", "\t"});

  std::string text;
  const std::size_t header_lines = rng.UniformIndex(3);
  for (std::size_t i = 0; i < header_lines; ++i) {
    text += "Patient ID: " + std::to_string(rng.UniformIndex(100000)) + "\n";
  }
  const std::size_t n_sections = 1 + rng.UniformIndex(5);
  bool has_body_section = false;
  for (std::size_t s = 0; s < n_sections; ++s) {
    std::string_view label = kLabels[rng.UniformIndex(kLabels.size())];
    if (s + 1 == n_sections && !has_body_section) {
      label = rng.UniformIndex(2) ? "FINDINGS" : "Impression";
    }
    const std::string lower = [&] {
      std::string l(label);
      for (char& c : l) c = static_cast<char>(std::tolower(c));
      return l;
    }();
    if (lower == "findings" || lower == "impression" || lower == "conclusion") {
      has_body_section = true;
    }
    if (rng.UniformIndex(4) == 0) text += " ";
    text += label;
    text += ":";
    text += rng.UniformIndex(2) ? "\n" : " ";
    const std::size_t n_words = rng.UniformIndex(30);
    for (std::size_t w = 0; w < n_words; ++w) {
      text += kWords[rng.UniformIndex(kWords.size())];
      text += kSpaces[rng.UniformIndex(kSpaces.size())];
    }
    text += rng.UniformIndex(3) ? ".\n" : "\n\n";
  }
  if (rng.UniformIndex(5) == 0) text.pop_back();
  return text;
}

}  // namespace radproof::testing
