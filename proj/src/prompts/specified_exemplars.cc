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

#include "radproof/prompts/exemplars.h"

namespace radproof::prompts {

namespace {

constexpr std::string_view kLeftRightMass = R"(Patient ID: 00002

History: 59 M with recent cough and weight loss, suspected lung tumor

Technique: AP chest and abdomen radiograph.

Comparison: Radiograph from two days prior.

Findings:

Lines/tubes: None

Mediastinum/Heart: The cardiomediastinal silhouette is unremarkable.

Lungs/Airways/Pleura: Mass in the left upper lobe, suggestive of a lung tumor. No pleural effusion.

Bones/Soft Tissue: No acute osseous abnormalities.

Upper abdomen: Unremarkable

IMPRESSION:

Mass in the right upper lobe, likely a lung tumor.)";

constexpr std::string_view kNegationEffusion = R"(Patient ID: 00033

History: 30 F with sharp left-sided chest pain, evaluate for pleural effusion

TECHNIQUE: AP chest and abdomen radiograph.

COMPARISON: Radiograph from one day prior.

FINDINGS:

Lines/tubes: None

Mediastinum/Heart: The cardiomediastinal silhouette is unremarkable.

Lungs/Airways/Pleura: Evidence of pleural effusion. Lung fields are clear.

Bones/Soft Tissue: No acute osseous abnormalities.

Upper abdomen: Unremarkable

IMPRESSION:

No pleural effusion noted.)";

constexpr std::string_view kLeftRightPneumothorax = R"(Patient ID: 00014

History: 45 M with history of pneumothorax

TECHNIQUE: AP chest and abdomen radiograph.

COMPARISON: Radiograph from one day prior.

FINDINGS:

Lines/tubes: None

Mediastinum/Heart: The cardiomediastinal silhouette is unremarkable.

Lungs/Airways/Pleura: Small pneumothorax present on the right side.

Bones/Soft Tissue: No acute osseous abnormalities.

Upper abdomen: Unremarkable

IMPRESSION:

Small pneumothorax noted on the left side.)";

constexpr std::string_view kIntervalChangeSilhouette = R"(Patient ID: 00001

History: 60 F with chest pain and history of hypertension

Technique: AP chest and abdomen radiograph. Standard protocol

Comparison: Radiograph from two days prior.

Findings:

Lines/tubes: None

Mediastinum/Heart: The cardiomediastinal silhouette is unremarkable.

Lungs/Airways/Pleura: No focal opacities, pneumothorax or pleural effusion.

Bones/Soft Tissue: No acute osseous abnormalities.

Upper abdomen: Unremarkable

IMPRESSION:

1. Enlargement of the cardiomediastinal silhouette, consistent with cardiomegaly.)";

constexpr std::string_view kTranscriptionStarring = R"(INDICATION: ___F with shortness of breath

// Please evaluate for pneumonia, effusions, edema

TECHNIQUE: PA and lateral views of the chest.

COMPARISON: ___.

FINDINGS:

The lungs are clear without consolidation, effusion or edema.

Biapical starring, worse on the right is again noted.

The cardiomediastinal silhouette is within normal limits.

No acute osseous abnormalities.

IMPRESSION:

No acute cardiopulmonary process.)";

Exemplar Curated(std::string_view text, Label label) {
  return Exemplar{std::string(text), label, ""};
}

}  // namespace

const ExemplarSet& SpecifiedOneShot() {
  static const ExemplarSet* const kSet = new ExemplarSet{
      {Curated(kLeftRightMass, Label::kLeftRight)}};
  return *kSet;
}

const ExemplarSet& SpecifiedFourShot() {
  static const ExemplarSet* const kSet = new ExemplarSet{{
      Curated(kTranscriptionStarring, Label::kTranscription),
      Curated(kIntervalChangeSilhouette, Label::kIntervalChange),
      Curated(kLeftRightPneumothorax, Label::kLeftRight),
      Curated(kNegationEffusion, Label::kNegation),
  }};
  return *kSet;
}

}  // namespace radproof::prompts
