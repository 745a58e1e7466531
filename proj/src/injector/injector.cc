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

#include "radproof/injector/injector.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <string_view>

#include "radproof/common/error.h"
#include "radproof/common/text.h"
#include "radproof/corpus/sentence.h"
#include "radproof/injector/edit_region.h"
#include "radproof/injector/vocabulary.h"

namespace radproof::injector {

using corpus::Report;
using corpus::Section;
using corpus::SectionKind;
using corpus::Sentence;

namespace {

enum class Action {
  kFixed,        // replacement known when the site is collected
  kTemporal,     // pick one of TemporalFlips()
  kMeasurement,  // scale by 0.5 or 2
  kSlashDate,    // shift the day of m/d/y
  kDay,          // shift a day number following a month name
  kLexicon,      // confusion-lexicon substitution
  kTypo,         // one character-level typo
};

struct Site {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t section_index = 0;
  int tier = 0;
  Action action = Action::kFixed;
  std::string replacement;
  std::string rule_id;
};

// A token with absolute offsets into raw_text.
struct Tok {
  text::TokenKind kind;
  std::size_t begin;
  std::size_t end;
  std::string_view text;
  std::string lower;

  bool IsWord() const { return kind == text::TokenKind::kWord; }
  bool IsWordLike() const {
    return kind == text::TokenKind::kWord || kind == text::TokenKind::kNumber;
  }
  bool IsPunct(char c) const {
    return kind == text::TokenKind::kPunct && text.size() == 1 &&
           text[0] == c;
  }
  bool IsSingleSpace() const {
    return kind == text::TokenKind::kSpace && text == " ";
  }
};

std::vector<Tok> TokenizeAt(std::string_view raw, std::size_t begin,
                            std::size_t end) {
  std::vector<Tok> out;
  const std::string_view slice = raw.substr(begin, end - begin);
  for (const text::Token& t : text::Tokenize(slice)) {
    const std::string_view s = slice.substr(t.begin, t.size());
    out.push_back({t.kind, begin + t.begin, begin + t.end, s,
                   text::ToLower(s)});
  }
  return out;
}

bool IsAcronym(std::string_view word) {
  if (word.size() < 2) return false;
  return std::all_of(word.begin(), word.end(),
                     [](char c) { return !(c >= 'a' && c <= 'z'); });
}

bool IsAlphaWord(std::string_view word) {
  return !word.empty() && std::all_of(word.begin(), word.end(), [](char c) {
    return text::IsAsciiAlpha(c);
  });
}

bool IsFindingsOrImpression(const SectionKind& kind) {
  return kind.kind == SectionKind::kFindings ||
         kind.kind == SectionKind::kImpression;
}

// Words that cannot be preceded by "No" to negate a sentence.
bool BlocksLeadingNo(std::string_view lower) {
  static constexpr auto kWords = std::to_array<std::string_view>(
      {"the", "a", "an", "this", "these", "that", "those", "there", "it",
       "its", "both", "each", "since", "if", "as", "at", "in", "on", "of",
       "for", "to", "with", "and", "or", "but", "is", "are", "was", "were",
       "has", "have", "had", "per", "none", "please", "clinical", "again",
       "otherwise", "then", "also", "recommend", "correlate"});
  return std::find(kWords.begin(), kWords.end(), lower) != kWords.end();
}

bool IsCopula(std::string_view lower) {
  return lower == "is" || lower == "are" || lower == "was" || lower == "were";
}

// Content words used to decide whether a FINDINGS sentence and an
// IMPRESSION sentence talk about the same thing.
std::set<std::string> KeyTerms(const std::vector<Tok>& toks) {
  std::set<std::string> terms;
  for (const Tok& t : toks) {
    if (!t.IsWord() || t.lower.size() < 5 || !IsAlphaWord(t.lower)) continue;
    if (vocab::IsProtectedTerm(t.lower)) continue;
    std::string term = t.lower;
    if (term.size() > 5 && term.back() == 's') term.pop_back();
    terms.insert(std::move(term));
  }
  return terms;
}

struct SentenceInfo {
  const Sentence* sentence;
  std::vector<Tok> toks;
  int tier;
};

// Index into `toks` of the word that opens the clause: the first word after
// an optional list marker ("1.") or after a "Label:" prefix.
std::optional<std::size_t> ClauseStart(const std::vector<Tok>& toks) {
  std::size_t i = 0;
  auto skip_space = [&](std::size_t k) {
    while (k < toks.size() && toks[k].kind == text::TokenKind::kSpace) ++k;
    return k;
  };
  i = skip_space(i);
  if (i + 1 < toks.size() && toks[i].kind == text::TokenKind::kNumber &&
      (toks[i + 1].IsPunct('.') || toks[i + 1].IsPunct(')'))) {
    i = skip_space(i + 2);
  }
  // "Lungs/Airways/Pleura: Evidence of ..." opens after the colon.
  for (std::size_t k = i; k < toks.size() && k < i + 8; ++k) {
    if (toks[k].IsPunct(':')) {
      const std::size_t next = skip_space(k + 1);
      if (next < toks.size() && toks[next].IsWord() && next > k + 1) {
        i = next;
      }
      break;
    }
  }
  if (i < toks.size() && toks[i].IsWordLike()) return i;
  return std::nullopt;
}

// Index of the next word-like token after `k`, requiring that exactly one
// single-space token separates them.
std::optional<std::size_t> NextWordAfterSpace(const std::vector<Tok>& toks,
                                              std::size_t k) {
  if (k + 2 < toks.size() && toks[k + 1].IsSingleSpace() &&
      toks[k + 2].IsWordLike()) {
    return k + 2;
  }
  return std::nullopt;
}

class SiteCollector {
 public:
  SiteCollector(const Report& report, const ConfusionLexicon& lexicon)
      : report_(report), lexicon_(lexicon) {
    sentences_ = corpus::SegmentSentences(report);
    for (const Sentence& s : sentences_) {
      if (!IsFindingsOrImpression(s.section)) continue;
      infos_.push_back({&s, TokenizeAt(report.raw_text, s.start_offset,
                                       s.end_offset),
                        2});
    }
    AssignMirrorTiers();
  }

  std::vector<Site> Collect(ErrorType type) const {
    std::vector<Site> sites;
    switch (type) {
      case ErrorType::kNegation: CollectNegation(sites); break;
      case ErrorType::kLeftRight: CollectLeftRight(sites); break;
      case ErrorType::kIntervalChange: CollectIntervalChange(sites); break;
      case ErrorType::kTranscription: CollectTranscription(sites); break;
    }
    std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
      return std::tie(a.begin, a.end, a.rule_id) <
             std::tie(b.begin, b.end, b.rule_id);
    });
    return sites;
  }

 private:
  // Tier 0: IMPRESSION sentence sharing a finding with a FINDINGS sentence;
  // tier 1: the FINDINGS side of such a pair; tier 2: everything else.
  void AssignMirrorTiers() {
    std::vector<std::set<std::string>> terms;
    terms.reserve(infos_.size());
    for (const SentenceInfo& info : infos_) terms.push_back(KeyTerms(info.toks));
    for (std::size_t i = 0; i < infos_.size(); ++i) {
      for (std::size_t j = 0; j < infos_.size(); ++j) {
        if (infos_[i].sentence->section.kind ==
            infos_[j].sentence->section.kind) {
          continue;
        }
        const bool shared = std::any_of(
            terms[i].begin(), terms[i].end(),
            [&](const std::string& t) { return terms[j].count(t) > 0; });
        if (shared) {
          infos_[i].tier = infos_[i].sentence->section.kind ==
                                   SectionKind::kImpression
                               ? 0
                               : 1;
          break;
        }
      }
    }
  }

  Site MakeSite(const SentenceInfo& info, std::size_t begin, std::size_t end,
                Action action, std::string replacement,
                std::string rule_id) const {
    Site site;
    site.begin = begin;
    site.end = end;
    site.section_index = info.sentence->section_index;
    site.tier = info.tier;
    site.action = action;
    site.replacement = std::move(replacement);
    site.rule_id = std::move(rule_id);
    return site;
  }

  void CollectNegation(std::vector<Site>& sites) const {
    for (const SentenceInfo& info : infos_) {
      const std::vector<Tok>& toks = info.toks;
      const std::optional<std::size_t> start = ClauseStart(toks);
      bool negated = false;
      for (std::size_t k = 0; k < toks.size(); ++k) {
        const Tok& t = toks[k];
        if (!t.IsWord() || !vocab::IsNegationCue(t.lower)) continue;
        negated = true;
        if (t.lower == "without") {
          sites.push_back(MakeSite(info, t.begin, t.end, Action::kFixed,
                                   text::MatchCase(t.text, "with"),
                                   "negation.without_to_with"));
          continue;
        }
        const std::optional<std::size_t> next = NextWordAfterSpace(toks, k);
        if (!next) continue;
        const Tok& n = toks[*next];
        if (start && *start == k) {
          // "No acute process." -> "Acute process."
          const std::string recased =
              IsAcronym(n.text) ? std::string(n.text)
                                : text::MatchCase(t.text, n.lower);
          sites.push_back(MakeSite(info, t.begin, n.end, Action::kFixed,
                                   recased, "negation.delete_leading_cue"));
        } else {
          sites.push_back(MakeSite(info, t.begin, toks[k + 1].end,
                                   Action::kFixed, "",
                                   "negation.delete_cue"));
        }
      }
      if (negated || !start) continue;

      const Tok& first = toks[*start];
      // Word-like tokens from the clause start onward.
      std::vector<std::size_t> words;
      for (std::size_t k = *start; k < toks.size(); ++k) {
        if (toks[k].IsWordLike()) words.push_back(k);
      }
      if (first.lower == "there" && words.size() >= 3 &&
          IsCopula(toks[words[1]].lower) && NextWordAfterSpace(toks, words[1])) {
        const Tok& object = toks[words[2]];
        const bool article = object.lower == "a" || object.lower == "an";
        sites.push_back(MakeSite(info, object.begin, object.begin,
                                 Action::kFixed, article ? "not " : "no ",
                                 article ? "negation.insert_not"
                                         : "negation.insert_no"));
        continue;
      }
      if (first.IsWord() && !BlocksLeadingNo(first.lower) &&
          NextWordAfterSpace(toks, *start)) {
        std::string replacement = text::MatchCase(first.text, "no");
        replacement += ' ';
        replacement += IsAcronym(first.text) ? std::string(first.text)
                                             : first.lower;
        sites.push_back(MakeSite(info, first.begin, first.end, Action::kFixed,
                                 std::move(replacement),
                                 "negation.insert_leading_no"));
        continue;
      }
      for (std::size_t w = 1; w < words.size(); ++w) {
        if (!IsCopula(toks[words[w]].lower)) continue;
        if (const auto next = NextWordAfterSpace(toks, words[w])) {
          sites.push_back(MakeSite(info, toks[*next].begin, toks[*next].begin,
                                   Action::kFixed, "not ",
                                   "negation.insert_not"));
        }
        break;
      }
    }
  }

  void CollectLeftRight(std::vector<Site>& sites) const {
    for (const SentenceInfo& info : infos_) {
      for (const Tok& t : info.toks) {
        if (!t.IsWord()) continue;
        if (const auto other = vocab::LateralityCounterpart(t.lower)) {
          sites.push_back(MakeSite(info, t.begin, t.end, Action::kFixed,
                                   text::MatchCase(t.text, *other),
                                   "left_right.swap"));
        }
      }
    }
  }

  void CollectIntervalChange(std::vector<Site>& sites) const {
    for (const SentenceInfo& info : infos_) {
      const std::vector<Tok>& toks = info.toks;
      for (std::size_t k = 0; k < toks.size(); ++k) {
        const Tok& t = toks[k];
        if (t.IsWord() && vocab::IsTemporalTerm(t.lower)) {
          Site site = MakeSite(info, t.begin, t.end, Action::kTemporal, "",
                               "interval_change.flip_term");
          site.tier = 0;
          sites.push_back(std::move(site));
        }
        if (t.kind == text::TokenKind::kNumber && IsMeasurementValue(t.text)) {
          std::size_t u = k + 1;
          if (u < toks.size() && toks[u].IsSingleSpace()) ++u;
          if (u < toks.size() && toks[u].IsWord() &&
              vocab::IsMeasurementUnit(toks[u].lower)) {
            Site site = MakeSite(info, t.begin, t.end, Action::kMeasurement,
                                 "", "interval_change.scale_measurement");
            site.tier = 0;
            sites.push_back(std::move(site));
          }
        }
      }
    }
    // Dates may sit in COMPARISON as well as in the findings.
    for (std::size_t s = 0; s < report_.sections.size(); ++s) {
      const Section& section = report_.sections[s];
      if (!IsFindingsOrImpression(section.kind) &&
          section.kind.kind != SectionKind::kComparison) {
        continue;
      }
      const std::vector<Tok> toks = TokenizeAt(
          report_.raw_text, section.body_offset, section.end_offset());
      for (std::size_t k = 0; k < toks.size(); ++k) {
        const Tok& t = toks[k];
        Site site;
        site.section_index = s;
        site.tier = 0;
        site.begin = t.begin;
        site.end = t.end;
        if (t.kind == text::TokenKind::kNumber && IsSlashDate(t.text)) {
          site.action = Action::kSlashDate;
          site.rule_id = "interval_change.shift_date";
          sites.push_back(std::move(site));
        } else if (t.IsWord() && vocab::MonthNumber(t.lower) &&
                   NextWordAfterSpace(toks, k) &&
                   IsDayNumber(toks[k + 2].text)) {
          site.begin = toks[k + 2].begin;
          site.end = toks[k + 2].end;
          site.action = Action::kDay;
          site.rule_id = "interval_change.shift_date";
          sites.push_back(std::move(site));
        }
      }
    }
  }

  void CollectTranscription(std::vector<Site>& sites) const {
    for (const SentenceInfo& info : infos_) {
      for (const Tok& t : info.toks) {
        if (!t.IsWord() || !IsAlphaWord(t.text)) continue;
        if (lexicon_.Substitute(t.text)) {
          Site site = MakeSite(info, t.begin, t.end, Action::kLexicon, "",
                               "transcription.lexicon");
          site.tier = 0;
          sites.push_back(std::move(site));
        } else if (t.text.size() >= 5 && !vocab::IsProtectedTerm(t.lower) &&
                   !IsAcronym(t.text)) {
          Site site = MakeSite(info, t.begin, t.end, Action::kTypo, "",
                               "transcription.typo");
          site.tier = 0;
          sites.push_back(std::move(site));
        }
      }
    }
  }

 public:
  static bool IsMeasurementValue(std::string_view s) {
    bool seen_dot = false;
    bool nonzero = false;
    for (const char c : s) {
      if (c == '.') {
        if (seen_dot) return false;
        seen_dot = true;
      } else if (!text::IsAsciiDigit(c)) {
        return false;
      } else if (c != '0') {
        nonzero = true;
      }
    }
    return nonzero && s.front() != '.' && s.back() != '.';
  }

  static bool IsSlashDate(std::string_view s) {
    return std::count(s.begin(), s.end(), '/') == 2 &&
           std::all_of(s.begin(), s.end(), [](char c) {
             return c == '/' || text::IsAsciiDigit(c);
           });
  }

  static bool IsDayNumber(std::string_view s) {
    if (s.empty() || s.size() > 2) return false;
    if (!std::all_of(s.begin(), s.end(), text::IsAsciiDigit)) return false;
    const int d = std::stoi(std::string(s));
    return d >= 1 && d <= 31;
  }

 private:
  const Report& report_;
  const ConfusionLexicon& lexicon_;
  std::vector<Sentence> sentences_;
  std::vector<SentenceInfo> infos_;
};

std::string ShiftDay(std::string_view day, Rng& rng) {
  const int d = std::stoi(std::string(day));
  std::vector<int> options;
  for (const int delta : {-7, -1, 1, 7}) {
    const int v = d + delta;
    if (v >= 1 && v <= 28) options.push_back(v);
  }
  const int v = options[rng.UniformIndex(options.size())];
  std::string out = std::to_string(v);
  while (out.size() < day.size()) out.insert(out.begin(), '0');
  return out;
}

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string ScaleMeasurement(std::string_view number, Rng& rng) {
  const double value = std::stod(std::string(number));
  const std::size_t dot = number.find('.');
  int decimals =
      dot == std::string_view::npos ? 0 : static_cast<int>(number.size() - dot - 1);
  const double factor = rng.UniformIndex(2) == 0 ? 0.5 : 2.0;
  const double scaled = value * factor;
  if (decimals == 0 && scaled != std::floor(scaled)) decimals = 1;
  std::string out = FormatFixed(scaled, decimals);
  if (out == number) out = FormatFixed(value * (factor == 2.0 ? 0.5 : 2.0), decimals + 1);
  return out;
}

char KeyboardNeighbor(char c, Rng& rng) {
  static constexpr std::array<std::string_view, 26> kNeighbors = {
      "qwsz", "vghn", "xdfv", "serfcx", "wsdr",  "drtgvc", "ftyhbv",
      "gyujnb", "ujko", "huikmn", "jiolm", "kop", "njk", "bhjm",
      "iklp", "ol", "wa", "edft", "awedxz", "rfgy", "yhji", "cfgb",
      "qase", "zsdc", "tghu", "asx"};
  const bool upper = c >= 'A' && c <= 'Z';
  const char lower = upper ? static_cast<char>(c - 'A' + 'a') : c;
  if (lower < 'a' || lower > 'z') return c;
  const std::string_view options = kNeighbors[lower - 'a'];
  char picked = options[rng.UniformIndex(options.size())];
  if (upper) picked = static_cast<char>(picked - 'a' + 'A');
  return picked;
}

struct Typo {
  std::string word;
  std::string rule_id;
};

// One typo that keeps the first letter and yields an ordinary word.
Typo MakeTypo(std::string_view word, Rng& rng) {
  const std::size_t n = word.size();
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::string out(word);
    std::string rule;
    switch (rng.UniformIndex(3)) {
      case 0: {  // transposition of two adjacent letters
        const std::size_t i = 1 + rng.UniformIndex(n - 2);
        if (out[i] == out[i + 1]) continue;
        std::swap(out[i], out[i + 1]);
        rule = "transcription.typo_transpose";
        break;
      }
      case 1: {  // substitution with a keyboard neighbour
        const std::size_t i = 1 + rng.UniformIndex(n - 1);
        out[i] = KeyboardNeighbor(out[i], rng);
        rule = "transcription.typo_substitute";
        break;
      }
      default: {  // deletion
        const std::size_t i = 1 + rng.UniformIndex(n - 1);
        out.erase(i, 1);
        rule = "transcription.typo_delete";
        break;
      }
    }
    if (out == word || vocab::IsProtectedTerm(text::ToLower(out))) continue;
    return {std::move(out), std::move(rule)};
  }
  return {std::string(word.substr(0, n - 1)), "transcription.typo_delete"};
}

}  // namespace

Report ApplyEdit(const Report& report, std::size_t begin, std::size_t end,
                 std::string_view replacement) {
  Report out = report;
  const std::ptrdiff_t delta = static_cast<std::ptrdiff_t>(replacement.size()) -
                               static_cast<std::ptrdiff_t>(end - begin);
  bool applied = false;
  for (Section& section : out.sections) {
    if (applied) {
      section.header_offset += delta;
      section.body_offset += delta;
      continue;
    }
    if (begin >= section.body_offset && end <= section.end_offset()) {
      section.body.replace(begin - section.body_offset, end - begin,
                           replacement);
      applied = true;
    }
  }
  if (!applied) {
    throw Error(ErrorCode::kInvalidArgument,
                "edit does not lie inside a section body");
  }
  out.raw_text.replace(begin, end - begin, replacement);
  return out;
}

std::string RevertAnnotation(const std::string& corrupted_text,
                             const ErrorAnnotation& annotation) {
  std::string out = corrupted_text;
  out.replace(annotation.span_start,
              annotation.span_end - annotation.span_start,
              annotation.original_text);
  return out;
}

bool HasEligibleSite(const Report& report, ErrorType type,
                     const InjectorOptions& options) {
  const ConfusionLexicon& lexicon =
      options.lexicon ? *options.lexicon : ConfusionLexicon::Default();
  return !SiteCollector(report, lexicon).Collect(type).empty();
}

InjectionResult Inject(const Report& report, ErrorType type, Seed seed,
                       const InjectorOptions& options) {
  const ConfusionLexicon& lexicon =
      options.lexicon ? *options.lexicon : ConfusionLexicon::Default();
  const std::vector<Site> sites = SiteCollector(report, lexicon).Collect(type);
  if (sites.empty()) {
    throw Error(ErrorCode::kNoEligibleSite,
                std::string(ErrorTypeName(type)) + " in report '" + report.id +
                    "'");
  }
  int best_tier = sites.front().tier;
  for (const Site& s : sites) best_tier = std::min(best_tier, s.tier);
  std::vector<const Site*> candidates;
  for (const Site& s : sites) {
    if (s.tier == best_tier) candidates.push_back(&s);
  }

  Rng rng(DeriveSeed(seed, static_cast<std::uint64_t>(type)));
  Site site = *candidates[rng.UniformIndex(candidates.size())];
  const std::string_view original =
      std::string_view(report.raw_text).substr(site.begin, site.end - site.begin);

  switch (site.action) {
    case Action::kFixed:
      break;
    case Action::kTemporal: {
      const auto flips = vocab::TemporalFlips(text::ToLower(original));
      site.replacement = text::MatchCase(
          original, flips[rng.UniformIndex(flips.size())]);
      break;
    }
    case Action::kMeasurement:
      site.replacement = ScaleMeasurement(original, rng);
      break;
    case Action::kSlashDate: {
      const std::size_t first = original.find('/');
      const std::size_t second = original.find('/', first + 1);
      const std::string_view day = original.substr(first + 1, second - first - 1);
      site.replacement = std::string(original.substr(0, first + 1)) +
                         ShiftDay(day, rng) +
                         std::string(original.substr(second));
      break;
    }
    case Action::kDay:
      site.replacement = ShiftDay(original, rng);
      break;
    case Action::kLexicon:
      site.replacement = *lexicon.Substitute(original);
      break;
    case Action::kTypo: {
      Typo typo = MakeTypo(original, rng);
      site.replacement = std::move(typo.word);
      site.rule_id = std::move(typo.rule_id);
      break;
    }
  }

  InjectionResult result;
  result.corrupted = ApplyEdit(report, site.begin, site.end, site.replacement);

  // Report the edit with common leading/trailing tokens trimmed away, so
  // "Pleural" -> "No pleural" stays whole but "No CHF" -> "CHF" is the
  // deletion of "No ".
  const EditRegion region = MinimalTokenDiff(original, site.replacement);
  ErrorAnnotation& a = result.annotation;
  a.error_type = type;
  a.section = report.sections[site.section_index].kind;
  a.span_start = site.begin + region.after_begin;
  a.span_end = site.begin + region.after_end;
  a.original_text = std::string(
      original.substr(region.before_begin, region.before_end - region.before_begin));
  a.corrupted_text = site.replacement.substr(
      region.after_begin, region.after_end - region.after_begin);
  a.rule_id = site.rule_id;
  return result;
}

}  // namespace radproof::injector
