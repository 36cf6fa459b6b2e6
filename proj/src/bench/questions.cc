// Copyright 2026 The Latechunk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latechunk/bench/questions.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "fmt/format.h"
#include "json.hpp"
#include "latechunk/chunkers/sentences.h"
#include "latechunk/util/status.h"
#include "latechunk/util/text.h"

namespace latechunk::bench {
namespace {

using docgraph::Document;
using docgraph::SectionKind;
using docgraph::TokenSpan;

std::string_view TemplateCode(Template t) {
  switch (t) {
    case Template::kMethodResult: return "mr";
    case Template::kIntroResult: return "ir";
    case Template::kResultDiscussion: return "rd";
    case Template::kMethodDiscussion: return "md";
    case Template::kCrossStudy: return "cs";
  }
  return "??";
}

// Top-level body section kind of a token, or nullopt outside the body.
std::optional<SectionKind> KindAt(const Document& doc, size_t token) {
  int top = doc.TopSectionOf(token);
  if (top < 0) return std::nullopt;
  const docgraph::Section& s = doc.sections[top];
  if (!s.in_body) return std::nullopt;
  return s.kind;
}

bool HasBodyKind(const Document& doc, SectionKind kind) {
  for (int top : doc.TopLevelSections()) {
    const docgraph::Section& s = doc.sections[top];
    if (s.in_body && s.kind == kind) return true;
  }
  return false;
}

// Source text of tokens [begin, end), spacing as in the document.
std::string SpanText(const Document& doc, TokenSpan span) {
  const docgraph::Token& first = doc.tokens[span.begin];
  const docgraph::Token& last = doc.tokens[span.end - 1];
  size_t stop = last.offset + last.text.size();
  return doc.text.substr(first.offset, stop - first.offset);
}

bool IsCapitalizedWord(std::string_view token) {
  if (token.empty() || token[0] < 'A' || token[0] > 'Z') return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-';
  });
}

std::vector<std::string> CapitalizedRuns(const Document& doc,
                                         SectionKind source) {
  std::vector<bool> sentence_start(doc.tokens.size(), false);
  for (const TokenSpan& s : chunkers::SegmentSentences(doc)) {
    if (!s.empty()) sentence_start[s.begin] = true;
  }
  std::vector<TokenSpan> runs;
  size_t i = 0;
  while (i < doc.tokens.size()) {
    if (KindAt(doc, i) != source || !IsCapitalizedWord(doc.tokens[i].text)) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < doc.tokens.size() && KindAt(doc, j) == source &&
           IsCapitalizedWord(doc.tokens[j].text) &&
           (j == i || !sentence_start[j])) {
      ++j;
    }
    // A capital at sentence start says nothing about the word itself.
    size_t begin = sentence_start[i] ? i + 1 : i;
    if (begin < j) runs.push_back({begin, j});
    i = j;
  }
  std::stable_sort(runs.begin(), runs.end(),
                   [](const TokenSpan& a, const TokenSpan& b) {
                     return a.size() > b.size();
                   });
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const TokenSpan& r : runs) {
    std::string text = SpanText(doc, r);
    if (seen.insert(AsciiLower(text)).second) out.push_back(std::move(text));
  }
  return out;
}

bool IsHedge(std::string_view token) {
  std::string w = NormalizeWord(token);
  for (std::string_view stem : {"hypothes", "propos", "aim", "investigat"}) {
    if (w.rfind(stem, 0) == 0) return true;
  }
  return false;
}

bool IsTerminal(std::string_view token) {
  return token == "." || token == "?" || token == "!";
}

}  // namespace

std::string_view TemplateName(Template t) {
  switch (t) {
    case Template::kMethodResult: return "MethodResult";
    case Template::kIntroResult: return "IntroResult";
    case Template::kResultDiscussion: return "ResultDiscussion";
    case Template::kMethodDiscussion: return "MethodDiscussion";
    case Template::kCrossStudy: return "CrossStudy";
  }
  return "Unknown";
}

std::optional<Template> ParseTemplate(std::string_view name) {
  for (Template t : kAllTemplates) {
    if (TemplateName(t) == name) return t;
  }
  return std::nullopt;
}

std::vector<SectionKind> RequiredSections(Template t) {
  switch (t) {
    case Template::kMethodResult:
      return {SectionKind::kMethods, SectionKind::kResults};
    case Template::kIntroResult:
      return {SectionKind::kIntroduction, SectionKind::kResults};
    case Template::kResultDiscussion:
      return {SectionKind::kResults, SectionKind::kDiscussion};
    case Template::kMethodDiscussion:
      return {SectionKind::kMethods, SectionKind::kDiscussion};
    case Template::kCrossStudy:
      return {SectionKind::kResults, SectionKind::kDiscussion};
  }
  return {};
}

std::string Instantiate(Template t, std::string_view slot) {
  switch (t) {
    case Template::kMethodResult:
      return fmt::format("What results were obtained using {}?", slot);
    case Template::kIntroResult:
      return fmt::format(
          "Does the data support the hypothesis that {}?", slot);
    case Template::kResultDiscussion:
      return fmt::format(
          "How do the authors interpret the finding that {}?", slot);
    case Template::kMethodDiscussion:
      return fmt::format("What limitations of {} are discussed?", slot);
    case Template::kCrossStudy:
      return fmt::format("How do the results compare to {}?", slot);
  }
  return std::string(slot);
}

std::vector<std::string> EntitySlots(
    const Document& doc, std::span<const kg::EntityMention> mentions,
    SectionKind source) {
  std::vector<const kg::EntityMention*> hits;
  for (const kg::EntityMention& m : mentions) {
    if (m.last < doc.tokens.size() && KindAt(doc, m.first) == source) {
      hits.push_back(&m);
    }
  }
  if (hits.empty()) return CapitalizedRuns(doc, source);
  std::stable_sort(hits.begin(), hits.end(),
                   [](const kg::EntityMention* a, const kg::EntityMention* b) {
                     size_t la = a->last - a->first;
                     size_t lb = b->last - b->first;
                     if (la != lb) return la > lb;
                     return a->first < b->first;
                   });
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const kg::EntityMention* m : hits) {
    if (seen.insert(m->term).second) {
      out.push_back(SpanText(doc, m->span()));
    }
  }
  return out;
}

std::optional<std::string> HypothesisSlot(const Document& doc) {
  const docgraph::Paragraph* last = nullptr;
  for (const docgraph::Paragraph& p : doc.paragraphs) {
    if (!p.span.empty() && KindAt(doc, p.span.begin) ==
                               SectionKind::kIntroduction) {
      last = &p;
    }
  }
  if (last == nullptr) return std::nullopt;
  for (const TokenSpan& s : chunkers::SegmentSentences(doc)) {
    if (!last->span.Contains(s) || s.empty()) continue;
    bool hedged = false;
    for (size_t i = s.begin; i < s.end && !hedged; ++i) {
      hedged = IsHedge(doc.tokens[i].text);
    }
    if (!hedged) continue;
    TokenSpan body = s;
    while (!body.empty() && IsTerminal(doc.tokens[body.end - 1].text)) {
      --body.end;
    }
    if (body.empty()) continue;
    return SpanText(doc, body);
  }
  return std::nullopt;
}

std::vector<std::string> CitationSlots(const Document& doc) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const docgraph::Paragraph& p : doc.paragraphs) {
    if (p.span.empty()) continue;
    std::optional<SectionKind> kind = KindAt(doc, p.span.begin);
    if (kind != SectionKind::kResults && kind != SectionKind::kDiscussion) {
      continue;
    }
    for (const std::string& id : p.citations) {
      const docgraph::Reference* ref = doc.FindReference(id);
      if (ref == nullptr || ref->first_author.empty()) continue;
      std::string cite = ref->CitationString();
      if (seen.insert(cite).second) out.push_back(std::move(cite));
    }
  }
  return out;
}

std::vector<BenchmarkQuestion> GenerateQuestions(
    const Document& doc, std::span<const kg::EntityMention> mentions,
    size_t max_per_template) {
  std::vector<BenchmarkQuestion> out;
  for (Template t : kAllTemplates) {
    std::vector<SectionKind> required = RequiredSections(t);
    bool present = std::all_of(required.begin(), required.end(),
                               [&](SectionKind k) { return HasBodyKind(doc, k); });
    if (!present) continue;
    std::vector<std::string> slots;
    switch (t) {
      case Template::kIntroResult:
        if (auto h = HypothesisSlot(doc)) slots.push_back(*h);
        break;
      case Template::kCrossStudy:
        slots = CitationSlots(doc);
        break;
      default:
        slots = EntitySlots(doc, mentions, required.front());
        break;
    }
    if (slots.size() > max_per_template) slots.resize(max_per_template);
    for (size_t i = 0; i < slots.size(); ++i) {
      BenchmarkQuestion q;
      q.question_id = fmt::format("{}:{}{}", doc.doc_id, TemplateCode(t), i);
      q.doc_id = doc.doc_id;
      q.template_id = t;
      q.text = Instantiate(t, slots[i]);
      q.required_sections = required;
      q.slot_fill = slots[i];
      q.gold_doc_id = doc.doc_id;
      out.push_back(std::move(q));
    }
  }
  return out;
}

std::string FormatQuestionsJsonl(std::span<const BenchmarkQuestion> questions) {
  std::string out;
  for (const BenchmarkQuestion& q : questions) {
    nlohmann::ordered_json j;
    j["question_id"] = q.question_id;
    j["doc_id"] = q.doc_id;
    j["template"] = TemplateName(q.template_id);
    j["question"] = q.text;
    nlohmann::ordered_json req = nlohmann::ordered_json::array();
    for (SectionKind k : q.required_sections) {
      req.push_back(docgraph::SectionKindName(k));
    }
    j["required_sections"] = std::move(req);
    j["slot_fill"] = q.slot_fill;
    j["gold_doc_id"] = q.gold_doc_id;
    out += j.dump();
    out += '\n';
  }
  return out;
}

absl::StatusOr<std::vector<BenchmarkQuestion>> ParseQuestionsJsonl(
    std::string_view text) {
  std::vector<BenchmarkQuestion> out;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      BenchmarkQuestion q;
      q.question_id = j.at("question_id").get<std::string>();
      q.doc_id = j.at("doc_id").get<std::string>();
      auto t = ParseTemplate(j.at("template").get<std::string>());
      if (!t) throw std::invalid_argument("unknown template");
      q.template_id = *t;
      q.text = j.at("question").get<std::string>();
      for (const auto& k : j.at("required_sections")) {
        auto kind = docgraph::ParseSectionKind(k.get<std::string>());
        if (!kind) throw std::invalid_argument("unknown section kind");
        q.required_sections.push_back(*kind);
      }
      q.slot_fill = j.at("slot_fill").get<std::string>();
      q.gold_doc_id = j.at("gold_doc_id").get<std::string>();
      out.push_back(std::move(q));
    } catch (const std::exception& e) {
      return MakeError(ErrorKind::kInvalidConfig,
                       fmt::format("questions line {}: {}", line_no, e.what()));
    }
  }
  return out;
}

}  // namespace latechunk::bench
