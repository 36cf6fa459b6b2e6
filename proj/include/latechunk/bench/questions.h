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

#ifndef LATECHUNK_BENCH_QUESTIONS_H_
#define LATECHUNK_BENCH_QUESTIONS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/docgraph/document.h"
#include "latechunk/kg/linker.h"

namespace latechunk::bench {

enum class Template {
  kMethodResult,
  kIntroResult,
  kResultDiscussion,
  kMethodDiscussion,
  kCrossStudy,
};

inline constexpr Template kAllTemplates[] = {
    Template::kMethodResult, Template::kIntroResult,
    Template::kResultDiscussion, Template::kMethodDiscussion,
    Template::kCrossStudy};

std::string_view TemplateName(Template t);
std::optional<Template> ParseTemplate(std::string_view name);

// The pair of section kinds a template's answer has to draw on. The first
// entry is the section slots are extracted from.
std::vector<docgraph::SectionKind> RequiredSections(Template t);

// Template text with the slot substituted.
std::string Instantiate(Template t, std::string_view slot);

struct BenchmarkQuestion {
  std::string question_id;
  std::string doc_id;
  Template template_id = Template::kMethodResult;
  std::string text;
  std::vector<docgraph::SectionKind> required_sections;
  std::string slot_fill;
  std::string gold_doc_id;
};

// Generates up to max_per_template questions per template from one parsed
// article. Templates whose required sections are not all present are
// skipped, as are templates with no usable slot.
std::vector<BenchmarkQuestion> GenerateQuestions(
    const docgraph::Document& doc, std::span<const kg::EntityMention> mentions,
    size_t max_per_template = 1);

// Slot candidates, exposed for tests. Entity slots come from mentions in
// sections of the given kind, longest first; if there are none, the longest
// runs of capitalized words are used instead.
std::vector<std::string> EntitySlots(
    const docgraph::Document& doc, std::span<const kg::EntityMention> mentions,
    docgraph::SectionKind source);
std::optional<std::string> HypothesisSlot(const docgraph::Document& doc);
std::vector<std::string> CitationSlots(const docgraph::Document& doc);

// JSON lines, one question per line.
std::string FormatQuestionsJsonl(std::span<const BenchmarkQuestion> questions);
absl::StatusOr<std::vector<BenchmarkQuestion>> ParseQuestionsJsonl(
    std::string_view text);

}  // namespace latechunk::bench

#endif  // LATECHUNK_BENCH_QUESTIONS_H_
