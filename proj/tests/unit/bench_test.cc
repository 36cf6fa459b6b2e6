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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "jats_builder.h"
#include "latechunk/bench/questions.h"
#include "latechunk/docgraph/jats.h"
#include "latechunk/kg/concept_graph.h"
#include "latechunk/kg/linker.h"

namespace latechunk::bench {
namespace {

using docgraph::Document;
using docgraph::SectionKind;
using ::testing::ElementsAre;
using testing::BuildJats;
using testing::SectionSpec;
using testing::Words;

Document Parse(const std::string& xml) {
  auto doc = docgraph::ParseJats(xml);
  EXPECT_TRUE(doc.ok()) << doc.status();
  return *doc;
}

const kg::Dictionary& Dict() {
  static const kg::Dictionary dict{{"flow cytometry", "C100"},
                                   {"western blot", "C101"},
                                   {"aspirin", "C102"},
                                   {"multiple sclerosis", "C103"}};
  return dict;
}

std::vector<BenchmarkQuestion> Generate(const Document& doc, size_t cap) {
  kg::EntityLinker linker(Dict());
  std::vector<kg::EntityMention> mentions = linker.Link(doc);
  return GenerateQuestions(doc, mentions, cap);
}

size_t CountTemplate(const std::vector<BenchmarkQuestion>& qs, Template t) {
  return std::count_if(qs.begin(), qs.end(), [&](const BenchmarkQuestion& q) {
    return q.template_id == t;
  });
}

TEST(TemplatesTest, WordingAndSections) {
  EXPECT_EQ(Instantiate(Template::kMethodResult, "X"),
            "What results were obtained using X?");
  EXPECT_EQ(Instantiate(Template::kIntroResult, "X"),
            "Does the data support the hypothesis that X?");
  EXPECT_EQ(Instantiate(Template::kResultDiscussion, "X"),
            "How do the authors interpret the finding that X?");
  EXPECT_EQ(Instantiate(Template::kMethodDiscussion, "X"),
            "What limitations of X are discussed?");
  EXPECT_EQ(Instantiate(Template::kCrossStudy, "X"),
            "How do the results compare to X?");
  EXPECT_THAT(RequiredSections(Template::kIntroResult),
              ElementsAre(SectionKind::kIntroduction, SectionKind::kResults));
  EXPECT_THAT(RequiredSections(Template::kCrossStudy),
              ElementsAre(SectionKind::kResults, SectionKind::kDiscussion));
  for (Template t : kAllTemplates) {
    EXPECT_EQ(ParseTemplate(TemplateName(t)), t);
  }
  EXPECT_FALSE(ParseTemplate("Nope").has_value());
}

TEST(GenerateTest, FlowCytometryMethodResult) {
  Document doc = Parse(BuildJats(
      "PMC1", {{"Introduction", {Words(20, "intro")}},
               {"Methods", {"Cells were analysed by flow cytometry daily."}},
               {"Results", {Words(20, "res")}},
               {"Discussion", {Words(20, "disc")}}}));
  std::vector<BenchmarkQuestion> qs = Generate(doc, 1);
  ASSERT_GE(qs.size(), 1u);
  EXPECT_EQ(qs[0].template_id, Template::kMethodResult);
  EXPECT_EQ(qs[0].text, "What results were obtained using flow cytometry?");
  EXPECT_THAT(qs[0].required_sections,
              ElementsAre(SectionKind::kMethods, SectionKind::kResults));
  EXPECT_EQ(qs[0].slot_fill, "flow cytometry");
  EXPECT_EQ(qs[0].gold_doc_id, "PMC1");
  EXPECT_EQ(qs[0].doc_id, "PMC1");
  // The same mention also feeds the limitations template.
  EXPECT_EQ(CountTemplate(qs, Template::kMethodDiscussion), 1u);
}

TEST(GenerateTest, MissingDiscussionSkipsDiscussionTemplates) {
  Document doc = Parse(BuildJats(
      "PMC2",
      {{"Introduction", {"We hypothesize that aspirin helps patients."}},
       {"Methods", {"Samples went through flow cytometry."}},
       {"Results", {"Aspirin Response Cohort improved. See Smith data."}}}));
  std::vector<BenchmarkQuestion> qs = Generate(doc, 3);
  EXPECT_EQ(CountTemplate(qs, Template::kResultDiscussion), 0u);
  EXPECT_EQ(CountTemplate(qs, Template::kMethodDiscussion), 0u);
  EXPECT_EQ(CountTemplate(qs, Template::kCrossStudy), 0u);
  EXPECT_EQ(CountTemplate(qs, Template::kMethodResult), 1u);
  EXPECT_EQ(CountTemplate(qs, Template::kIntroResult), 1u);
}

// Hand trace: Methods links "flow cytometry" and "western blot" (both two
// words, so reading order decides); the final Introduction paragraph has
// one hedged sentence; no Discussion, so only the two Results templates
// that draw on Methods and Introduction can fire.
TEST(GenerateTest, HandTracedFixture) {
  Document doc = Parse(BuildJats(
      "PMC3",
      {{"Introduction",
        {"Earlier work aimed elsewhere entirely.",
         "Background is long. We hypothesized that aspirin lowers relapse "
         "rates. Others aim to test this too."}},
       {"Methods",
        {"We used western blot on lysates. Then flow cytometry was run. "
         "Flow cytometry was repeated."}},
       {"Results", {Words(30, "res")}}}));
  std::vector<BenchmarkQuestion> qs = Generate(doc, 2);
  ASSERT_EQ(qs.size(), 3u);
  EXPECT_EQ(qs[0].template_id, Template::kMethodResult);
  EXPECT_EQ(qs[0].slot_fill, "western blot");
  EXPECT_EQ(qs[1].template_id, Template::kMethodResult);
  EXPECT_EQ(qs[1].slot_fill, "flow cytometry");
  EXPECT_EQ(qs[2].template_id, Template::kIntroResult);
  EXPECT_EQ(qs[2].slot_fill, "We hypothesized that aspirin lowers relapse rates");
  EXPECT_EQ(qs[2].text,
            "Does the data support the hypothesis that We hypothesized that "
            "aspirin lowers relapse rates?");
  EXPECT_EQ(qs[0].question_id, "PMC3:mr0");
  EXPECT_EQ(qs[1].question_id, "PMC3:mr1");
  EXPECT_EQ(qs[2].question_id, "PMC3:ir0");
}

TEST(SlotTest, LongestMentionFirst) {
  Document doc = Parse(BuildJats(
      "PMC4", {{"Methods", {"Aspirin was given for multiple sclerosis."}},
               {"Results", {Words(10)}}}));
  kg::EntityLinker linker(Dict());
  auto mentions = linker.Link(doc);
  EXPECT_THAT(EntitySlots(doc, mentions, SectionKind::kMethods),
              ElementsAre("multiple sclerosis", "Aspirin"));
  EXPECT_TRUE(EntitySlots(doc, mentions, SectionKind::kResults).empty());
}

TEST(SlotTest, CapitalizedFallback) {
  Document doc = Parse(BuildJats(
      "PMC5", {{"Methods",
                {"The samples ran on an Illumina HiSeq Platform overnight. "
                 "Reads were filtered in Galaxy."}},
               {"Results", {Words(10)}}}));
  EXPECT_THAT(EntitySlots(doc, {}, SectionKind::kMethods),
              ElementsAre("Illumina HiSeq Platform", "Galaxy"));
}

TEST(SlotTest, HypothesisOnlyFromFinalParagraph) {
  Document doc = Parse(BuildJats(
      "PMC6", {{"Introduction",
                {"We propose an early idea.", "Nothing hedged here at all."}},
               {"Results", {Words(10)}}}));
  EXPECT_FALSE(HypothesisSlot(doc).has_value());
  Document doc2 = Parse(BuildJats(
      "PMC7", {{"Introduction",
                {"Filler text.", "Context first. This study investigates "
                                 "whether dosing matters!"}},
               {"Results", {Words(10)}}}));
  EXPECT_EQ(HypothesisSlot(doc2),
            "This study investigates whether dosing matters");
}

TEST(SlotTest, CitationsFromResultsAndDiscussion) {
  const std::string back =
      "<ref-list>"
      "<ref id=\"B1\"><element-citation><person-group><name><surname>Smith"
      "</surname></name><name><surname>Jones</surname></name></person-group>"
      "<year>2019</year></element-citation></ref>"
      "<ref id=\"B2\"><element-citation><person-group><name><surname>Garcia"
      "</surname></name></person-group><year>2020</year></element-citation>"
      "</ref></ref-list>";
  Document doc = Parse(BuildJats(
      "PMC8",
      {{"Introduction",
        {"Prior art <xref ref-type=\"bibr\" rid=\"B2\">2</xref> exists."}},
       {"Methods", {Words(10)}},
       {"Results",
        {"Similar to <xref ref-type=\"bibr\" rid=\"B1\">1</xref> here."}},
       {"Discussion",
        {"Again <xref ref-type=\"bibr\" rid=\"B1\">1</xref> agrees."}}},
      "", back));
  EXPECT_THAT(CitationSlots(doc), ElementsAre("Smith et al. (2019)"));
  std::vector<BenchmarkQuestion> qs = Generate(doc, 5);
  ASSERT_EQ(CountTemplate(qs, Template::kCrossStudy), 1u);
  auto cs = std::find_if(qs.begin(), qs.end(), [](const BenchmarkQuestion& q) {
    return q.template_id == Template::kCrossStudy;
  });
  EXPECT_EQ(cs->text, "How do the results compare to Smith et al. (2019)?");
}

// Random articles: section subsets in random order, random terms and
// capitalized words sprinkled in, random hedges in the introduction.
std::string RandomArticle(std::mt19937_64& rng, int id) {
  const std::vector<std::string> titles = {"Introduction", "Methods",
                                           "Results", "Discussion",
                                           "Conclusion"};
  const std::vector<std::string> vocab = {
      "cells",   "were",     "flow cytometry", "western blot", "aspirin",
      "Alpha",   "Beta Gamma", "We",           "aim",          "to",
      "study",   "multiple sclerosis", "the",   "dose",        "hypothesize"};
  std::vector<SectionSpec> secs;
  for (const std::string& t : titles) {
    if (rng() % 4 == 0) continue;
    SectionSpec s{t, {}};
    int paras = 1 + rng() % 3;
    for (int p = 0; p < paras; ++p) {
      std::string text;
      int words = 3 + rng() % 25;
      for (int w = 0; w < words; ++w) {
        if (w) text += (rng() % 6 == 0) ? ". " : " ";
        text += vocab[rng() % vocab.size()];
      }
      s.paragraphs.push_back(text + ".");
    }
    secs.push_back(std::move(s));
  }
  std::shuffle(secs.begin(), secs.end(), rng);
  if (secs.empty()) secs.push_back({"Results", {"ok."}});
  return BuildJats(fmt::format("PMC{}", 1000 + id), secs);
}

TEST(GenerateProperty, ContractHoldsOnRandomArticles) {
  std::mt19937_64 rng(17);
  size_t total = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Document doc = Parse(RandomArticle(rng, trial));
    size_t cap = 1 + trial % 3;
    std::vector<BenchmarkQuestion> qs = Generate(doc, cap);
    total += qs.size();
    for (const BenchmarkQuestion& q : qs) {
      ASSERT_GE(q.required_sections.size(), 2u);
      EXPECT_NE(q.required_sections[0], q.required_sections[1]);
      for (SectionKind k : q.required_sections) EXPECT_TRUE(doc.HasKind(k));
      EXPECT_THAT(q.required_sections,
                  ::testing::ContainerEq(RequiredSections(q.template_id)));
      EXPECT_FALSE(q.slot_fill.empty());
      EXPECT_NE(q.text.find(q.slot_fill), std::string::npos);
      EXPECT_EQ(q.gold_doc_id, q.doc_id);
    }
    for (Template t : kAllTemplates) EXPECT_LE(CountTemplate(qs, t), cap);
    std::vector<BenchmarkQuestion> again = Generate(doc, cap);
    EXPECT_EQ(FormatQuestionsJsonl(qs), FormatQuestionsJsonl(again));
  }
  EXPECT_GT(total, 100u);
}

TEST(JsonlTest, RoundTrip) {
  Document doc = Parse(BuildJats(
      "PMC9", {{"Introduction", {"We aim to test \"quoted\" aspirin."}},
               {"Methods", {"Use flow cytometry."}},
               {"Results", {Words(5)}},
               {"Discussion", {Words(5)}}}));
  std::vector<BenchmarkQuestion> qs = Generate(doc, 2);
  ASSERT_FALSE(qs.empty());
  std::string text = FormatQuestionsJsonl(qs);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'),
            static_cast<long>(qs.size()));
  auto back = ParseQuestionsJsonl(text);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(FormatQuestionsJsonl(*back), text);
  EXPECT_FALSE(ParseQuestionsJsonl("{\"question_id\": 1}\n").ok());
  EXPECT_TRUE(ParseQuestionsJsonl("")->empty());
}

}  // namespace
}  // namespace latechunk::bench
