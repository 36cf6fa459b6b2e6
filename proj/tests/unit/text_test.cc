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
#include "latechunk/util/text.h"

#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace latechunk {
namespace {

std::vector<std::string> Texts(std::string_view s) {
  std::vector<std::string> out;
  for (const RawToken& t : Tokenize(s)) out.push_back(t.text);
  return out;
}

TEST(TokenizeTest, SplitsLeadingAndTrailingPunctuation) {
  EXPECT_EQ(Texts("(IL-6), levels rose."),
            (std::vector<std::string>{"(", "IL-6", ")", ",", "levels", "rose",
                                      "."}));
}

TEST(TokenizeTest, KeepsInteriorPunctuation) {
  EXPECT_EQ(Texts("e.g. p<0.05"),
            (std::vector<std::string>{"e.g", ".", "p<0.05"}));
}

TEST(TokenizeTest, OffsetsPointIntoSource) {
  const std::string text = "  alpha,\tbeta";
  for (const RawToken& t : Tokenize(text)) {
    EXPECT_EQ(text.substr(t.offset, t.text.size()), t.text);
  }
}

TEST(TokenizeTest, UnicodeWhitespaceAndPunctuation) {
  // NBSP between words, em dash and curly quotes around a word.
  EXPECT_EQ(Texts("a\xC2\xA0" "b \xE2\x80\x9C" "c\xE2\x80\x9D\xE2\x80\x94"),
            (std::vector<std::string>{"a", "b", "\xE2\x80\x9C", "c",
                                      "\xE2\x80\x9D", "\xE2\x80\x94"}));
}

TEST(TokenizeTest, PunctuationOnlyWord) {
  EXPECT_EQ(Texts("a -- b"), (std::vector<std::string>{"a", "-", "-", "b"}));
}

TEST(CountWordsTest, WhitespaceDelimited) {
  EXPECT_EQ(CountWords(""), 0u);
  EXPECT_EQ(CountWords("one"), 1u);
  EXPECT_EQ(CountWords(" one,  two\nthree. "), 3u);
}

TEST(NormalizeTest, TermsAndWords) {
  EXPECT_EQ(NormalizeWord("IL-6,"), "il6");
  EXPECT_EQ(NormalizeTerm("  Multiple   Sclerosis "), "multiple sclerosis");
  EXPECT_EQ(NormalizeTerm("Crohn's disease (CD)"), "crohns disease cd");
  EXPECT_TRUE(IsPunctuationToken(".."));
  EXPECT_FALSE(IsPunctuationToken("a."));
}

TEST(CollapseWhitespaceTest, TrimsAndCollapses) {
  EXPECT_EQ(CollapseWhitespace("\n  a \t b  "), "a b");
}

}  // namespace
}  // namespace latechunk
