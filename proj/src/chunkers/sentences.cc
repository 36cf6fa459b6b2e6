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
#include "latechunk/chunkers/sentences.h"

#include <array>
#include <cctype>

#include "latechunk/util/text.h"

namespace latechunk::chunkers {

using docgraph::TokenSpan;

namespace {

constexpr std::array<std::string_view, 24> kAbbreviations = {
    "al",   "approx", "ca",  "cf",  "dr",  "e.g", "eq",  "eqs",
    "fig",  "figs",   "i.e", "jr",  "mr",  "mrs", "no",  "nos",
    "pp",   "prof",   "ref", "refs", "resp", "sr", "vol", "vs"};

bool IsTerminal(std::string_view t) { return t == "." || t == "?" || t == "!"; }

bool StartsUpper(std::string_view t) {
  return !t.empty() && std::isupper(static_cast<unsigned char>(t[0]));
}

}  // namespace

bool IsAbbreviation(std::string_view token) {
  const std::string lower = AsciiLower(token);
  if (lower.size() == 1 && std::isalpha(static_cast<unsigned char>(lower[0]))) {
    return true;
  }
  for (std::string_view a : kAbbreviations) {
    if (lower == a) return true;
  }
  return false;
}

std::vector<TokenSpan> SegmentSentences(std::span<const std::string> tokens,
                                        std::span<const size_t> offsets) {
  std::vector<TokenSpan> out;
  const size_t n = tokens.size();
  size_t start = 0;
  for (size_t t = 0; t + 1 < n; ++t) {
    if (!IsTerminal(tokens[t])) continue;
    const bool spaced = offsets[t + 1] > offsets[t] + tokens[t].size();
    if (!spaced || !StartsUpper(tokens[t + 1])) continue;
    if (t > start && IsAbbreviation(tokens[t - 1])) continue;
    out.push_back({start, t + 1});
    start = t + 1;
  }
  if (start < n) out.push_back({start, n});
  return out;
}

std::vector<TokenSpan> SegmentSentences(const docgraph::Document& doc) {
  std::vector<TokenSpan> out;
  std::vector<std::string> texts;
  std::vector<size_t> offsets;
  auto segment = [&](TokenSpan range) {
    texts.clear();
    offsets.clear();
    for (size_t t = range.begin; t < range.end; ++t) {
      texts.push_back(doc.tokens[t].text);
      offsets.push_back(doc.tokens[t].offset);
    }
    for (TokenSpan s : SegmentSentences(texts, offsets)) {
      out.push_back({s.begin + range.begin, s.end + range.begin});
    }
  };
  // Paragraph spans tile the token stream; any uncovered stretch is treated
  // as its own paragraph so the result still partitions [0, n).
  size_t cursor = 0;
  for (const docgraph::Paragraph& p : doc.paragraphs) {
    if (p.span.begin > cursor) segment({cursor, p.span.begin});
    if (p.span.begin >= cursor) {
      segment(p.span);
      cursor = p.span.end;
    }
  }
  if (cursor < doc.tokens.size()) segment({cursor, doc.tokens.size()});
  return out;
}

}  // namespace latechunk::chunkers
