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
#ifndef LATECHUNK_DOCGRAPH_DOCUMENT_H_
#define LATECHUNK_DOCGRAPH_DOCUMENT_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latechunk::docgraph {

enum class SectionKind {
  kIntroduction,
  kMethods,
  kResults,
  kDiscussion,
  kAbstract,
  kOther,
};

std::string_view SectionKindName(SectionKind kind);
std::optional<SectionKind> ParseSectionKind(std::string_view name);

// Version tag of the header synonym table below. Bump on any edit.
inline constexpr int kSectionSynonymTableVersion = 1;

// Maps a section header to its kind through the fixed synonym table.
// Matching is on the normalized label: lowercase, leading numbering and
// trailing punctuation removed, "&" read as "and".
SectionKind KindFromLabel(std::string_view label);

// Cleans a raw header: collapses whitespace and strips leading numbering
// such as "2.", "2.1" or "II.".
std::string NormalizeLabel(std::string_view raw_title);

// Half-open token range [begin, end).
struct TokenSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool empty() const { return end <= begin; }
  bool Contains(const TokenSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend auto operator<=>(const TokenSpan&, const TokenSpan&) = default;
};

struct Token {
  std::string text;
  size_t offset = 0;  // byte offset into Document::text
  int section = -1;   // innermost section; see Document::SectionPath
};

struct Paragraph {
  TokenSpan span;
  int section = -1;
  // Bibliography ids cited from this paragraph, in marker order, repeats kept.
  std::vector<std::string> citations;
  size_t word_count = 0;
};

struct Section {
  std::string label;
  SectionKind kind = SectionKind::kOther;
  int parent = -1;  // -1 for top-level sections
  int top = -1;     // index of the top-level ancestor (self when top-level)
  int depth = 0;
  bool in_body = true;  // false for the abstract
  std::vector<int> paragraphs;   // indices into Document::paragraphs
  std::vector<int> subsections;  // indices into Document::sections
  TokenSpan span;
  size_t word_count = 0;  // includes subsections
};

struct Reference {
  std::string id;
  std::string first_author;
  std::string year;
  bool et_al = false;  // more than one author listed

  // First-author-plus-year citation string, e.g. "Smith et al. (2019)".
  std::string CitationString() const;
};

// A parsed article. Sections are stored flat in reading order (preorder);
// nesting is expressed through parent/subsections indices.
struct Document {
  std::string doc_id;     // condition-suffixed for sliced documents
  std::string source_id;  // id of the originating article
  std::string title;
  std::string text;  // paragraph texts joined by blank lines
  std::vector<Section> sections;
  std::vector<Paragraph> paragraphs;
  std::vector<Token> tokens;
  std::vector<Reference> references;
  size_t word_count = 0;  // body words, abstract excluded

  std::vector<int> TopLevelSections() const;

  // Section indices from the top-level ancestor down to the token's section.
  std::vector<int> SectionPath(size_t token) const;

  // Top-level section containing the token.
  int TopSectionOf(size_t token) const;

  // Number of top-level body sections.
  size_t BodySectionCount() const;

  const Reference* FindReference(std::string_view id) const;

  bool HasKind(SectionKind kind) const;
};

// Strips a condition suffix from a document id ("PMC1:fulltext" -> "PMC1").
std::string_view BaseDocId(std::string_view doc_id);

}  // namespace latechunk::docgraph

#endif  // LATECHUNK_DOCGRAPH_DOCUMENT_H_
