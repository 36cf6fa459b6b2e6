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
#include "latechunk/docgraph/document.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "fmt/format.h"
#include "latechunk/util/text.h"

namespace latechunk::docgraph {
namespace {

// Header synonym table, version kSectionSynonymTableVersion.
const std::map<std::string, SectionKind, std::less<>>& SynonymTable() {
  static const auto* table = new std::map<std::string, SectionKind, std::less<>>{
      {"abstract", SectionKind::kAbstract},
      {"summary", SectionKind::kAbstract},

      {"introduction", SectionKind::kIntroduction},
      {"intro", SectionKind::kIntroduction},
      {"background", SectionKind::kIntroduction},
      {"introduction and background", SectionKind::kIntroduction},
      {"background and introduction", SectionKind::kIntroduction},
      {"overview", SectionKind::kIntroduction},
      {"rationale", SectionKind::kIntroduction},

      {"methods", SectionKind::kMethods},
      {"method", SectionKind::kMethods},
      {"materials and methods", SectionKind::kMethods},
      {"material and methods", SectionKind::kMethods},
      {"methods and materials", SectionKind::kMethods},
      {"materials and method", SectionKind::kMethods},
      {"materials", SectionKind::kMethods},
      {"methodology", SectionKind::kMethods},
      {"experimental procedures", SectionKind::kMethods},
      {"experimental section", SectionKind::kMethods},
      {"experimental", SectionKind::kMethods},
      {"experimental methods", SectionKind::kMethods},
      {"patients and methods", SectionKind::kMethods},
      {"subjects and methods", SectionKind::kMethods},
      {"study design", SectionKind::kMethods},
      {"study design and methods", SectionKind::kMethods},
      {"research design and methods", SectionKind::kMethods},
      {"methods and analysis", SectionKind::kMethods},

      {"results", SectionKind::kResults},
      {"result", SectionKind::kResults},
      {"findings", SectionKind::kResults},
      {"results and analysis", SectionKind::kResults},
      {"experimental results", SectionKind::kResults},
      {"results and discussion", SectionKind::kResults},

      {"discussion", SectionKind::kDiscussion},
      {"general discussion", SectionKind::kDiscussion},
      {"conclusions", SectionKind::kDiscussion},
      {"conclusion", SectionKind::kDiscussion},
      {"discussion and conclusions", SectionKind::kDiscussion},
      {"discussion and conclusion", SectionKind::kDiscussion},
      {"concluding remarks", SectionKind::kDiscussion},
      {"summary and conclusions", SectionKind::kDiscussion},
      {"interpretation", SectionKind::kDiscussion},
  };
  return *table;
}

bool IsNumberingWord(std::string_view word) {
  if (word.empty()) return false;
  // Arabic numbering: "2", "2.", "2.1", "2.1.3."
  if (std::all_of(word.begin(), word.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
      })) {
    return std::isdigit(static_cast<unsigned char>(word.front()));
  }
  // Roman numerals followed by a period: "II.", "IV."
  if (word.size() >= 2 && word.back() == '.') {
    return std::all_of(word.begin(), word.end() - 1, [](char c) {
      return c == 'I' || c == 'V' || c == 'X';
    });
  }
  return false;
}

}  // namespace

std::string_view SectionKindName(SectionKind kind) {
  switch (kind) {
    case SectionKind::kIntroduction: return "Introduction";
    case SectionKind::kMethods: return "Methods";
    case SectionKind::kResults: return "Results";
    case SectionKind::kDiscussion: return "Discussion";
    case SectionKind::kAbstract: return "Abstract";
    case SectionKind::kOther: return "Other";
  }
  return "Other";
}

std::optional<SectionKind> ParseSectionKind(std::string_view name) {
  for (SectionKind kind :
       {SectionKind::kIntroduction, SectionKind::kMethods,
        SectionKind::kResults, SectionKind::kDiscussion,
        SectionKind::kAbstract, SectionKind::kOther}) {
    if (SectionKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string NormalizeLabel(std::string_view raw_title) {
  std::string collapsed = CollapseWhitespace(raw_title);
  std::string_view view = collapsed;
  const size_t space = view.find(' ');
  if (space != std::string_view::npos && IsNumberingWord(view.substr(0, space))) {
    view.remove_prefix(space + 1);
  }
  return std::string(view);
}

SectionKind KindFromLabel(std::string_view label) {
  std::string key = AsciiLower(NormalizeLabel(label));
  for (size_t amp = key.find('&'); amp != std::string::npos;
       amp = key.find('&', amp)) {
    key.replace(amp, 1, "and");
  }
  while (!key.empty() && (std::ispunct(static_cast<unsigned char>(key.back())) ||
                          key.back() == ' ')) {
    key.pop_back();
  }
  const auto& table = SynonymTable();
  auto it = table.find(key);
  return it == table.end() ? SectionKind::kOther : it->second;
}

std::string Reference::CitationString() const {
  std::string author = first_author.empty() ? id : first_author;
  if (et_al) author += " et al.";
  if (year.empty()) return author;
  return fmt::format("{} ({})", author, year);
}

std::vector<int> Document::TopLevelSections() const {
  std::vector<int> out;
  for (size_t i = 0; i < sections.size(); ++i) {
    if (sections[i].parent < 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> Document::SectionPath(size_t token) const {
  std::vector<int> path;
  for (int s = tokens[token].section; s >= 0; s = sections[s].parent) {
    path.push_back(s);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int Document::TopSectionOf(size_t token) const {
  const int s = tokens[token].section;
  return s < 0 ? -1 : sections[s].top;
}

size_t Document::BodySectionCount() const {
  size_t count = 0;
  for (const Section& s : sections) {
    if (s.parent < 0 && s.in_body) ++count;
  }
  return count;
}

const Reference* Document::FindReference(std::string_view id) const {
  for (const Reference& r : references) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

bool Document::HasKind(SectionKind kind) const {
  for (const Section& s : sections) {
    if (s.parent < 0 && s.kind == kind) return true;
  }
  return false;
}

std::string_view BaseDocId(std::string_view doc_id) {
  for (std::string_view tag : {":abstract", ":introduction", ":partial",
                               ":fulltext"}) {
    if (doc_id.ends_with(tag)) return doc_id.substr(0, doc_id.size() - tag.size());
  }
  return doc_id;
}

}  // namespace latechunk::docgraph
