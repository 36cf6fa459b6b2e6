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
#include "latechunk/docgraph/conditions.h"

#include <string>
#include <vector>

#include "fmt/format.h"
#include "latechunk/util/status.h"

namespace latechunk::docgraph {
namespace {

class Slicer {
 public:
  Slicer(const Document& src, Document* dst) : src_(src), dst_(dst) {}

  void CopySection(int s, int parent) {
    const Section& in = src_.sections[s];
    const int index = static_cast<int>(dst_->sections.size());
    Section out = in;
    out.parent = parent;
    out.top = parent < 0 ? index : dst_->sections[parent].top;
    out.paragraphs.clear();
    out.subsections.clear();
    dst_->sections.push_back(std::move(out));

    const size_t first = dst_->tokens.size();
    // Paragraphs and subsections are interleaved by token position.
    size_t pi = 0, si = 0;
    while (pi < in.paragraphs.size() || si < in.subsections.size()) {
      const bool take_para =
          si == in.subsections.size() ||
          (pi < in.paragraphs.size() &&
           src_.paragraphs[in.paragraphs[pi]].span.begin <
               src_.sections[in.subsections[si]].span.begin);
      if (take_para) {
        CopyParagraph(in.paragraphs[pi++], index);
      } else {
        const int sub = static_cast<int>(dst_->sections.size());
        CopySection(in.subsections[si++], index);
        dst_->sections[index].subsections.push_back(sub);
      }
    }
    dst_->sections[index].span = {first, dst_->tokens.size()};
  }

 private:
  void CopyParagraph(int p, int section) {
    const Paragraph& in = src_.paragraphs[p];
    const Token& first = src_.tokens[in.span.begin];
    const Token& last = src_.tokens[in.span.end - 1];
    const std::string_view text = std::string_view(src_.text).substr(
        first.offset, last.offset + last.text.size() - first.offset);
    if (!dst_->text.empty()) dst_->text += "\n\n";
    const size_t base = dst_->text.size();
    dst_->text += text;

    Paragraph out = in;
    out.section = section;
    out.span.begin = dst_->tokens.size();
    for (size_t t = in.span.begin; t < in.span.end; ++t) {
      Token tok = src_.tokens[t];
      tok.offset = base + (tok.offset - first.offset);
      tok.section = section;
      dst_->tokens.push_back(std::move(tok));
    }
    out.span.end = dst_->tokens.size();
    dst_->sections[section].paragraphs.push_back(
        static_cast<int>(dst_->paragraphs.size()));
    dst_->paragraphs.push_back(std::move(out));
  }

  const Document& src_;
  Document* dst_;
};

}  // namespace

std::string_view ConditionName(Condition condition) {
  switch (condition) {
    case Condition::kAbstract: return "abstract";
    case Condition::kIntroduction: return "introduction";
    case Condition::kPartial: return "partial";
    case Condition::kFullText: return "fulltext";
  }
  return "fulltext";
}

std::optional<Condition> ParseCondition(std::string_view name) {
  for (Condition c : {Condition::kAbstract, Condition::kIntroduction,
                      Condition::kPartial, Condition::kFullText}) {
    if (ConditionName(c) == name) return c;
  }
  return std::nullopt;
}

bool ImradFilter(const Document& doc) {
  return doc.HasKind(SectionKind::kIntroduction) &&
         doc.HasKind(SectionKind::kMethods) &&
         doc.HasKind(SectionKind::kResults) &&
         doc.HasKind(SectionKind::kDiscussion) &&
         doc.word_count >= kImradMinWords;
}

absl::StatusOr<Document> ExtractCondition(const Document& doc,
                                          Condition condition) {
  auto wanted = [condition](const Section& s) {
    switch (condition) {
      case Condition::kAbstract:
        return s.kind == SectionKind::kAbstract && !s.in_body;
      case Condition::kIntroduction:
        return s.in_body && s.kind == SectionKind::kIntroduction;
      case Condition::kPartial:
        return s.in_body && (s.kind == SectionKind::kIntroduction ||
                             s.kind == SectionKind::kMethods);
      case Condition::kFullText:
        return s.in_body;
    }
    return false;
  };

  std::vector<int> keep;
  for (int s : doc.TopLevelSections()) {
    if (wanted(doc.sections[s])) keep.push_back(s);
  }
  auto missing = [&](SectionKind kind) {
    for (int s : keep) {
      if (doc.sections[s].kind == kind) return false;
    }
    return true;
  };
  std::string_view absent;
  switch (condition) {
    case Condition::kAbstract:
      if (keep.empty()) absent = "Abstract";
      break;
    case Condition::kIntroduction:
      if (keep.empty()) absent = "Introduction";
      break;
    case Condition::kPartial:
      if (missing(SectionKind::kIntroduction)) absent = "Introduction";
      else if (missing(SectionKind::kMethods)) absent = "Methods";
      break;
    case Condition::kFullText:
      if (keep.empty()) absent = "body";
      break;
  }
  if (!absent.empty()) {
    return MakeError(ErrorKind::kMissingSection,
                     fmt::format("'{}' has no {} section for condition {}",
                                 doc.source_id, absent,
                                 ConditionName(condition)));
  }

  Document out;
  out.source_id = doc.source_id;
  out.doc_id = fmt::format("{}:{}", doc.source_id, ConditionName(condition));
  out.title = doc.title;
  out.references = doc.references;
  Slicer slicer(doc, &out);
  for (int s : keep) slicer.CopySection(s, -1);
  for (const Section& s : out.sections) {
    if (s.parent < 0) out.word_count += s.word_count;
  }
  return out;
}

}  // namespace latechunk::docgraph
