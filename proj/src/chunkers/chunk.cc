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
#include "latechunk/chunkers/chunk.h"

#include <algorithm>
#include <set>

#include "fmt/format.h"
#include "latechunk/util/status.h"

namespace latechunk::chunkers {

using docgraph::TokenSpan;

std::string ChunkId(std::string_view doc_id, size_t index) {
  return fmt::format("{}#{:05d}", doc_id, index);
}

Chunk DescribeChunk(const docgraph::Document& doc, TokenSpan span, size_t index,
                    std::span<const kg::EntityMention> mentions) {
  Chunk c;
  c.chunk_id = ChunkId(doc.doc_id, index);
  c.doc_id = doc.doc_id;
  c.span = span;
  for (size_t t = span.begin; t < span.end; ++t) {
    const int top = doc.TopSectionOf(t);
    if (top >= 0 &&
        std::find(c.sections.begin(), c.sections.end(), top) == c.sections.end()) {
      c.sections.push_back(top);
    }
  }
  c.primary_section = span.empty() ? -1 : doc.TopSectionOf(span.begin);
  if (c.primary_section >= 0) {
    const docgraph::Section& s = doc.sections[c.primary_section];
    c.primary_label = s.label;
    c.primary_kind = s.kind;
  }
  std::set<std::string> cuis;
  for (const kg::EntityMention& m : mentions) {
    if (m.first < span.end && m.last >= span.begin) cuis.insert(m.cui);
  }
  c.cuis.assign(cuis.begin(), cuis.end());
  if (!span.empty()) {
    const docgraph::Token& first = doc.tokens[span.begin];
    const docgraph::Token& last = doc.tokens[span.end - 1];
    c.text = doc.text.substr(first.offset,
                             last.offset + last.text.size() - first.offset);
  }
  return c;
}

absl::StatusOr<std::vector<Chunk>> PoolChunks(
    const docgraph::Document& doc, const Matrix& tokens,
    std::span<const TokenSpan> spans,
    std::span<const kg::EntityMention> mentions) {
  std::vector<Chunk> out;
  out.reserve(spans.size());
  for (size_t k = 0; k < spans.size(); ++k) {
    const TokenSpan& s = spans[k];
    if (s.empty() || s.end > tokens.rows() || s.end > doc.tokens.size()) {
      return MakeError(ErrorKind::kEmptySpan,
                       fmt::format("span [{}, {}) in {} with {} tokens", s.begin,
                                   s.end, doc.doc_id, tokens.rows()));
    }
    Chunk c = DescribeChunk(doc, s, k, mentions);
    c.embedding = MeanRows(tokens, s.begin, s.end);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace latechunk::chunkers
