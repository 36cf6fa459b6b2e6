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
#ifndef LATECHUNK_CHUNKERS_CHUNK_H_
#define LATECHUNK_CHUNKERS_CHUNK_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/docgraph/document.h"
#include "latechunk/kg/linker.h"
#include "latechunk/util/matrix.h"

namespace latechunk::chunkers {

struct Chunk {
  std::string chunk_id;  // "<doc_id>#<5-digit index>"
  std::string doc_id;
  docgraph::TokenSpan span;
  std::vector<double> embedding;
  // Top-level sections overlapped, in reading order, as Document section
  // indices; the primary section is the one holding the first token.
  std::vector<int> sections;
  int primary_section = -1;
  std::string primary_label;
  docgraph::SectionKind primary_kind = docgraph::SectionKind::kOther;
  std::vector<std::string> cuis;  // sorted, unique
  std::string text;

  size_t size() const { return span.size(); }
};

std::string ChunkId(std::string_view doc_id, size_t index);

// Fills everything except the embedding. Sections come from the token
// section paths, CUIs from mentions intersecting the span.
Chunk DescribeChunk(const docgraph::Document& doc, docgraph::TokenSpan span,
                    size_t index, std::span<const kg::EntityMention> mentions);

// Mean of token rows over each span. EmptySpan for empty or out-of-range
// spans.
absl::StatusOr<std::vector<Chunk>> PoolChunks(
    const docgraph::Document& doc, const Matrix& tokens,
    std::span<const docgraph::TokenSpan> spans,
    std::span<const kg::EntityMention> mentions = {});

}  // namespace latechunk::chunkers

#endif  // LATECHUNK_CHUNKERS_CHUNK_H_
