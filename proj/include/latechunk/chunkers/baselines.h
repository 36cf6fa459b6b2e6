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
#ifndef LATECHUNK_CHUNKERS_BASELINES_H_
#define LATECHUNK_CHUNKERS_BASELINES_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/chunkers/boundary.h"
#include "latechunk/chunkers/chunk.h"
#include "latechunk/docgraph/document.h"
#include "latechunk/docgraph/structure_graph.h"
#include "latechunk/embed/provider.h"
#include "latechunk/kg/linker.h"

namespace latechunk::chunkers {

inline constexpr size_t kNaiveSize = 256;
inline constexpr size_t kNaiveOverlap = 32;
inline constexpr double kSemanticThreshold = 0.75;

// Mean of provider rows when the span is encoded on its own, without the
// rest of the document.
absl::StatusOr<std::vector<double>> EmbedSpanAlone(const docgraph::Document& doc,
                                                   docgraph::TokenSpan span,
                                                   embed::EmbeddingProvider& provider);

// Windows of `size` tokens every size - overlap tokens; each chunk is
// embedded independently.
absl::StatusOr<std::vector<Chunk>> NaiveChunks(
    const docgraph::Document& doc, embed::EmbeddingProvider& provider,
    size_t size = kNaiveSize, size_t overlap = kNaiveOverlap,
    std::span<const kg::EntityMention> mentions = {});

// Groups of consecutive sentences represented by the mean of their sentence
// embeddings. A sentence whose cosine to that mean falls below the
// threshold starts a new chunk. Chunks are embedded independently.
absl::StatusOr<std::vector<docgraph::TokenSpan>> SemanticSpans(
    const docgraph::Document& doc, embed::EmbeddingProvider& provider,
    double threshold = kSemanticThreshold);
absl::StatusOr<std::vector<Chunk>> SemanticChunks(
    const docgraph::Document& doc, embed::EmbeddingProvider& provider,
    double threshold = kSemanticThreshold,
    std::span<const kg::EntityMention> mentions = {});

// Sentence spans pooled from full-document token vectors.
absl::StatusOr<std::vector<Chunk>> LateSentenceChunks(
    const docgraph::Document& doc, const Matrix& tokens,
    std::span<const kg::EntityMention> mentions = {});

// Boundary detection over the structure graph, pooled from the given token
// vectors (enriched or not).
absl::StatusOr<std::vector<Chunk>> StructureChunks(
    const docgraph::Document& doc, const docgraph::StructureGraph& graph,
    const Matrix& tokens, std::span<const kg::EntityMention> mentions,
    const BoundaryWeights& weights);

}  // namespace latechunk::chunkers

#endif  // LATECHUNK_CHUNKERS_BASELINES_H_
