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
#include "latechunk/chunkers/baselines.h"

#include "fmt/format.h"
#include "latechunk/chunkers/sentences.h"
#include "latechunk/embed/encoder.h"
#include "latechunk/util/status.h"

namespace latechunk::chunkers {

using docgraph::TokenSpan;

absl::StatusOr<std::vector<double>> EmbedSpanAlone(
    const docgraph::Document& doc, TokenSpan span,
    embed::EmbeddingProvider& provider) {
  if (span.empty()) return MakeError(ErrorKind::kEmptySpan, doc.doc_id);
  const size_t window = std::min(embed::kDefaultWindow, provider.max_window());
  const size_t overlap = std::min(embed::kDefaultOverlap, window / 2);
  LC_ASSIGN_OR_RETURN(Matrix rows,
                      embed::EncodeTokens(embed::TokenTexts(doc, span), provider,
                                          window, overlap));
  return MeanRows(rows, 0, rows.rows());
}

absl::StatusOr<std::vector<Chunk>> NaiveChunks(
    const docgraph::Document& doc, embed::EmbeddingProvider& provider,
    size_t size, size_t overlap, std::span<const kg::EntityMention> mentions) {
  if (size == 0 || overlap >= size) {
    return MakeError(ErrorKind::kInvalidConfig,
                     fmt::format("naive size {} must exceed overlap {}", size,
                                 overlap));
  }
  std::vector<Chunk> out;
  for (const TokenSpan& w : embed::SlidingWindows(doc.tokens.size(), size, overlap)) {
    Chunk c = DescribeChunk(doc, w, out.size(), mentions);
    LC_ASSIGN_OR_RETURN(c.embedding, EmbedSpanAlone(doc, w, provider));
    out.push_back(std::move(c));
  }
  return out;
}

absl::StatusOr<std::vector<TokenSpan>> SemanticSpans(
    const docgraph::Document& doc, embed::EmbeddingProvider& provider,
    double threshold) {
  std::vector<TokenSpan> out;
  std::vector<double> running_sum;
  for (const TokenSpan& s : SegmentSentences(doc)) {
    LC_ASSIGN_OR_RETURN(std::vector<double> e, EmbedSpanAlone(doc, s, provider));
    if (!out.empty() && Cosine(running_sum, e) >= threshold) {
      out.back().end = s.end;
      for (size_t c = 0; c < e.size(); ++c) running_sum[c] += e[c];
      continue;
    }
    out.push_back(s);
    running_sum = std::move(e);
  }
  return out;
}

absl::StatusOr<std::vector<Chunk>> SemanticChunks(
    const docgraph::Document& doc, embed::EmbeddingProvider& provider,
    double threshold, std::span<const kg::EntityMention> mentions) {
  LC_ASSIGN_OR_RETURN(std::vector<TokenSpan> spans,
                      SemanticSpans(doc, provider, threshold));
  std::vector<Chunk> out;
  for (const TokenSpan& s : spans) {
    Chunk c = DescribeChunk(doc, s, out.size(), mentions);
    LC_ASSIGN_OR_RETURN(c.embedding, EmbedSpanAlone(doc, s, provider));
    out.push_back(std::move(c));
  }
  return out;
}

absl::StatusOr<std::vector<Chunk>> LateSentenceChunks(
    const docgraph::Document& doc, const Matrix& tokens,
    std::span<const kg::EntityMention> mentions) {
  return PoolChunks(doc, tokens, SegmentSentences(doc), mentions);
}

absl::StatusOr<std::vector<Chunk>> StructureChunks(
    const docgraph::Document& doc, const docgraph::StructureGraph& graph,
    const Matrix& tokens, std::span<const kg::EntityMention> mentions,
    const BoundaryWeights& weights) {
  LC_RETURN_IF_ERROR(weights.Validate());
  const std::vector<double> scores =
      ScoreBoundaries(tokens, graph, mentions, weights);
  const std::vector<TokenSpan> spans =
      DetectChunks(scores, tokens.rows(), weights);
  return PoolChunks(doc, tokens, spans, mentions);
}

}  // namespace latechunk::chunkers
