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
#include "latechunk/chunkers/boundary.h"

#include <algorithm>
#include <cmath>

#include "fmt/format.h"
#include "latechunk/util/status.h"

namespace latechunk::chunkers {

using docgraph::NodeType;
using docgraph::TokenSpan;

absl::Status BoundaryWeights::Validate() const {
  for (double x : {alpha_struct, alpha_sem, alpha_entity, gamma, tau}) {
    if (!std::isfinite(x)) {
      return MakeError(ErrorKind::kInvalidConfig, "boundary weights must be finite");
    }
  }
  if (min_chunk == 0 || min_chunk >= max_chunk) {
    return MakeError(ErrorKind::kInvalidConfig,
                     fmt::format("need 0 < min_chunk < max_chunk, got {} and {}",
                                 min_chunk, max_chunk));
  }
  if (max_chunk + 1 < 2 * min_chunk) {
    return MakeError(
        ErrorKind::kInvalidConfig,
        fmt::format("max_chunk {} too small to split around min_chunk {}",
                    max_chunk, min_chunk));
  }
  if (window == 0) return MakeError(ErrorKind::kInvalidConfig, "window must be > 0");
  return absl::OkStatus();
}

std::vector<double> StructuralSignal(const docgraph::StructureGraph& graph,
                                     size_t n) {
  std::vector<double> s(n, 0.0);
  for (const docgraph::GraphNode& node : graph.nodes) {
    double w = 0;
    switch (node.type) {
      case NodeType::kSection: w = kSectionStart; break;
      case NodeType::kSubsection: w = kSubsectionStart; break;
      case NodeType::kParagraph: w = kParagraphStart; break;
      case NodeType::kCitation: continue;
    }
    if (node.span.empty() || node.span.begin >= n) continue;
    s[node.span.begin] = std::max(s[node.span.begin], w);
  }
  return s;
}

std::vector<double> SemanticSignal(const Matrix& tokens, size_t window) {
  const size_t n = tokens.rows();
  std::vector<double> s(n, 0.0);
  if (n < 2 || window == 0) return s;
  // Running window sums; the cosine of the sums equals that of the means.
  const size_t d = tokens.cols();
  std::vector<double> left(d, 0.0), right(d, 0.0);
  auto add = [&](std::vector<double>& acc, size_t row, double sign) {
    std::span<const double> r = tokens.Row(row);
    for (size_t c = 0; c < d; ++c) acc[c] += sign * r[c];
  };
  for (size_t r = 0; r < std::min(n, window); ++r) add(right, r, 1.0);
  for (size_t i = 1; i < n; ++i) {
    add(left, i - 1, 1.0);
    if (i > window) add(left, i - 1 - window, -1.0);
    add(right, i - 1, -1.0);
    if (i - 1 + window < n) add(right, i - 1 + window, 1.0);
    s[i] = 1.0 - Cosine(left, right);
  }
  return s;
}

std::vector<double> ScoreBoundaries(const Matrix& tokens,
                                    const docgraph::StructureGraph& graph,
                                    std::span<const kg::EntityMention> mentions,
                                    const BoundaryWeights& weights) {
  const size_t n = tokens.rows();
  if (n < 2) return {};
  const std::vector<double> structural = StructuralSignal(graph, n);
  std::vector<double> semantic(n, 0.0);
  if (weights.alpha_sem != 0.0) semantic = SemanticSignal(tokens, weights.window);
  std::vector<bool> crossed(n, false);
  for (const kg::EntityMention& m : mentions) {
    for (size_t i = m.first + 1; i <= m.last && i < n; ++i) crossed[i] = true;
  }
  std::vector<double> scores(n - 1);
  for (size_t i = 1; i < n; ++i) {
    const double entity = crossed[i] ? -weights.gamma : 0.0;
    scores[i - 1] = weights.alpha_struct * structural[i] +
                    weights.alpha_sem * semantic[i] +
                    weights.alpha_entity * entity;
  }
  return scores;
}

std::vector<size_t> DetectPeaks(std::span<const double> scores, double tau) {
  std::vector<size_t> peaks;
  const size_t m = scores.size();
  size_t j = 0;
  while (j < m) {
    size_t end = j + 1;  // plateau [j, end)
    while (end < m && scores[end] == scores[j]) ++end;
    const bool left_lower = j == 0 || scores[j - 1] < scores[j];
    const bool right_lower = end == m || scores[end] < scores[j];
    if (left_lower && right_lower && scores[j] > tau) peaks.push_back(j + 1);
    j = end;
  }
  return peaks;
}

std::vector<TokenSpan> MergeShort(std::span<const TokenSpan> spans,
                                  size_t min_chunk) {
  std::vector<TokenSpan> out;
  if (spans.empty()) return out;
  size_t start = spans.front().begin;
  for (size_t k = 0; k < spans.size(); ++k) {
    const TokenSpan merged{start, spans[k].end};
    if (merged.size() < min_chunk && k + 1 < spans.size()) continue;
    out.push_back(merged);
    start = spans[k].end;
  }
  if (out.size() > 1 && out.back().size() < min_chunk) {
    out[out.size() - 2].end = out.back().end;
    out.pop_back();
  }
  return out;
}

void SplitLong(TokenSpan span, std::span<const double> scores,
               const BoundaryWeights& weights, std::vector<TokenSpan>& out) {
  if (span.size() <= weights.max_chunk ||
      span.size() < 2 * weights.min_chunk) {
    out.push_back(span);
    return;
  }
  size_t best = span.begin + weights.min_chunk;
  for (size_t p = best + 1; p + weights.min_chunk <= span.end; ++p) {
    if (scores[p - 1] > scores[best - 1]) best = p;
  }
  SplitLong({span.begin, best}, scores, weights, out);
  SplitLong({best, span.end}, scores, weights, out);
}

std::vector<TokenSpan> DetectChunks(std::span<const double> scores, size_t n,
                                    const BoundaryWeights& weights) {
  if (n == 0) return {};
  std::vector<TokenSpan> raw;
  size_t start = 0;
  for (size_t p : DetectPeaks(scores, weights.tau)) {
    raw.push_back({start, p});
    start = p;
  }
  raw.push_back({start, n});
  std::vector<TokenSpan> out;
  for (const TokenSpan& s : MergeShort(raw, weights.min_chunk)) {
    SplitLong(s, scores, weights, out);
  }
  return out;
}

}  // namespace latechunk::chunkers
