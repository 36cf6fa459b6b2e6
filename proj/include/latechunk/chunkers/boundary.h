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
#ifndef LATECHUNK_CHUNKERS_BOUNDARY_H_
#define LATECHUNK_CHUNKERS_BOUNDARY_H_

#include <span>
#include <vector>

#include "absl/status/status.h"
#include "latechunk/docgraph/document.h"
#include "latechunk/docgraph/structure_graph.h"
#include "latechunk/kg/linker.h"
#include "latechunk/util/matrix.h"

namespace latechunk::chunkers {

struct BoundaryWeights {
  double alpha_struct = 0.5;
  double alpha_sem = 0.3;
  double alpha_entity = 1.0;
  double gamma = 0.5;
  double tau = 0.3;
  size_t window = 16;
  size_t min_chunk = 128;
  size_t max_chunk = 1024;

  // Requires min_chunk >= 1, max_chunk + 1 >= 2 * min_chunk (so an
  // oversized span can always be split into two legal parts), finite reals.
  absl::Status Validate() const;
};

inline constexpr double kSectionStart = 1.0;
inline constexpr double kSubsectionStart = 0.7;
inline constexpr double kParagraphStart = 0.4;

// Structural signal per position: the largest node-start weight among the
// graph nodes beginning at token i. Length n, entry 0 unused.
std::vector<double> StructuralSignal(const docgraph::StructureGraph& graph,
                                     size_t n);

// 1 - cos(mean rows [i-w, i), mean rows [i, i+w)), windows truncated at the
// edges. Length n, entry 0 unused.
std::vector<double> SemanticSignal(const Matrix& tokens, size_t window);

// Scores for the n-1 inter-token positions; scores[j] is the boundary placed
// before token j + 1.
std::vector<double> ScoreBoundaries(const Matrix& tokens,
                                    const docgraph::StructureGraph& graph,
                                    std::span<const kg::EntityMention> mentions,
                                    const BoundaryWeights& weights);

// Positions (token indices) of local maxima above tau. A plateau counts once,
// at its leftmost index, when both sides of it are lower.
std::vector<size_t> DetectPeaks(std::span<const double> scores, double tau);

// Partition of [0, n) from peak boundaries, then short spans merged forward
// (a short tail merges backward) and long spans split recursively at their
// best interior score with both parts at least min_chunk.
std::vector<docgraph::TokenSpan> DetectChunks(std::span<const double> scores,
                                              size_t n,
                                              const BoundaryWeights& weights);

std::vector<docgraph::TokenSpan> MergeShort(
    std::span<const docgraph::TokenSpan> spans, size_t min_chunk);
void SplitLong(docgraph::TokenSpan span, std::span<const double> scores,
               const BoundaryWeights& weights,
               std::vector<docgraph::TokenSpan>& out);

}  // namespace latechunk::chunkers

#endif  // LATECHUNK_CHUNKERS_BOUNDARY_H_
