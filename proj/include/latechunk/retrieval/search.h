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
#ifndef LATECHUNK_RETRIEVAL_SEARCH_H_
#define LATECHUNK_RETRIEVAL_SEARCH_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/kg/concept_graph.h"
#include "latechunk/retrieval/index.h"

namespace latechunk::retrieval {

inline constexpr double kDefaultBeta = 0.7;

struct Query {
  std::string id;
  std::vector<double> vector;
  std::vector<std::string> cuis;
};

struct Hit {
  size_t entry = 0;  // position in the index
  std::string chunk_id;
  std::string doc_id;
  double score = 0;
  double dense = 0;
  double kg = 0;
  int primary_section = -1;
  std::string primary_label;
};

struct RetrievalResult {
  std::string query_id;
  size_t k = 0;
  std::vector<Hit> hits;  // score non-increasing, ties by chunk_id
};

// Average over query CUIs of the best cosine to any chunk CUI. CUIs without
// a concept vector are ignored; 0 when either side ends up empty.
double KgProx(std::span<const std::string> query_cuis,
              std::span<const std::string> chunk_cuis,
              const kg::ConceptGraph& graph);

// Exhaustive cosine ranking. EmptyIndex, DimMismatch, ZeroVector.
absl::StatusOr<RetrievalResult> DenseRetrieve(const Query& query,
                                              const ChunkIndex& index, size_t k);

// beta * cosine + (1 - beta) * KgProx over every entry.
absl::StatusOr<RetrievalResult> HybridRetrieve(const Query& query,
                                               const ChunkIndex& index,
                                               const kg::ConceptGraph& graph,
                                               double beta, size_t k);

// Ranks precomputed scores: descending, then chunk id ascending.
std::vector<size_t> RankEntries(const ChunkIndex& index,
                                std::span<const double> scores, size_t k);

}  // namespace latechunk::retrieval

#endif  // LATECHUNK_RETRIEVAL_SEARCH_H_
