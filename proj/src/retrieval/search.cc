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
#include "latechunk/retrieval/search.h"

#include <algorithm>
#include <numeric>

#include "fmt/format.h"
#include "latechunk/util/matrix.h"
#include "latechunk/util/status.h"

namespace latechunk::retrieval {

double KgProx(std::span<const std::string> query_cuis,
              std::span<const std::string> chunk_cuis,
              const kg::ConceptGraph& graph) {
  std::vector<const kg::Concept*> chunk;
  for (const std::string& c : chunk_cuis) {
    if (const kg::Concept* found = graph.Find(c)) chunk.push_back(found);
  }
  if (chunk.empty()) return 0.0;
  double total = 0;
  size_t known = 0;
  for (const std::string& q : query_cuis) {
    const kg::Concept* qc = graph.Find(q);
    if (qc == nullptr) continue;
    double best = -1.0;
    for (const kg::Concept* c : chunk) {
      best = std::max(best, Cosine(qc->embedding, c->embedding));
    }
    total += best;
    ++known;
  }
  return known == 0 ? 0.0 : total / static_cast<double>(known);
}

std::vector<size_t> RankEntries(const ChunkIndex& index,
                                std::span<const double> scores, size_t k) {
  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  const size_t top = std::min(k, order.size());
  auto better = [&](size_t a, size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return index.entry(a).chunk_id < index.entry(b).chunk_id;
  };
  std::partial_sort(order.begin(), order.begin() + top, order.end(), better);
  order.resize(top);
  return order;
}

namespace {

absl::StatusOr<std::vector<double>> DenseScores(const Query& query,
                                                const ChunkIndex& index) {
  if (index.empty()) return MakeError(ErrorKind::kEmptyIndex, "no entries");
  if (query.vector.size() != index.dim()) {
    return MakeError(ErrorKind::kDimMismatch,
                     fmt::format("query dim {} != index dim {}", query.vector.size(),
                                 index.dim()));
  }
  std::vector<double> q = query.vector;
  if (!NormalizeInPlace(q)) return MakeError(ErrorKind::kZeroVector, query.id);
  std::vector<double> scores(index.size());
  for (size_t i = 0; i < index.size(); ++i) scores[i] = Dot(q, index.entry(i).vector);
  return scores;
}

RetrievalResult Collect(const Query& query, const ChunkIndex& index, size_t k,
                        const std::vector<double>& scores,
                        const std::vector<double>& dense,
                        const std::vector<double>* kg) {
  RetrievalResult r;
  r.query_id = query.id;
  r.k = k;
  for (size_t i : RankEntries(index, scores, k)) {
    const IndexEntry& e = index.entry(i);
    r.hits.push_back({i, e.chunk_id, e.doc_id, scores[i], dense[i],
                      kg ? (*kg)[i] : 0.0, e.primary_section, e.primary_label});
  }
  return r;
}

}  // namespace

absl::StatusOr<RetrievalResult> DenseRetrieve(const Query& query,
                                              const ChunkIndex& index, size_t k) {
  LC_ASSIGN_OR_RETURN(std::vector<double> dense, DenseScores(query, index));
  return Collect(query, index, k, dense, dense, nullptr);
}

absl::StatusOr<RetrievalResult> HybridRetrieve(const Query& query,
                                               const ChunkIndex& index,
                                               const kg::ConceptGraph& graph,
                                               double beta, size_t k) {
  LC_ASSIGN_OR_RETURN(std::vector<double> dense, DenseScores(query, index));
  std::vector<double> kg(index.size()), scores(index.size());
  for (size_t i = 0; i < index.size(); ++i) {
    kg[i] = KgProx(query.cuis, index.entry(i).cuis, graph);
    scores[i] = beta * dense[i] + (1.0 - beta) * kg[i];
  }
  return Collect(query, index, k, scores, dense, &kg);
}

}  // namespace latechunk::retrieval
