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

#include "latechunk/eval/metrics.h"

#include <algorithm>
#include <set>

#include "latechunk/util/status.h"

namespace latechunk::eval {

EvalQuery MakeEvalQuery(const retrieval::RetrievalResult& result,
                        const retrieval::ChunkIndex& index,
                        std::string gold_doc_id,
                        std::vector<docgraph::SectionKind> required,
                        size_t source_sections) {
  EvalQuery q;
  q.query_id = result.query_id;
  q.gold_doc_id = std::move(gold_doc_id);
  q.required = std::move(required);
  q.source_sections = source_sections;
  for (const retrieval::Hit& h : result.hits) {
    const retrieval::IndexEntry& e = index.entries()[h.entry];
    q.hits.push_back({e.doc_id, e.primary_section, e.primary_kind});
  }
  return q;
}

bool IsRelevant(const EvalQuery& query, const RankedHit& hit) {
  return docgraph::BaseDocId(hit.doc_id) ==
         docgraph::BaseDocId(query.gold_doc_id);
}

absl::StatusOr<double> Mrr(std::span<const EvalQuery> queries) {
  if (queries.empty()) return 0.0;
  double sum = 0;
  for (const EvalQuery& q : queries) {
    if (q.gold_doc_id.empty()) {
      return MakeError(ErrorKind::kMissingGold,
                       "query " + q.query_id + " has no gold document");
    }
    for (size_t r = 0; r < q.hits.size(); ++r) {
      if (IsRelevant(q, q.hits[r])) {
        sum += 1.0 / static_cast<double>(r + 1);
        break;
      }
    }
  }
  return sum / static_cast<double>(queries.size());
}

double RecallAtK(std::span<const EvalQuery> queries, size_t k) {
  if (queries.empty()) return 0;
  size_t hits = 0;
  for (const EvalQuery& q : queries) {
    size_t n = std::min(k, q.hits.size());
    for (size_t r = 0; r < n; ++r) {
      if (IsRelevant(q, q.hits[r])) {
        ++hits;
        break;
      }
    }
  }
  return static_cast<double>(hits) / static_cast<double>(queries.size());
}

size_t QuerySectionCoverage(const EvalQuery& query, size_t k) {
  std::set<int> sections;
  size_t n = std::min(k, query.hits.size());
  for (size_t r = 0; r < n; ++r) {
    if (IsRelevant(query, query.hits[r])) {
      sections.insert(query.hits[r].section);
    }
  }
  return sections.size();
}

double SecCovAtK(std::span<const EvalQuery> queries, size_t k) {
  if (queries.empty()) return 0;
  double sum = 0;
  for (const EvalQuery& q : queries) sum += QuerySectionCoverage(q, k);
  return sum / static_cast<double>(queries.size());
}

double SecCovNormalizedAtK(std::span<const EvalQuery> queries, size_t k) {
  if (queries.empty()) return 0;
  double sum = 0;
  for (const EvalQuery& q : queries) {
    if (q.source_sections == 0) continue;
    sum += static_cast<double>(QuerySectionCoverage(q, k)) /
           static_cast<double>(q.source_sections);
  }
  return sum / static_cast<double>(queries.size());
}

bool QueryCrossSectionHit(const EvalQuery& query, size_t k) {
  std::set<docgraph::SectionKind> required(query.required.begin(),
                                           query.required.end());
  if (required.size() < 2) return false;
  size_t n = std::min(k, query.hits.size());
  for (size_t r = 0; r < n; ++r) {
    if (IsRelevant(query, query.hits[r])) required.erase(query.hits[r].kind);
  }
  return required.empty();
}

double CsRecallAtK(std::span<const EvalQuery> queries, size_t k) {
  if (queries.empty()) return 0;
  size_t hits = 0;
  for (const EvalQuery& q : queries) hits += QueryCrossSectionHit(q, k);
  return static_cast<double>(hits) / static_cast<double>(queries.size());
}

}  // namespace latechunk::eval
