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

#ifndef LATECHUNK_EVAL_METRICS_H_
#define LATECHUNK_EVAL_METRICS_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/docgraph/document.h"
#include "latechunk/retrieval/index.h"
#include "latechunk/retrieval/search.h"

namespace latechunk::eval {

inline constexpr size_t kDefaultKs[] = {1, 3, 5, 10, 20};

struct RankedHit {
  std::string doc_id;
  int section = -1;  // top-level section of the chunk's start token
  docgraph::SectionKind kind = docgraph::SectionKind::kOther;
};

// One evaluated query: its ranked list plus what the metrics need to judge
// it. Relevance is a match on the base document id, so condition-suffixed
// chunk ids count for the article they were sliced from.
struct EvalQuery {
  std::string query_id;
  std::string gold_doc_id;
  std::vector<docgraph::SectionKind> required;
  size_t source_sections = 0;  // top-level sections of the gold document
  std::vector<RankedHit> hits;
};

EvalQuery MakeEvalQuery(const retrieval::RetrievalResult& result,
                        const retrieval::ChunkIndex& index,
                        std::string gold_doc_id,
                        std::vector<docgraph::SectionKind> required,
                        size_t source_sections);

bool IsRelevant(const EvalQuery& query, const RankedHit& hit);

// Mean of 1/rank of the first relevant hit, 0 for queries without one.
// MissingGold if a query has no gold document.
absl::StatusOr<double> Mrr(std::span<const EvalQuery> queries);

// Fraction of queries with a relevant hit in the top k.
double RecallAtK(std::span<const EvalQuery> queries, size_t k);

// Distinct primary sections among the gold document's chunks in the top k.
size_t QuerySectionCoverage(const EvalQuery& query, size_t k);

// Mean of QuerySectionCoverage over all queries (0 for empty lists).
double SecCovAtK(std::span<const EvalQuery> queries, size_t k);

// Same, each count divided by the gold document's section count.
double SecCovNormalizedAtK(std::span<const EvalQuery> queries, size_t k);

// True if the gold document's chunks in the top k cover every required
// section kind and there are at least two of them.
bool QueryCrossSectionHit(const EvalQuery& query, size_t k);

double CsRecallAtK(std::span<const EvalQuery> queries, size_t k);

}  // namespace latechunk::eval

#endif  // LATECHUNK_EVAL_METRICS_H_
