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
#ifndef LATECHUNK_KG_FUSION_H_
#define LATECHUNK_KG_FUSION_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/docgraph/document.h"
#include "latechunk/embed/provider.h"
#include "latechunk/kg/concept_graph.h"
#include "latechunk/kg/gat.h"
#include "latechunk/kg/linker.h"
#include "latechunk/kg/subgraph.h"

namespace latechunk::kg {

// h'_i = h_i + lambda * MLP(u'_j) for every token i inside a mention whose CUI
// has an enriched vector. Other rows are copied unchanged.
absl::StatusOr<embed::TokenEmbeddings> FuseTokens(
    const embed::TokenEmbeddings& tokens, std::span<const EntityMention> mentions,
    const std::map<std::string, std::vector<double>, std::less<>>& enriched,
    const GatParams& params);

struct InfusionResult {
  std::vector<EntityMention> mentions;
  KnowledgeSubgraph subgraph;
  GatOutput gat;
  embed::TokenEmbeddings tokens;
};

// Link, extract the subgraph, run the attention layer and fuse.
absl::StatusOr<InfusionResult> InfuseDocument(const docgraph::Document& doc,
                                              const embed::TokenEmbeddings& tokens,
                                              const EntityLinker& linker,
                                              const ConceptGraph& graph,
                                              const GatParams& params);

}  // namespace latechunk::kg

#endif  // LATECHUNK_KG_FUSION_H_
