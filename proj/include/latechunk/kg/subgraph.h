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
#ifndef LATECHUNK_KG_SUBGRAPH_H_
#define LATECHUNK_KG_SUBGRAPH_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "latechunk/kg/concept_graph.h"
#include "latechunk/kg/linker.h"

namespace latechunk::kg {

struct SubgraphEdge {
  size_t from = 0;
  size_t to = 0;
  std::string label;
};

// Mentioned concepts (seeds), their 1-hop neighbors, and every relation that
// touches a seed. Nodes are sorted by CUI.
struct KnowledgeSubgraph {
  std::vector<std::string> nodes;
  std::vector<bool> is_seed;
  std::vector<std::vector<std::string>> semantic_types;
  std::vector<SubgraphEdge> edges;
  std::map<std::string, size_t, std::less<>> index;

  // Mentions whose CUI is missing from the concept graph, and their CUIs.
  size_t unknown_mentions = 0;
  std::vector<std::string> unknown_cuis;

  size_t size() const { return nodes.size(); }
  bool empty() const { return nodes.empty(); }
  // -1 when absent.
  int IndexOf(std::string_view cui) const;
};

KnowledgeSubgraph ExtractSubgraph(std::span<const EntityMention> mentions,
                                  const ConceptGraph& graph);

// Undirected neighborhoods including the node itself, sorted ascending.
std::vector<std::vector<size_t>> Neighborhoods(const KnowledgeSubgraph& sub);

}  // namespace latechunk::kg

#endif  // LATECHUNK_KG_SUBGRAPH_H_
