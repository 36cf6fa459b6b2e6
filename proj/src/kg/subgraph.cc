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
#include "latechunk/kg/subgraph.h"

#include <algorithm>
#include <set>

namespace latechunk::kg {

int KnowledgeSubgraph::IndexOf(std::string_view cui) const {
  auto it = index.find(cui);
  return it == index.end() ? -1 : static_cast<int>(it->second);
}

KnowledgeSubgraph ExtractSubgraph(std::span<const EntityMention> mentions,
                                  const ConceptGraph& graph) {
  KnowledgeSubgraph sub;
  std::set<std::string> seeds;
  std::set<std::string> unknown;
  for (const EntityMention& m : mentions) {
    if (graph.Contains(m.cui)) {
      seeds.insert(m.cui);
    } else {
      ++sub.unknown_mentions;
      unknown.insert(m.cui);
    }
  }
  sub.unknown_cuis.assign(unknown.begin(), unknown.end());

  std::set<size_t> relation_ids;
  std::set<std::string> members = seeds;
  for (const std::string& cui : seeds) {
    for (size_t r : graph.IncidentRelations(cui)) {
      relation_ids.insert(r);
      members.insert(graph.relations()[r].from);
      members.insert(graph.relations()[r].to);
    }
  }
  for (const std::string& cui : members) {
    sub.index.emplace(cui, sub.nodes.size());
    sub.nodes.push_back(cui);
    sub.is_seed.push_back(seeds.contains(cui));
    sub.semantic_types.push_back(graph.Find(cui)->semantic_types);
  }
  for (size_t r : relation_ids) {
    const Relation& rel = graph.relations()[r];
    sub.edges.push_back({sub.index.at(rel.from), sub.index.at(rel.to), rel.label});
  }
  return sub;
}

std::vector<std::vector<size_t>> Neighborhoods(const KnowledgeSubgraph& sub) {
  std::vector<std::vector<size_t>> out(sub.size());
  for (size_t j = 0; j < sub.size(); ++j) out[j].push_back(j);
  for (const SubgraphEdge& e : sub.edges) {
    out[e.from].push_back(e.to);
    out[e.to].push_back(e.from);
  }
  for (std::vector<size_t>& n : out) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  return out;
}

}  // namespace latechunk::kg
