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
#include "latechunk/docgraph/structure_graph.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace latechunk::docgraph {

std::string_view NodeTypeName(NodeType type) {
  switch (type) {
    case NodeType::kSection: return "section";
    case NodeType::kSubsection: return "subsection";
    case NodeType::kParagraph: return "paragraph";
    case NodeType::kCitation: return "citation";
  }
  return "unknown";
}

std::string_view EdgeTypeName(EdgeType type) {
  switch (type) {
    case EdgeType::kHierarchical: return "hierarchical";
    case EdgeType::kSequential: return "sequential";
    case EdgeType::kCitation: return "citation";
    case EdgeType::kCrossReference: return "cross_reference";
  }
  return "unknown";
}

size_t StructureGraph::CountNodes(NodeType type) const {
  return std::count_if(nodes.begin(), nodes.end(),
                       [type](const GraphNode& n) { return n.type == type; });
}

size_t StructureGraph::CountEdges(EdgeType type) const {
  return std::count_if(edges.begin(), edges.end(),
                       [type](const GraphEdge& e) { return e.type == type; });
}

std::vector<GraphEdge> StructureGraph::EdgesOfType(EdgeType type) const {
  std::vector<GraphEdge> out;
  for (const GraphEdge& e : edges) {
    if (e.type == type) out.push_back(e);
  }
  return out;
}

StructureGraph BuildStructureGraph(const Document& doc) {
  StructureGraph g;
  g.section_nodes.resize(doc.sections.size(), -1);
  g.paragraph_nodes.resize(doc.paragraphs.size(), -1);

  for (size_t s = 0; s < doc.sections.size(); ++s) {
    const Section& section = doc.sections[s];
    g.section_nodes[s] = static_cast<int>(g.nodes.size());
    g.nodes.push_back({section.parent < 0 ? NodeType::kSection
                                          : NodeType::kSubsection,
                       section.span, section.label, static_cast<int>(s)});
  }
  for (size_t p = 0; p < doc.paragraphs.size(); ++p) {
    g.paragraph_nodes[p] = static_cast<int>(g.nodes.size());
    g.nodes.push_back({NodeType::kParagraph, doc.paragraphs[p].span,
                       doc.sections[doc.paragraphs[p].section].label,
                       static_cast<int>(p)});
  }
  std::map<std::string, int, std::less<>> citation_nodes;
  for (size_t r = 0; r < doc.references.size(); ++r) {
    citation_nodes[doc.references[r].id] = static_cast<int>(g.nodes.size());
    g.nodes.push_back({NodeType::kCitation, TokenSpan{}, doc.references[r].id,
                       static_cast<int>(r)});
  }

  auto chain = [&g](const std::vector<int>& ordered) {
    for (size_t i = 1; i < ordered.size(); ++i) {
      g.edges.push_back({EdgeType::kSequential, ordered[i - 1], ordered[i]});
    }
  };

  std::vector<int> top_nodes;
  for (int s : doc.TopLevelSections()) top_nodes.push_back(g.section_nodes[s]);
  chain(top_nodes);

  for (size_t s = 0; s < doc.sections.size(); ++s) {
    const Section& section = doc.sections[s];
    const int node = g.section_nodes[s];
    std::vector<int> subs;
    for (int sub : section.subsections) {
      g.edges.push_back({EdgeType::kHierarchical, node, g.section_nodes[sub]});
      subs.push_back(g.section_nodes[sub]);
    }
    std::vector<int> paras;
    for (int p : section.paragraphs) {
      g.edges.push_back({EdgeType::kHierarchical, node, g.paragraph_nodes[p]});
      paras.push_back(g.paragraph_nodes[p]);
    }
    chain(subs);
    chain(paras);
  }

  std::set<std::pair<int, int>> section_cites;
  for (size_t p = 0; p < doc.paragraphs.size(); ++p) {
    std::set<int> seen;
    for (const std::string& rid : doc.paragraphs[p].citations) {
      auto it = citation_nodes.find(rid);
      if (it == citation_nodes.end() || !seen.insert(it->second).second) continue;
      g.edges.push_back(
          {EdgeType::kCrossReference, g.paragraph_nodes[p], it->second});
      const int top = doc.sections[doc.paragraphs[p].section].top;
      section_cites.insert({g.section_nodes[top], it->second});
    }
  }
  for (const auto& [from, to] : section_cites) {
    g.edges.push_back({EdgeType::kCitation, from, to});
  }
  return g;
}

}  // namespace latechunk::docgraph
