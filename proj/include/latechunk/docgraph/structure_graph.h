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
#ifndef LATECHUNK_DOCGRAPH_STRUCTURE_GRAPH_H_
#define LATECHUNK_DOCGRAPH_STRUCTURE_GRAPH_H_

#include <string>
#include <string_view>
#include <vector>

#include "latechunk/docgraph/document.h"

namespace latechunk::docgraph {

enum class NodeType { kSection, kSubsection, kParagraph, kCitation };
enum class EdgeType { kHierarchical, kSequential, kCitation, kCrossReference };

std::string_view NodeTypeName(NodeType type);
std::string_view EdgeTypeName(EdgeType type);

struct GraphNode {
  NodeType type = NodeType::kSection;
  TokenSpan span;        // empty for citation nodes
  std::string label;     // section label, or bibliography id
  int source = -1;       // index of the section, paragraph or reference
};

struct GraphEdge {
  EdgeType type = EdgeType::kHierarchical;
  int from = -1;
  int to = -1;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Multi-granularity document graph.
//
// hierarchical   section -> subsection, (sub)section -> its own paragraphs
// sequential     consecutive siblings: top-level sections, subsections of one
//                parent, paragraphs of one section
// cross_reference paragraph -> citation, once per cited entry
// citation       top-level section -> citation, once per cited entry
struct StructureGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<int> section_nodes;    // by Document section index
  std::vector<int> paragraph_nodes;  // by Document paragraph index

  size_t CountNodes(NodeType type) const;
  size_t CountEdges(EdgeType type) const;
  std::vector<GraphEdge> EdgesOfType(EdgeType type) const;
};

StructureGraph BuildStructureGraph(const Document& doc);

}  // namespace latechunk::docgraph

#endif  // LATECHUNK_DOCGRAPH_STRUCTURE_GRAPH_H_
