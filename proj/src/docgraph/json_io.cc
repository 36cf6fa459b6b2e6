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
#include "latechunk/docgraph/json_io.h"

#include <string>

namespace latechunk::docgraph {
namespace {

nlohmann::json SpanJson(const TokenSpan& span) {
  return nlohmann::json::array({span.begin, span.end});
}

nlohmann::json SectionJson(const Document& doc, int s) {
  const Section& section = doc.sections[s];
  nlohmann::json out;
  out["label"] = section.label;
  out["kind"] = std::string(SectionKindName(section.kind));
  out["span"] = SpanJson(section.span);
  out["word_count"] = section.word_count;
  nlohmann::json paragraphs = nlohmann::json::array();
  for (int p : section.paragraphs) {
    nlohmann::json para;
    para["span"] = SpanJson(doc.paragraphs[p].span);
    para["citations"] = doc.paragraphs[p].citations;
    para["word_count"] = doc.paragraphs[p].word_count;
    paragraphs.push_back(std::move(para));
  }
  out["paragraphs"] = std::move(paragraphs);
  nlohmann::json subsections = nlohmann::json::array();
  for (int sub : section.subsections) subsections.push_back(SectionJson(doc, sub));
  out["subsections"] = std::move(subsections);
  return out;
}

}  // namespace

nlohmann::json DocumentToJson(const Document& doc) {
  nlohmann::json out;
  out["schema_version"] = kDocumentJsonSchemaVersion;
  out["doc_id"] = doc.doc_id;
  out["source_id"] = doc.source_id;
  out["title"] = doc.title;
  out["word_count"] = doc.word_count;
  nlohmann::json sections = nlohmann::json::array();
  for (int s : doc.TopLevelSections()) sections.push_back(SectionJson(doc, s));
  out["sections"] = std::move(sections);
  nlohmann::json tokens = nlohmann::json::array();
  for (size_t t = 0; t < doc.tokens.size(); ++t) {
    nlohmann::json path = nlohmann::json::array();
    for (int s : doc.SectionPath(t)) path.push_back(doc.sections[s].label);
    tokens.push_back({{"text", doc.tokens[t].text},
                      {"offset", doc.tokens[t].offset},
                      {"section_path", std::move(path)}});
  }
  out["token_stream"] = std::move(tokens);
  nlohmann::json refs = nlohmann::json::array();
  for (const Reference& r : doc.references) {
    refs.push_back({{"id", r.id},
                    {"first_author", r.first_author},
                    {"year", r.year},
                    {"et_al", r.et_al}});
  }
  out["references"] = std::move(refs);
  return out;
}

nlohmann::json StructureGraphToJson(const StructureGraph& graph) {
  nlohmann::json out;
  out["schema_version"] = kDocumentJsonSchemaVersion;
  nlohmann::json nodes = nlohmann::json::array();
  for (size_t i = 0; i < graph.nodes.size(); ++i) {
    const GraphNode& n = graph.nodes[i];
    nodes.push_back({{"id", i},
                     {"type", std::string(NodeTypeName(n.type))},
                     {"span", SpanJson(n.span)},
                     {"label", n.label}});
  }
  out["nodes"] = std::move(nodes);
  nlohmann::json edges = nlohmann::json::array();
  for (const GraphEdge& e : graph.edges) {
    edges.push_back({{"type", std::string(EdgeTypeName(e.type))},
                     {"from", e.from},
                     {"to", e.to}});
  }
  out["edges"] = std::move(edges);
  return out;
}

}  // namespace latechunk::docgraph
