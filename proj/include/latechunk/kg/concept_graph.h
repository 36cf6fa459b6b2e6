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
#ifndef LATECHUNK_KG_CONCEPT_GRAPH_H_
#define LATECHUNK_KG_CONCEPT_GRAPH_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace latechunk::kg {

struct Concept {
  std::string cui;
  std::string name;
  std::vector<std::string> synonyms;
  std::vector<std::string> semantic_types;
  std::vector<double> embedding;
};

struct Relation {
  std::string from;
  std::string label;
  std::string to;
};

// Concepts keyed by CUI plus typed directed relations between them.
// Read-only once loaded.
class ConceptGraph {
 public:
  // Validates endpoints, embedding dims and finiteness.
  static absl::StatusOr<ConceptGraph> Create(std::vector<Concept> concepts,
                                             std::vector<Relation> relations);

  const Concept* Find(std::string_view cui) const;
  bool Contains(std::string_view cui) const { return Find(cui) != nullptr; }

  const std::map<std::string, Concept, std::less<>>& concepts() const {
    return concepts_;
  }
  const std::vector<Relation>& relations() const { return relations_; }
  // Indices into relations() touching the CUI in either direction.
  const std::vector<size_t>& IncidentRelations(std::string_view cui) const;

  size_t dim() const { return dim_; }
  size_t size() const { return concepts_.size(); }

 private:
  std::map<std::string, Concept, std::less<>> concepts_;
  std::vector<Relation> relations_;
  std::map<std::string, std::vector<size_t>, std::less<>> incident_;
  size_t dim_ = 0;
};

// TSV with a [concepts] and a [relations] section. Concept line:
// CUI, name, synonyms joined by '|', semantic types joined by '|',
// embedding joined by ','. Relation line: CUI, label, CUI. '#' starts a
// comment line.
absl::StatusOr<ConceptGraph> ParseConceptGraph(std::string_view text);
absl::StatusOr<ConceptGraph> ReadConceptGraph(const std::string& path);
std::string FormatConceptGraph(const ConceptGraph& graph);

// term -> CUI, in file order.
using Dictionary = std::vector<std::pair<std::string, std::string>>;

// TSV lines "term<TAB>CUI".
absl::StatusOr<Dictionary> ParseDictionary(std::string_view text);
absl::StatusOr<Dictionary> ReadDictionary(const std::string& path);
std::string FormatDictionary(const Dictionary& dictionary);

// Preferred names and synonyms of every concept.
Dictionary DictionaryFromGraph(const ConceptGraph& graph);

}  // namespace latechunk::kg

#endif  // LATECHUNK_KG_CONCEPT_GRAPH_H_
