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
#ifndef LATECHUNK_DOCGRAPH_JSON_IO_H_
#define LATECHUNK_DOCGRAPH_JSON_IO_H_

#include "json.hpp"
#include "latechunk/docgraph/document.h"
#include "latechunk/docgraph/structure_graph.h"

namespace latechunk::docgraph {

inline constexpr int kDocumentJsonSchemaVersion = 1;

// Inspection dumps. Field names follow the domain types; sections are nested
// under their parents.
nlohmann::json DocumentToJson(const Document& doc);
nlohmann::json StructureGraphToJson(const StructureGraph& graph);

}  // namespace latechunk::docgraph

#endif  // LATECHUNK_DOCGRAPH_JSON_IO_H_
