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
#ifndef LATECHUNK_DOCGRAPH_JATS_H_
#define LATECHUNK_DOCGRAPH_JATS_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "latechunk/docgraph/document.h"

namespace latechunk::docgraph {

struct JatsOptions {
  // Used when the article carries no pmc/pmid/doi article-id.
  std::string fallback_id;
};

struct JatsDiagnostics {
  size_t dangling_citations = 0;  // xref rids with no bibliography entry
  size_t skipped_elements = 0;    // tables, figures, formulas
};

// Parses a JATS article. Sections, paragraphs and bibliography citations are
// taken from <body>, <abstract> and <ref-list>; tables, figures and formulas
// are skipped and do not count toward the word count.
absl::StatusOr<Document> ParseJats(std::string_view xml,
                                   const JatsOptions& options = {},
                                   JatsDiagnostics* diagnostics = nullptr);

}  // namespace latechunk::docgraph

#endif  // LATECHUNK_DOCGRAPH_JATS_H_
