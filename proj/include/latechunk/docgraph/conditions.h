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
#ifndef LATECHUNK_DOCGRAPH_CONDITIONS_H_
#define LATECHUNK_DOCGRAPH_CONDITIONS_H_

#include <optional>
#include <string_view>

#include "absl/status/statusor.h"
#include "latechunk/docgraph/document.h"

namespace latechunk::docgraph {

enum class Condition { kAbstract, kIntroduction, kPartial, kFullText };

std::string_view ConditionName(Condition condition);
std::optional<Condition> ParseCondition(std::string_view name);

inline constexpr size_t kImradMinWords = 1000;

// True iff the article has Introduction, Methods, Results and Discussion
// sections and at least kImradMinWords body words.
bool ImradFilter(const Document& doc);

// Restricts the document to the condition's sections:
//   abstract      the abstract only
//   introduction  Introduction sections
//   partial       Introduction and Methods sections
//   fulltext      every body section
// The result's doc_id is "<source_id>:<condition>".
absl::StatusOr<Document> ExtractCondition(const Document& doc,
                                          Condition condition);

}  // namespace latechunk::docgraph

#endif  // LATECHUNK_DOCGRAPH_CONDITIONS_H_
