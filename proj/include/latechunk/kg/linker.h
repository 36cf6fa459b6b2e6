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
#ifndef LATECHUNK_KG_LINKER_H_
#define LATECHUNK_KG_LINKER_H_

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "latechunk/docgraph/document.h"
#include "latechunk/kg/concept_graph.h"

namespace latechunk::kg {

// A dictionary hit over tokens [first, last], both inclusive.
struct EntityMention {
  std::string cui;
  size_t first = 0;
  size_t last = 0;
  std::string surface;
  std::string term;

  docgraph::TokenSpan span() const { return {first, last + 1}; }
  // True if the span straddles the boundary placed before token i.
  bool Crosses(size_t i) const { return first < i && i <= last; }
};

// Greedy left-to-right longest-match linker over normalized tokens.
// Terms are lowercased with punctuation removed; tokens that normalize to
// nothing (pure punctuation) never take part in a match.
class EntityLinker {
 public:
  explicit EntityLinker(const Dictionary& dictionary);

  std::vector<EntityMention> Link(std::span<const std::string> tokens) const;
  std::vector<EntityMention> Link(const docgraph::Document& doc) const;

  size_t term_count() const { return term_count_; }

 private:
  struct Node {
    std::unordered_map<std::string, size_t> next;
    int entry = -1;  // index into entries_
  };
  struct Entry {
    std::string term;
    std::string cui;
  };

  std::vector<Node> nodes_;
  std::vector<Entry> entries_;
  size_t term_count_ = 0;
};

}  // namespace latechunk::kg

#endif  // LATECHUNK_KG_LINKER_H_
