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
#include "latechunk/kg/linker.h"

#include <algorithm>
#include <sstream>

#include "latechunk/util/text.h"

namespace latechunk::kg {

EntityLinker::EntityLinker(const Dictionary& dictionary) : nodes_(1) {
  for (const auto& [term, cui] : dictionary) {
    const std::string normalized = NormalizeTerm(term);
    if (normalized.empty()) continue;
    std::istringstream words(normalized);
    size_t node = 0;
    for (std::string w; words >> w;) {
      auto it = nodes_[node].next.find(w);
      if (it == nodes_[node].next.end()) {
        nodes_.emplace_back();
        it = nodes_[node].next.emplace(w, nodes_.size() - 1).first;
      }
      node = it->second;
    }
    // First entry for a term wins.
    if (nodes_[node].entry < 0) {
      nodes_[node].entry = static_cast<int>(entries_.size());
      entries_.push_back({term, cui});
      ++term_count_;
    }
  }
}

std::vector<EntityMention> EntityLinker::Link(
    std::span<const std::string> tokens) const {
  std::vector<std::string> norm;
  norm.reserve(tokens.size());
  for (const std::string& t : tokens) norm.push_back(NormalizeWord(t));

  std::vector<EntityMention> out;
  size_t i = 0;
  while (i < norm.size()) {
    size_t node = 0;
    int best_entry = -1;
    size_t best_last = i;
    for (size_t j = i; j < norm.size() && !norm[j].empty(); ++j) {
      auto it = nodes_[node].next.find(norm[j]);
      if (it == nodes_[node].next.end()) break;
      node = it->second;
      if (nodes_[node].entry >= 0) {
        best_entry = nodes_[node].entry;
        best_last = j;
      }
    }
    if (best_entry < 0) {
      ++i;
      continue;
    }
    EntityMention m;
    m.cui = entries_[best_entry].cui;
    m.term = entries_[best_entry].term;
    m.first = i;
    m.last = best_last;
    for (size_t k = i; k <= best_last; ++k) {
      if (k > i) m.surface += ' ';
      m.surface += tokens[k];
    }
    out.push_back(std::move(m));
    i = best_last + 1;
  }
  return out;
}

std::vector<EntityMention> EntityLinker::Link(
    const docgraph::Document& doc) const {
  // Mentions never span two paragraphs.
  std::vector<EntityMention> out;
  std::vector<std::string> texts;
  for (const docgraph::Paragraph& p : doc.paragraphs) {
    texts.clear();
    for (size_t t = p.span.begin; t < p.span.end; ++t) {
      texts.push_back(doc.tokens[t].text);
    }
    for (EntityMention& m : Link(texts)) {
      m.first += p.span.begin;
      m.last += p.span.begin;
      out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const EntityMention& a, const EntityMention& b) {
              return a.first < b.first;
            });
  return out;
}

}  // namespace latechunk::kg
