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
#include "latechunk/kg/fusion.h"

#include "fmt/format.h"
#include "latechunk/util/status.h"

namespace latechunk::kg {

absl::StatusOr<embed::TokenEmbeddings> FuseTokens(
    const embed::TokenEmbeddings& tokens, std::span<const EntityMention> mentions,
    const std::map<std::string, std::vector<double>, std::less<>>& enriched,
    const GatParams& params) {
  if (tokens.enriched) {
    return MakeError(ErrorKind::kAlreadyEnriched,
                     fmt::format("document {}", tokens.doc_id));
  }
  embed::TokenEmbeddings out = tokens;
  out.enriched = true;
  if (mentions.empty()) return out;
  if (params.d() != tokens.dim()) {
    return MakeError(ErrorKind::kDimMismatch,
                     fmt::format("MLP output {} != token dim {}", params.d(),
                                 tokens.dim()));
  }
  std::map<std::string, std::vector<double>, std::less<>> projected;
  for (const EntityMention& m : mentions) {
    auto it = enriched.find(m.cui);
    if (it == enriched.end()) continue;
    if (m.last >= tokens.size()) {
      return MakeError(ErrorKind::kEmptySpan,
                       fmt::format("mention {} ends past token {}", m.cui,
                                   tokens.size()));
    }
    auto p = projected.find(m.cui);
    if (p == projected.end()) {
      if (it->second.size() != params.d_prime()) {
        return MakeError(ErrorKind::kDimMismatch,
                         fmt::format("enriched {} has dim {}", m.cui, it->second.size()));
      }
      p = projected.emplace(m.cui, ApplyMlp(params, it->second)).first;
    }
    for (size_t i = m.first; i <= m.last; ++i) {
      std::span<double> row = out.vectors.Row(i);
      for (size_t c = 0; c < row.size(); ++c) row[c] += params.lambda * p->second[c];
    }
  }
  return out;
}

absl::StatusOr<InfusionResult> InfuseDocument(const docgraph::Document& doc,
                                              const embed::TokenEmbeddings& tokens,
                                              const EntityLinker& linker,
                                              const ConceptGraph& graph,
                                              const GatParams& params) {
  InfusionResult r;
  r.mentions = linker.Link(doc);
  r.subgraph = ExtractSubgraph(r.mentions, graph);
  LC_ASSIGN_OR_RETURN(r.gat, GatForward(r.subgraph, graph, params));
  LC_ASSIGN_OR_RETURN(r.tokens,
                      FuseTokens(tokens, r.mentions, r.gat.enriched, params));
  return r;
}

}  // namespace latechunk::kg
