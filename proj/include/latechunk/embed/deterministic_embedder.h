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
#ifndef LATECHUNK_EMBED_DETERMINISTIC_EMBEDDER_H_
#define LATECHUNK_EMBED_DETERMINISTIC_EMBEDDER_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latechunk/embed/provider.h"

namespace latechunk::embed {

struct DeterministicOptions {
  size_t dim = 64;
  // Each output row averages the hashed vectors of tokens within this many
  // positions on either side.
  size_t radius = 2;
  // Weight of the mean over the whole input sequence mixed into every row.
  // Stands in for the document-level context of a long-context encoder.
  double context_mix = 0.0;
  size_t max_window = 8192;
  uint64_t seed = 0;
};

// Hash-based contextual embedder for tests and offline runs. Output depends
// only on the token texts (case-folded), the options and nothing else.
class DeterministicEmbedder : public EmbeddingProvider {
 public:
  explicit DeterministicEmbedder(DeterministicOptions options = {});

  std::string_view name() const override { return "deterministic"; }
  size_t dim() const override { return options_.dim; }
  size_t max_window() const override { return options_.max_window; }
  bool deterministic() const override { return true; }
  bool thread_safe() const override { return true; }

  absl::StatusOr<Matrix> EmbedTokens(
      std::span<const std::string> tokens) override;

  // Unit vector assigned to a single token, before any context is applied.
  std::vector<double> TokenVector(std::string_view token) const;

  const DeterministicOptions& options() const { return options_; }

 private:
  DeterministicOptions options_;
};

// Unit vector derived from a string key; used for concept vectors too.
std::vector<double> HashedUnitVector(std::string_view key, size_t dim,
                                     uint64_t seed);

}  // namespace latechunk::embed

#endif  // LATECHUNK_EMBED_DETERMINISTIC_EMBEDDER_H_
