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

#ifndef LATECHUNK_PIPELINE_CONFIG_H_
#define LATECHUNK_PIPELINE_CONFIG_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/chunkers/boundary.h"
#include "latechunk/docgraph/conditions.h"
#include "latechunk/embed/provider.h"

namespace latechunk::pipeline {

enum class Strategy {
  kNaive,       // fixed windows, each embedded on its own
  kSemantic,    // greedy sentence grouping, each group embedded on its own
  kLate,        // full-document encoding pooled per sentence
  kStructure,   // full-document encoding pooled per detected boundary
  kGralcKg,     // as kStructure over KG-infused tokens, entity-aware cuts
  kGralcGraph,  // kGralcKg chunks searched with the hybrid score
};

inline constexpr Strategy kAllStrategies[] = {
    Strategy::kNaive,     Strategy::kSemantic, Strategy::kLate,
    Strategy::kStructure, Strategy::kGralcKg,  Strategy::kGralcGraph};

std::string_view StrategyName(Strategy s);
std::optional<Strategy> ParseStrategy(std::string_view name);

struct ProviderConfig {
  enum class Kind { kDeterministic, kRemote };
  Kind kind = Kind::kDeterministic;
  // Deterministic embedder.
  size_t dim = 64;
  size_t radius = 2;
  double context_mix = 0.0;
  size_t max_window = 8192;
  // Remote provider; GRALC_EMBED_ENDPOINT overrides the endpoint.
  std::string endpoint;
  std::string model;
  int timeout_seconds = 120;
};

struct PipelineConfig {
  std::string corpus_dir;
  std::string concept_graph;
  std::string dictionary;
  std::string gat_params;  // empty: seeded default parameters
  std::vector<Strategy> strategies = {std::begin(kAllStrategies),
                                      std::end(kAllStrategies)};
  std::vector<docgraph::Condition> conditions = {
      docgraph::Condition::kIntroduction, docgraph::Condition::kPartial,
      docgraph::Condition::kFullText};
  ProviderConfig provider;
  size_t encoder_window = 8192;
  size_t encoder_overlap = 512;
  chunkers::BoundaryWeights boundary;
  double lambda = 0.1;
  double beta = 0.7;
  size_t naive_size = 256;
  size_t naive_overlap = 32;
  double semantic_threshold = 0.75;
  std::vector<size_t> ks = {1, 3, 5, 10, 20};
  size_t max_per_template = 1;
  uint64_t seed = 0;
  size_t workers = 1;
  std::string out_dir = "out";
  std::string timestamp;  // copied into report metadata verbatim

  // Largest entry of ks; retrieval depth.
  size_t max_k() const;
};

// Parses a JSON config. Unknown keys at any level are rejected. Relative
// paths resolve against base_dir; corpus, concept graph, dictionary and
// parameter paths must exist. InvalidConfig on any violation.
absl::StatusOr<PipelineConfig> ParseConfig(std::string_view json_text,
                                           const std::string& base_dir);
absl::StatusOr<PipelineConfig> LoadConfig(const std::string& path);

// Canonical JSON of the settings that affect results. out_dir and workers
// are left out.
std::string CanonicalConfig(const PipelineConfig& config);
std::string ConfigHash(const PipelineConfig& config);

// Builds the configured embedding provider, wrapped for concurrent use.
absl::StatusOr<std::shared_ptr<embed::EmbeddingProvider>> MakeProvider(
    const PipelineConfig& config);

}  // namespace latechunk::pipeline

#endif  // LATECHUNK_PIPELINE_CONFIG_H_
