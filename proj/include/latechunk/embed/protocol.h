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
// Wire types for the embedding service: POST /embed and GET /health.
#ifndef LATECHUNK_EMBED_PROTOCOL_H_
#define LATECHUNK_EMBED_PROTOCOL_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace latechunk::embed {

enum class EmbedMode { kTokens, kQuery, kConcepts };

std::string_view EmbedModeName(EmbedMode mode);
absl::StatusOr<EmbedMode> ParseEmbedMode(std::string_view name);

struct EmbedRequest {
  EmbedMode mode = EmbedMode::kTokens;
  std::string model;
  // One entry per item. For kTokens the item text is the space-joined token
  // stream and `tokens` carries the engine tokens for alignment.
  std::vector<std::string> texts;
  std::vector<std::vector<std::string>> tokens;
  std::vector<std::string> cuis;

  size_t item_count() const {
    return mode == EmbedMode::kConcepts ? cuis.size() : texts.size();
  }
};

struct EmbedItem {
  std::vector<std::vector<double>> vectors;
  // offsets[k] is the engine token index vectors[k] belongs to. Empty for
  // pooled modes.
  std::vector<size_t> offsets;
};

struct EmbedResponse {
  size_t dim = 0;
  std::string model;
  std::vector<EmbedItem> items;
};

struct HealthResponse {
  std::string status;
  std::vector<std::string> models;
  std::vector<size_t> dims;
};

std::string SerializeRequest(const EmbedRequest& request);
absl::StatusOr<EmbedRequest> ParseRequest(std::string_view body);
std::string SerializeResponse(const EmbedResponse& response);
absl::StatusOr<EmbedResponse> ParseResponse(std::string_view body);
std::string SerializeHealth(const HealthResponse& health);
absl::StatusOr<HealthResponse> ParseHealth(std::string_view body);

// Checks a response against the request it answers: item count, dim, finite
// values, and for kTokens that offsets cover 0..n-1 exactly once per item.
absl::Status ValidateResponse(const EmbedRequest& request,
                              const EmbedResponse& response,
                              size_t expected_dim);

}  // namespace latechunk::embed

#endif  // LATECHUNK_EMBED_PROTOCOL_H_
