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
#ifndef LATECHUNK_EMBED_REMOTE_PROVIDER_H_
#define LATECHUNK_EMBED_REMOTE_PROVIDER_H_

#include <string>
#include <vector>

#include "latechunk/embed/protocol.h"
#include "latechunk/embed/provider.h"

namespace latechunk::embed {

inline constexpr char kEndpointEnvVar[] = "GRALC_EMBED_ENDPOINT";

struct RemoteOptions {
  // Scheme, host and port, e.g. "http://127.0.0.1:8765".
  std::string endpoint;
  std::string model;
  size_t dim = 384;
  size_t max_window = 8192;
  int timeout_seconds = 120;
};

// Returns the env override when set and non-empty, otherwise `configured`.
std::string ResolveEndpoint(const std::string& configured);

// Client for the embedding service. Each call opens its own connection, so
// concurrent use is safe.
class RemoteProvider : public EmbeddingProvider {
 public:
  explicit RemoteProvider(RemoteOptions options);

  std::string_view name() const override { return "remote"; }
  size_t dim() const override { return options_.dim; }
  size_t max_window() const override { return options_.max_window; }
  bool deterministic() const override { return false; }
  bool thread_safe() const override { return true; }

  absl::StatusOr<Matrix> EmbedTokens(
      std::span<const std::string> tokens) override;

  // One pooled vector per text (mode=query).
  absl::StatusOr<Matrix> EmbedPooled(const std::vector<std::string>& texts);
  // One vector per CUI (mode=concepts).
  absl::StatusOr<Matrix> EmbedConcepts(const std::vector<std::string>& cuis);

  absl::StatusOr<HealthResponse> Health();

 private:
  absl::StatusOr<EmbedResponse> Post(const EmbedRequest& request);

  RemoteOptions options_;
};

}  // namespace latechunk::embed

#endif  // LATECHUNK_EMBED_REMOTE_PROVIDER_H_
