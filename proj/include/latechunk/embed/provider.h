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
#ifndef LATECHUNK_EMBED_PROVIDER_H_
#define LATECHUNK_EMBED_PROVIDER_H_

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "latechunk/util/matrix.h"

namespace latechunk::embed {

// Produces one contextual vector per input token. Implementations may
// re-tokenize internally but must return rows aligned with the given tokens.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::string_view name() const = 0;
  virtual size_t dim() const = 0;
  // Longest token sequence accepted by a single EmbedTokens call.
  virtual size_t max_window() const = 0;
  virtual bool deterministic() const = 0;
  virtual bool thread_safe() const = 0;

  virtual absl::StatusOr<Matrix> EmbedTokens(
      std::span<const std::string> tokens) = 0;
};

// Serializes calls into a provider that is not safe for concurrent use.
class SerializedProvider : public EmbeddingProvider {
 public:
  explicit SerializedProvider(std::unique_ptr<EmbeddingProvider> inner)
      : inner_(std::move(inner)) {}

  std::string_view name() const override { return inner_->name(); }
  size_t dim() const override { return inner_->dim(); }
  size_t max_window() const override { return inner_->max_window(); }
  bool deterministic() const override { return inner_->deterministic(); }
  bool thread_safe() const override { return true; }

  absl::StatusOr<Matrix> EmbedTokens(
      std::span<const std::string> tokens) override {
    std::lock_guard<std::mutex> lock(mu_);
    return inner_->EmbedTokens(tokens);
  }

 private:
  std::unique_ptr<EmbeddingProvider> inner_;
  std::mutex mu_;
};

// Wraps the provider in SerializedProvider when it is not thread safe.
std::unique_ptr<EmbeddingProvider> MakeConcurrent(
    std::unique_ptr<EmbeddingProvider> provider);

// Per-token embeddings of one document, rows aligned with its token stream.
struct TokenEmbeddings {
  std::string doc_id;
  Matrix vectors;
  bool enriched = false;

  size_t dim() const { return vectors.cols(); }
  size_t size() const { return vectors.rows(); }
};

}  // namespace latechunk::embed

#endif  // LATECHUNK_EMBED_PROVIDER_H_
