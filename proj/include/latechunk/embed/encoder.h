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
#ifndef LATECHUNK_EMBED_ENCODER_H_
#define LATECHUNK_EMBED_ENCODER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/docgraph/document.h"
#include "latechunk/embed/provider.h"

namespace latechunk::embed {

inline constexpr size_t kDefaultWindow = 8192;
inline constexpr size_t kDefaultOverlap = 512;

// Windows [s, min(s + window, n)) with s advancing by window - overlap until
// one reaches n. A single window when n <= window.
std::vector<docgraph::TokenSpan> SlidingWindows(size_t n, size_t window,
                                                size_t overlap);

// Unnormalized weight of a token inside one window: linear in its distance to
// the window center, max(0, 1 - |i - c| / (window / 2)).
double WindowWeight(size_t token, const docgraph::TokenSpan& span,
                    size_t window);

// Encodes a token sequence, windowing when it is longer than `window`.
// Tokens covered by several windows get the convex combination of their
// window vectors under WindowWeight.
absl::StatusOr<Matrix> EncodeTokens(std::span<const std::string> tokens,
                                    EmbeddingProvider& provider, size_t window,
                                    size_t overlap);

absl::StatusOr<TokenEmbeddings> EncodeDocument(const docgraph::Document& doc,
                                               EmbeddingProvider& provider,
                                               size_t window = kDefaultWindow,
                                               size_t overlap = kDefaultOverlap);

// Tokenizes the query, mean-pools the provider rows and L2-normalizes.
absl::StatusOr<std::vector<double>> EmbedQuery(std::string_view text,
                                               EmbeddingProvider& provider);

// Token texts of a document span.
std::vector<std::string> TokenTexts(const docgraph::Document& doc,
                                    docgraph::TokenSpan span);

}  // namespace latechunk::embed

#endif  // LATECHUNK_EMBED_ENCODER_H_
