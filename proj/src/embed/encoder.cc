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
#include "latechunk/embed/encoder.h"

#include <cmath>
#include <utility>

#include "fmt/format.h"
#include "latechunk/util/status.h"
#include "latechunk/util/text.h"

namespace latechunk::embed {

using docgraph::TokenSpan;

std::unique_ptr<EmbeddingProvider> MakeConcurrent(
    std::unique_ptr<EmbeddingProvider> provider) {
  if (provider->thread_safe()) return provider;
  return std::make_unique<SerializedProvider>(std::move(provider));
}

namespace {

absl::StatusOr<Matrix> CallProvider(EmbeddingProvider& provider,
                                    std::span<const std::string> tokens) {
  absl::StatusOr<Matrix> out = provider.EmbedTokens(tokens);
  if (!out.ok()) {
    if (HasErrorKind(out.status(), ErrorKind::kProviderFailure)) return out;
    return MakeError(ErrorKind::kProviderFailure,
                     fmt::format("{}: {}", provider.name(), std::string(out.status().message())));
  }
  if (out->rows() != tokens.size() || out->cols() != provider.dim()) {
    return MakeError(ErrorKind::kProviderFailure,
                     fmt::format("{} returned {}x{} for {} tokens (dim {})",
                                 provider.name(), out->rows(), out->cols(),
                                 tokens.size(), provider.dim()));
  }
  if (!out->AllFinite()) {
    return MakeError(ErrorKind::kProviderFailure,
                     fmt::format("{} returned non-finite values", provider.name()));
  }
  return out;
}

}  // namespace

std::vector<TokenSpan> SlidingWindows(size_t n, size_t window, size_t overlap) {
  std::vector<TokenSpan> windows;
  if (n == 0) return windows;
  const size_t stride = window - overlap;
  for (size_t start = 0;; start += stride) {
    const size_t end = std::min(start + window, n);
    windows.push_back({start, end});
    if (end == n) break;
  }
  return windows;
}

double WindowWeight(size_t token, const TokenSpan& span, size_t window) {
  const double center =
      (static_cast<double>(span.begin) + static_cast<double>(span.end - 1)) / 2.0;
  const double half = static_cast<double>(window) / 2.0;
  const double distance = std::abs(static_cast<double>(token) - center);
  return std::max(0.0, 1.0 - distance / half);
}

absl::StatusOr<Matrix> EncodeTokens(std::span<const std::string> tokens,
                                    EmbeddingProvider& provider, size_t window,
                                    size_t overlap) {
  if (window == 0 || overlap >= window) {
    return MakeError(ErrorKind::kInvalidConfig,
                     fmt::format("window {} must exceed overlap {}", window, overlap));
  }
  if (provider.dim() == 0) {
    return MakeError(ErrorKind::kProviderFailure, "provider dim is 0");
  }
  const size_t n = tokens.size();
  if (n == 0) return Matrix(0, provider.dim());
  if (n <= window) return CallProvider(provider, tokens);

  Matrix sum(n, provider.dim());
  std::vector<double> weight_sum(n, 0.0);
  for (const TokenSpan& w : SlidingWindows(n, window, overlap)) {
    LC_ASSIGN_OR_RETURN(Matrix part,
                        CallProvider(provider, tokens.subspan(w.begin, w.size())));
    for (size_t i = w.begin; i < w.end; ++i) {
      const double weight = WindowWeight(i, w, window);
      weight_sum[i] += weight;
      std::span<const double> src = part.Row(i - w.begin);
      std::span<double> dst = sum.Row(i);
      for (size_t c = 0; c < dst.size(); ++c) dst[c] += weight * src[c];
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (double& x : sum.Row(i)) x /= weight_sum[i];
  }
  return sum;
}

std::vector<std::string> TokenTexts(const docgraph::Document& doc,
                                    TokenSpan span) {
  std::vector<std::string> out;
  out.reserve(span.size());
  for (size_t t = span.begin; t < span.end; ++t) out.push_back(doc.tokens[t].text);
  return out;
}

absl::StatusOr<TokenEmbeddings> EncodeDocument(const docgraph::Document& doc,
                                               EmbeddingProvider& provider,
                                               size_t window, size_t overlap) {
  std::vector<std::string> texts = TokenTexts(doc, {0, doc.tokens.size()});
  absl::StatusOr<Matrix> vectors = EncodeTokens(texts, provider, window, overlap);
  if (!vectors.ok()) {
    return Annotate(vectors.status(), fmt::format("document {}", doc.doc_id));
  }
  TokenEmbeddings out;
  out.doc_id = doc.doc_id;
  out.vectors = *std::move(vectors);
  return out;
}

absl::StatusOr<std::vector<double>> EmbedQuery(std::string_view text,
                                               EmbeddingProvider& provider) {
  std::vector<std::string> tokens;
  for (RawToken& t : Tokenize(text)) tokens.push_back(std::move(t.text));
  if (tokens.empty()) return MakeError(ErrorKind::kEmptyQuery, "empty query text");
  LC_ASSIGN_OR_RETURN(Matrix rows, EncodeTokens(tokens, provider,
                                                provider.max_window(), 0));
  std::vector<double> q = MeanRows(rows, 0, rows.rows());
  if (!NormalizeInPlace(q)) {
    return MakeError(ErrorKind::kZeroVector, "query embedding is zero");
  }
  return q;
}

}  // namespace latechunk::embed
