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
#include "latechunk/embed/deterministic_embedder.h"

#include <unordered_map>

#include "latechunk/util/hash.h"
#include "latechunk/util/text.h"

namespace latechunk::embed {

std::vector<double> HashedUnitVector(std::string_view key, size_t dim,
                                     uint64_t seed) {
  uint64_t state = Fnv1a64(key) ^ (seed * 0x9e3779b97f4a7c15ULL);
  std::vector<double> v(dim);
  for (double& x : v) x = UniformSigned(state);
  if (!NormalizeInPlace(v)) v[0] = 1.0;
  return v;
}

DeterministicEmbedder::DeterministicEmbedder(DeterministicOptions options)
    : options_(options) {}

std::vector<double> DeterministicEmbedder::TokenVector(
    std::string_view token) const {
  return HashedUnitVector(AsciiLower(token), options_.dim, options_.seed);
}

absl::StatusOr<Matrix> DeterministicEmbedder::EmbedTokens(
    std::span<const std::string> tokens) {
  const size_t n = tokens.size();
  const size_t d = options_.dim;
  Matrix base(n, d);
  std::unordered_map<std::string, std::vector<double>> cache;
  for (size_t i = 0; i < n; ++i) {
    std::string key = AsciiLower(tokens[i]);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, HashedUnitVector(key, d, options_.seed)).first;
    }
    std::copy(it->second.begin(), it->second.end(), base.Row(i).begin());
  }

  std::vector<double> global(d, 0.0);
  if (options_.context_mix != 0.0 && n > 0) global = MeanRows(base, 0, n);
  const double mix = options_.context_mix;
  Matrix out(n, d);
  for (size_t i = 0; i < n; ++i) {
    const size_t lo = i >= options_.radius ? i - options_.radius : 0;
    const size_t hi = std::min(n, i + options_.radius + 1);
    std::vector<double> local = MeanRows(base, lo, hi);
    for (size_t c = 0; c < d; ++c) {
      out(i, c) = mix == 0.0 ? local[c] : (1.0 - mix) * local[c] + mix * global[c];
    }
  }
  return out;
}

}  // namespace latechunk::embed
