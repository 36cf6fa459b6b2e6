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
#ifndef LATECHUNK_UTIL_HASH_H_
#define LATECHUNK_UTIL_HASH_H_

#include <cstdint>
#include <string_view>

namespace latechunk {

// 64-bit FNV-1a. Stable across platforms, used wherever hashes are persisted
// or feed deterministic outputs.
constexpr uint64_t Fnv1a64(std::string_view data,
                           uint64_t basis = 0xcbf29ce484222325ULL) {
  uint64_t h = basis;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// SplitMix64 step: advances state and returns the next output.
constexpr uint64_t SplitMix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform double in [-1, 1) from a SplitMix64 stream.
inline double UniformSigned(uint64_t& state) {
  return static_cast<double>(SplitMix64(state) >> 11) * 0x1.0p-52 - 1.0;
}

}  // namespace latechunk

#endif  // LATECHUNK_UTIL_HASH_H_
