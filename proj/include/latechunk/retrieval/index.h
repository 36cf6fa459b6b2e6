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
#ifndef LATECHUNK_RETRIEVAL_INDEX_H_
#define LATECHUNK_RETRIEVAL_INDEX_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/chunkers/chunk.h"
#include "latechunk/docgraph/document.h"

namespace latechunk::retrieval {

struct IndexEntry {
  std::string chunk_id;
  std::string doc_id;
  std::vector<double> vector;  // unit norm
  int primary_section = -1;
  std::string primary_label;
  docgraph::SectionKind primary_kind = docgraph::SectionKind::kOther;
  std::vector<int> sections;
  std::vector<std::string> cuis;
  docgraph::TokenSpan span;

  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

inline constexpr char kIndexMagic[4] = {'L', 'C', 'I', 'X'};
inline constexpr uint32_t kIndexVersion = 1;

// Flat exact inner-product index. Immutable once built.
class ChunkIndex {
 public:
  ChunkIndex() = default;

  // Normalizes every vector. DimMismatch, ZeroVector, DuplicateId.
  static absl::StatusOr<ChunkIndex> Build(std::span<const chunkers::Chunk> chunks);
  static absl::StatusOr<ChunkIndex> FromEntries(std::vector<IndexEntry> entries);

  size_t dim() const { return dim_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<IndexEntry>& entries() const { return entries_; }
  const IndexEntry& entry(size_t i) const { return entries_[i]; }

  // Binary layout, little endian: magic, version u32, dim u32, count u64,
  // then u32 widths for chunk id, doc id, label, section slots, CUI slots
  // and CUI bytes. Each record has the same size: zero-padded strings,
  // primary section i32, kind u8, span u32 x2, section count u32 plus
  // slots, CUI count u32 plus slots, f64 vector.
  std::string Serialize() const;
  static absl::StatusOr<ChunkIndex> Deserialize(std::string_view bytes);
  absl::Status Write(const std::string& path) const;
  static absl::StatusOr<ChunkIndex> Read(const std::string& path);

  std::string ToJson() const;

  friend bool operator==(const ChunkIndex&, const ChunkIndex&) = default;

 private:
  std::vector<IndexEntry> entries_;
  size_t dim_ = 0;
};

}  // namespace latechunk::retrieval

#endif  // LATECHUNK_RETRIEVAL_INDEX_H_
