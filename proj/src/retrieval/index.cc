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
#include "latechunk/retrieval/index.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include "fmt/format.h"
#include "json.hpp"
#include "latechunk/util/matrix.h"
#include "latechunk/util/status.h"

namespace latechunk::retrieval {
namespace {

static_assert(std::endian::native == std::endian::little,
              "index serialization assumes a little-endian host");

class Writer {
 public:
  template <typename T>
  void Put(T v) {
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    out_.append(buf, sizeof(T));
  }
  void PutFixed(std::string_view s, size_t width) {
    out_.append(s.data(), s.size());
    out_.append(width - s.size(), '\0');
  }
  std::string Take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  template <typename T>
  bool Get(T& v) {
    if (pos_ + sizeof(T) > in_.size()) return false;
    std::memcpy(&v, in_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return true;
  }
  bool GetFixed(std::string& s, size_t width) {
    if (pos_ + width > in_.size()) return false;
    std::string_view raw = in_.substr(pos_, width);
    s.assign(raw.substr(0, raw.find('\0')));
    pos_ += width;
    return true;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  std::string_view in_;
  size_t pos_ = 0;
};

absl::Status Corrupt(std::string_view detail) {
  return MakeError(ErrorKind::kUnsupportedFormat,
                   fmt::format("index file: {}", detail));
}

}  // namespace

absl::StatusOr<ChunkIndex> ChunkIndex::Build(
    std::span<const chunkers::Chunk> chunks) {
  std::vector<IndexEntry> entries;
  entries.reserve(chunks.size());
  for (const chunkers::Chunk& c : chunks) {
    IndexEntry e;
    e.chunk_id = c.chunk_id;
    e.doc_id = c.doc_id;
    e.vector = c.embedding;
    if (!NormalizeInPlace(e.vector)) {
      return MakeError(ErrorKind::kZeroVector, c.chunk_id);
    }
    e.primary_section = c.primary_section;
    e.primary_label = c.primary_label;
    e.primary_kind = c.primary_kind;
    e.sections = c.sections;
    e.cuis = c.cuis;
    e.span = c.span;
    entries.push_back(std::move(e));
  }
  return FromEntries(std::move(entries));
}

absl::StatusOr<ChunkIndex> ChunkIndex::FromEntries(std::vector<IndexEntry> entries) {
  ChunkIndex index;
  std::set<std::string_view> ids;
  for (const IndexEntry& e : entries) {
    if (ids.empty()) index.dim_ = e.vector.size();
    if (e.vector.size() != index.dim_) {
      return MakeError(ErrorKind::kDimMismatch,
                       fmt::format("{} has dim {}, index dim {}", e.chunk_id,
                                   e.vector.size(), index.dim_));
    }
    const double norm = Norm(e.vector);
    if (norm == 0.0 || !AllFinite(e.vector)) {
      return MakeError(ErrorKind::kZeroVector, e.chunk_id);
    }
    if (std::abs(norm - 1.0) > 1e-6) {
      return MakeError(ErrorKind::kInvalidConfig,
                       fmt::format("{} is not unit norm ({})", e.chunk_id, norm));
    }
    if (!ids.insert(e.chunk_id).second) {
      return MakeError(ErrorKind::kDuplicateId, e.chunk_id);
    }
  }
  index.entries_ = std::move(entries);
  return index;
}

std::string ChunkIndex::Serialize() const {
  uint32_t id_w = 1, doc_w = 1, label_w = 1, sec_slots = 0, cui_slots = 0, cui_w = 1;
  for (const IndexEntry& e : entries_) {
    id_w = std::max<uint32_t>(id_w, e.chunk_id.size());
    doc_w = std::max<uint32_t>(doc_w, e.doc_id.size());
    label_w = std::max<uint32_t>(label_w, e.primary_label.size());
    sec_slots = std::max<uint32_t>(sec_slots, e.sections.size());
    cui_slots = std::max<uint32_t>(cui_slots, e.cuis.size());
    for (const std::string& c : e.cuis) cui_w = std::max<uint32_t>(cui_w, c.size());
  }
  Writer w;
  for (char c : kIndexMagic) w.Put(c);
  w.Put<uint32_t>(kIndexVersion);
  w.Put<uint32_t>(dim_);
  w.Put<uint64_t>(entries_.size());
  for (uint32_t v : {id_w, doc_w, label_w, sec_slots, cui_slots, cui_w}) w.Put(v);
  for (const IndexEntry& e : entries_) {
    w.PutFixed(e.chunk_id, id_w);
    w.PutFixed(e.doc_id, doc_w);
    w.PutFixed(e.primary_label, label_w);
    w.Put<int32_t>(e.primary_section);
    w.Put<uint8_t>(static_cast<uint8_t>(e.primary_kind));
    w.Put<uint32_t>(e.span.begin);
    w.Put<uint32_t>(e.span.end);
    w.Put<uint32_t>(e.sections.size());
    for (uint32_t s = 0; s < sec_slots; ++s) {
      w.Put<int32_t>(s < e.sections.size() ? e.sections[s] : -1);
    }
    w.Put<uint32_t>(e.cuis.size());
    for (uint32_t s = 0; s < cui_slots; ++s) {
      w.PutFixed(s < e.cuis.size() ? e.cuis[s] : "", cui_w);
    }
    for (double x : e.vector) w.Put(x);
  }
  return w.Take();
}

absl::StatusOr<ChunkIndex> ChunkIndex::Deserialize(std::string_view bytes) {
  Reader r(bytes);
  char magic[4];
  for (char& c : magic) {
    if (!r.Get(c)) return Corrupt("truncated header");
  }
  if (std::memcmp(magic, kIndexMagic, 4) != 0) return Corrupt("bad magic");
  uint32_t version, dim;
  uint64_t count;
  uint32_t id_w, doc_w, label_w, sec_slots, cui_slots, cui_w;
  if (!r.Get(version) || !r.Get(dim) || !r.Get(count) || !r.Get(id_w) ||
      !r.Get(doc_w) || !r.Get(label_w) || !r.Get(sec_slots) ||
      !r.Get(cui_slots) || !r.Get(cui_w)) {
    return Corrupt("truncated header");
  }
  if (version != kIndexVersion) {
    return Corrupt(fmt::format("unsupported version {}", version));
  }
  std::vector<IndexEntry> entries;
  for (uint64_t k = 0; k < count; ++k) {
    IndexEntry e;
    int32_t primary;
    uint8_t kind;
    uint32_t begin, end, nsec, ncui;
    bool ok = r.GetFixed(e.chunk_id, id_w) && r.GetFixed(e.doc_id, doc_w) &&
              r.GetFixed(e.primary_label, label_w) && r.Get(primary) &&
              r.Get(kind) && r.Get(begin) && r.Get(end) && r.Get(nsec);
    if (!ok || nsec > sec_slots) return Corrupt("truncated record");
    for (uint32_t s = 0; s < sec_slots; ++s) {
      int32_t v;
      if (!r.Get(v)) return Corrupt("truncated record");
      if (s < nsec) e.sections.push_back(v);
    }
    if (!r.Get(ncui) || ncui > cui_slots) return Corrupt("truncated record");
    for (uint32_t s = 0; s < cui_slots; ++s) {
      std::string cui;
      if (!r.GetFixed(cui, cui_w)) return Corrupt("truncated record");
      if (s < ncui) e.cuis.push_back(std::move(cui));
    }
    e.vector.resize(dim);
    for (double& x : e.vector) {
      if (!r.Get(x)) return Corrupt("truncated record");
    }
    e.primary_section = primary;
    e.primary_kind = static_cast<docgraph::SectionKind>(kind);
    e.span = {begin, end};
    entries.push_back(std::move(e));
  }
  if (!r.done()) return Corrupt("trailing bytes");
  return FromEntries(std::move(entries));
}

absl::Status ChunkIndex::Write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return MakeError(ErrorKind::kIo, fmt::format("cannot write {}", path));
  const std::string bytes = Serialize();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) return MakeError(ErrorKind::kIo, fmt::format("short write to {}", path));
  return absl::OkStatus();
}

absl::StatusOr<ChunkIndex> ChunkIndex::Read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return MakeError(ErrorKind::kMissingIndex, path);
  std::stringstream ss;
  ss << in.rdbuf();
  absl::StatusOr<ChunkIndex> index = Deserialize(ss.str());
  if (!index.ok()) return Annotate(index.status(), path);
  return index;
}

std::string ChunkIndex::ToJson() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const IndexEntry& e : entries_) {
    entries.push_back({{"chunk_id", e.chunk_id},
                       {"doc_id", e.doc_id},
                       {"primary_section", e.primary_section},
                       {"primary_label", e.primary_label},
                       {"primary_kind", docgraph::SectionKindName(e.primary_kind)},
                       {"sections", e.sections},
                       {"cuis", e.cuis},
                       {"span", {e.span.begin, e.span.end}},
                       {"vector", e.vector}});
  }
  nlohmann::json j = {{"format", "latechunk-index"},
                      {"version", kIndexVersion},
                      {"dim", dim_},
                      {"count", entries_.size()},
                      {"entries", std::move(entries)}};
  return j.dump(1);
}

}  // namespace latechunk::retrieval
