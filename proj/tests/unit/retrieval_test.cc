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
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fmt/format.h"
#include "gtest/gtest.h"
#include "latechunk/chunkers/chunk.h"
#include "latechunk/kg/concept_graph.h"
#include "latechunk/retrieval/index.h"
#include "latechunk/retrieval/search.h"
#include "latechunk/util/status.h"

namespace latechunk::retrieval {
namespace {

using chunkers::Chunk;

Chunk MakeChunk(std::string id, std::vector<double> v,
                std::vector<std::string> cuis = {}) {
  Chunk c;
  c.chunk_id = std::move(id);
  c.doc_id = "D";
  c.embedding = std::move(v);
  c.cuis = std::move(cuis);
  return c;
}

std::vector<Chunk> RandomChunks(std::mt19937_64& rng, size_t n, size_t d) {
  std::normal_distribution<double> g;
  std::vector<Chunk> out;
  for (size_t i = 0; i < n; ++i) {
    std::vector<double> v(d);
    for (double& x : v) x = g(rng);
    // Repeated vectors exercise the chunk-id tie-break.
    if (i > 0 && rng() % 5 == 0) v = out[rng() % i].embedding;
    out.push_back(MakeChunk(fmt::format("doc{}#{:05d}", i % 7, i), v,
                            {fmt::format("C{}", rng() % 6)}));
  }
  return out;
}

kg::ConceptGraph RandomConcepts(std::mt19937_64& rng, size_t n, size_t d) {
  std::normal_distribution<double> g;
  std::vector<kg::Concept> c;
  for (size_t i = 0; i < n; ++i) {
    std::vector<double> v(d);
    for (double& x : v) x = g(rng);
    c.push_back({fmt::format("C{}", i), "n", {}, {}, v});
  }
  return *kg::ConceptGraph::Create(std::move(c), {});
}

TEST(IndexTest, NormalizesAndRejects) {
  std::vector<Chunk> one = {MakeChunk("a", {3, 4})};
  absl::StatusOr<ChunkIndex> idx = ChunkIndex::Build(one);
  ASSERT_TRUE(idx.ok());
  EXPECT_EQ(idx->size(), 1u);
  EXPECT_NEAR(Norm(idx->entry(0).vector), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(idx->entry(0).vector[0], 0.6);

  std::vector<Chunk> dup = {MakeChunk("a", {1, 0}), MakeChunk("a", {0, 1})};
  EXPECT_TRUE(HasErrorKind(ChunkIndex::Build(dup).status(), ErrorKind::kDuplicateId));
  std::vector<Chunk> zero = {MakeChunk("a", {0, 0})};
  EXPECT_TRUE(HasErrorKind(ChunkIndex::Build(zero).status(), ErrorKind::kZeroVector));
  std::vector<Chunk> dims = {MakeChunk("a", {1, 0}), MakeChunk("b", {1, 0, 0})};
  EXPECT_TRUE(HasErrorKind(ChunkIndex::Build(dims).status(), ErrorKind::kDimMismatch));
}

TEST(IndexTest, BinaryRoundTripIsExact) {
  std::mt19937_64 rng(1);
  std::vector<Chunk> chunks = RandomChunks(rng, 40, 7);
  for (size_t i = 0; i < chunks.size(); ++i) {
    chunks[i].primary_section = i % 4;
    chunks[i].primary_label = i % 2 ? "Methods" : "Results and Discussion";
    chunks[i].primary_kind = docgraph::SectionKind::kResults;
    chunks[i].sections = std::vector<int>(1 + i % 3, static_cast<int>(i % 4));
    chunks[i].span = {i * 10, i * 10 + 5};
  }
  ChunkIndex idx = *ChunkIndex::Build(chunks);
  const std::string bytes = idx.Serialize();
  EXPECT_EQ(bytes.substr(0, 4), "LCIX");
  absl::StatusOr<ChunkIndex> back = ChunkIndex::Deserialize(bytes);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, idx);
  EXPECT_EQ(back->Serialize(), bytes);

  const std::string path = ::testing::TempDir() + "/roundtrip.idx";
  ASSERT_TRUE(idx.Write(path).ok());
  EXPECT_EQ(*ChunkIndex::Read(path), idx);
  std::remove(path.c_str());
  EXPECT_TRUE(HasErrorKind(ChunkIndex::Read(path).status(), ErrorKind::kMissingIndex));
  EXPECT_FALSE(ChunkIndex::Deserialize(bytes.substr(0, bytes.size() - 3)).ok());
  EXPECT_FALSE(ChunkIndex::Deserialize("LCIY" + bytes.substr(4)).ok());
  EXPECT_NE(idx.ToJson().find("\"chunk_id\""), std::string::npos);
}

TEST(KgProxTest, AverageOfMaxima) {
  // cos(C1, C3) = 0.8, cos(C2, C3) = 0.2.
  const double s8 = std::sqrt(1 - 0.64), s2 = std::sqrt(1 - 0.04);
  kg::ConceptGraph g = *kg::ConceptGraph::Create(
      {{"C1", "", {}, {}, {0.8, s8, 0}}, {"C2", "", {}, {}, {0.2, 0, s2}},
       {"C3", "", {}, {}, {1, 0, 0}}},
      {});
  std::vector<std::string> q = {"C1", "C2"}, c = {"C3"};
  EXPECT_NEAR(KgProx(q, c, g), 0.5, 1e-12);
  std::vector<std::string> one = {"C1"};
  EXPECT_NEAR(KgProx(one, one, g), 1.0, 1e-12);
  EXPECT_EQ(KgProx({}, c, g), 0.0);
  EXPECT_EQ(KgProx(q, {}, g), 0.0);
  // Swapping the roles changes the value: max over {C1, C2} for C3 is 0.8.
  EXPECT_NEAR(KgProx(c, q, g), 0.8, 1e-12);
  std::vector<std::string> unknown = {"C9"};
  EXPECT_EQ(KgProx(unknown, c, g), 0.0);
}

TEST(HybridTest, ThreeChunkExample) {
  kg::ConceptGraph g =
      *kg::ConceptGraph::Create({{"C1", "", {}, {}, {0.3, -0.4, 1.2}}}, {});
  auto along = [](double s) { return std::vector<double>{s, std::sqrt(1 - s * s)}; };
  std::vector<Chunk> chunks = {MakeChunk("chunk1", along(0.9)),
                               MakeChunk("chunk2", along(0.5), {"C1"}),
                               MakeChunk("chunk3", along(0.1), {"C1"})};
  ChunkIndex idx = *ChunkIndex::Build(chunks);
  Query q{"q", {1, 0}, {"C1"}};
  RetrievalResult r = *HybridRetrieve(q, idx, g, 0.7, 3);
  ASSERT_EQ(r.hits.size(), 3u);
  EXPECT_EQ(r.hits[0].chunk_id, "chunk2");
  EXPECT_EQ(r.hits[1].chunk_id, "chunk1");
  EXPECT_EQ(r.hits[2].chunk_id, "chunk3");
  EXPECT_NEAR(r.hits[0].score, 0.65, 1e-12);
  EXPECT_NEAR(r.hits[1].score, 0.63, 1e-12);
  EXPECT_NEAR(r.hits[2].score, 0.37, 1e-12);
  EXPECT_NEAR(r.hits[1].dense, 0.9, 1e-12);
  EXPECT_EQ(r.hits[1].kg, 0.0);
}

TEST(HybridTest, BetaOneEqualsDense) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const size_t d = 2 + rng() % 8;
    ChunkIndex idx = *ChunkIndex::Build(RandomChunks(rng, 5 + rng() % 60, d));
    kg::ConceptGraph g = RandomConcepts(rng, 6, 3);
    std::normal_distribution<double> n;
    Query q{"q", std::vector<double>(d), {"C1", "C4"}};
    for (double& x : q.vector) x = n(rng);
    const size_t k = 1 + rng() % 30;
    RetrievalResult dense = *DenseRetrieve(q, idx, k);
    RetrievalResult hybrid = *HybridRetrieve(q, idx, g, 1.0, k);
    ASSERT_EQ(dense.hits.size(), hybrid.hits.size());
    for (size_t i = 0; i < dense.hits.size(); ++i) {
      EXPECT_EQ(dense.hits[i].chunk_id, hybrid.hits[i].chunk_id);
      EXPECT_EQ(dense.hits[i].score, hybrid.hits[i].score);
    }
  }
}

TEST(HybridTest, BetaZeroWithoutEntitiesFallsBackToIdOrder) {
  std::vector<Chunk> chunks = {MakeChunk("c", {1, 0}), MakeChunk("a", {0, 1}),
                               MakeChunk("b", {1, 1})};
  ChunkIndex idx = *ChunkIndex::Build(chunks);
  kg::ConceptGraph g = *kg::ConceptGraph::Create({{"C1", "", {}, {}, {1.0}}}, {});
  RetrievalResult r = *HybridRetrieve({"q", {1, 0}, {"C1"}}, idx, g, 0.0, 3);
  std::vector<std::string> ids;
  for (const Hit& h : r.hits) {
    ids.push_back(h.chunk_id);
    EXPECT_EQ(h.score, 0.0);
  }
  EXPECT_EQ(ids, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(HybridTest, RaisingKgProxNeverLowersRank) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Chunk> chunks = RandomChunks(rng, 30, 4);
    for (Chunk& c : chunks) c.cuis = {"C0"};
    const size_t target = rng() % chunks.size();
    chunks[target].cuis = {"C1"};
    // C2 is closer to the query concept than C1.
    kg::ConceptGraph g = *kg::ConceptGraph::Create(
        {{"C0", "", {}, {}, {0, 1}}, {"C1", "", {}, {}, {1, 1}},
         {"C2", "", {}, {}, {1, 0.2}}, {"CQ", "", {}, {}, {1, 0}}},
        {});
    Query q{"q", {1, 0.5, -0.3, 0.2}, {"CQ"}};
    auto rank_of = [&](const std::vector<Chunk>& cs) {
      RetrievalResult r = *HybridRetrieve(q, *ChunkIndex::Build(cs), g, 0.6, cs.size());
      for (size_t i = 0; i < r.hits.size(); ++i) {
        if (r.hits[i].chunk_id == cs[target].chunk_id) return i;
      }
      return r.hits.size();
    };
    const size_t before = rank_of(chunks);
    chunks[target].cuis = {"C2"};
    EXPECT_LE(rank_of(chunks), before);
  }
}

TEST(DenseTest, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Chunk> chunks = RandomChunks(rng, 50, 6);
    ChunkIndex idx = *ChunkIndex::Build(chunks);
    std::normal_distribution<double> n;
    std::vector<double> q(6);
    for (double& x : q) x = n(rng);
    // Oracle: cosine on the raw chunk vectors, full sort.
    std::vector<std::pair<double, std::string>> scored;
    for (const Chunk& c : chunks) {
      scored.push_back({Dot(q, c.embedding) / (Norm(q) * Norm(c.embedding)), c.chunk_id});
    }
    std::vector<size_t> order(scored.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (std::abs(scored[a].first - scored[b].first) > 1e-12) {
        return scored[a].first > scored[b].first;
      }
      return scored[a].second < scored[b].second;
    });
    RetrievalResult r = *DenseRetrieve({"q", q, {}}, idx, 50);
    ASSERT_EQ(r.hits.size(), 50u);
    for (size_t i = 0; i < 50; ++i) {
      EXPECT_EQ(r.hits[i].chunk_id, scored[order[i]].second);
      EXPECT_NEAR(r.hits[i].score, scored[order[i]].first, 1e-12);
      if (i > 0) EXPECT_LE(r.hits[i].score, r.hits[i - 1].score);
    }
  }
}

TEST(DenseTest, SelfQueryAndLargeK) {
  std::mt19937_64 rng(2);
  std::vector<Chunk> chunks = RandomChunks(rng, 10, 5);
  ChunkIndex idx = *ChunkIndex::Build(chunks);
  RetrievalResult r = *DenseRetrieve({"q", chunks[4].embedding, {}}, idx, 100);
  EXPECT_EQ(r.hits.size(), 10u);
  EXPECT_NEAR(r.hits[0].score, 1.0, 1e-6);
  EXPECT_EQ(idx.entry(r.hits[0].entry).vector, idx.entry(4).vector);
  EXPECT_TRUE(HasErrorKind(DenseRetrieve({"q", {1}, {}}, ChunkIndex(), 3).status(),
                           ErrorKind::kEmptyIndex));
  EXPECT_TRUE(HasErrorKind(DenseRetrieve({"q", {1, 2}, {}}, idx, 3).status(),
                           ErrorKind::kDimMismatch));
}

}  // namespace
}  // namespace latechunk::retrieval
