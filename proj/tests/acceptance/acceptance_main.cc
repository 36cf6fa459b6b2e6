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

// Acceptance gate. Runs every criterion (or those named on the command
// line) and prints one PASS/FAIL line each. Exit status is nonzero if any
// selected criterion fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fmt/format.h"
#include "latechunk/bench/questions.h"
#include "latechunk/chunkers/baselines.h"
#include "latechunk/chunkers/boundary.h"
#include "latechunk/docgraph/conditions.h"
#include "latechunk/docgraph/jats.h"
#include "latechunk/docgraph/structure_graph.h"
#include "latechunk/embed/deterministic_embedder.h"
#include "latechunk/embed/encoder.h"
#include "latechunk/eval/metrics.h"
#include "latechunk/kg/fusion.h"
#include "latechunk/kg/gat.h"
#include "latechunk/pipeline/commands.h"
#include "latechunk/retrieval/index.h"
#include "latechunk/retrieval/search.h"
#include "latechunk/synth/corpus.h"
#include "latechunk/util/status.h"
#include "oracles/gat_oracle.h"
#include "oracles/metric_oracle.h"
#include "unit/jats_builder.h"

namespace latechunk::acceptance {
namespace {

namespace fs = std::filesystem;
using docgraph::Condition;
using pipeline::Strategy;

// Pinned thresholds and tolerances.
constexpr double kGatTol = 1e-9;
constexpr double kRowSumTol = 1e-12;
constexpr double kHybridTol = 1e-12;
constexpr double kStructureSecCov5Min = 2.0;
constexpr double kContentOnlySecCovMax = 1.5;
constexpr size_t kGatGraphs = 200;
constexpr size_t kGatMaxNodes = 12;
constexpr size_t kMetricFixtures = 500;
constexpr size_t kRetrievalFixtures = 100;
constexpr size_t kTimingRepeats = 7;

// Synthetic corpus used for the coverage criterion: 60 six-section
// articles, each section on one topic, entities repeated densely inside
// their own section and kept out of the first 260 words of it, embedded
// with a 2048-dim hashed encoder that mixes 0.8 of the document mean into
// every token.
synth::SynthOptions CoverageCorpusOptions() {
  synth::SynthOptions o;
  o.documents = 60;
  o.seed = 2026;
  o.function_word_rate = 0.0;
  o.method_rate = o.marker_rate = o.target_rate = 0.9;
  o.lead_in_words = 260;
  return o;
}
constexpr size_t kCoverageDim = 2048;
constexpr double kCoverageContextMix = 0.8;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double max_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

class Scratch {
 public:
  explicit Scratch(const std::string& tag)
      : path_(fs::temp_directory_path() /
              fmt::format("latechunk_accept_{}_{}", ::getpid(), tag)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~Scratch() { fs::remove_all(path_); }
  std::string path() const { return path_.string(); }
  std::string Sub(const std::string& rel) const { return (path_ / rel).string(); }

 private:
  fs::path path_;
};

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

absl::StatusOr<pipeline::PipelineConfig> SynthConfig(
    const Scratch& dir, const synth::SynthOptions& opts, size_t dim,
    double context_mix, const std::string& extra = "") {
  LC_RETURN_IF_ERROR(synth::WriteCorpus(synth::GenerateCorpus(opts), dir.path()));
  std::string body = fmt::format(
      R"({{"corpus_dir": "articles", "concept_graph": "concepts.tsv",
          "dictionary": "dictionary.tsv", "seed": 11,
          "provider": {{"kind": "deterministic", "dim": {},
                        "context_mix": {}}}{}}})",
      dim, context_mix, extra.empty() ? "" : ", " + extra);
  return pipeline::ParseConfig(body, dir.path());
}

// ---------------------------------------------------------------------------

Outcome FormulaOracles() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const kg::Activation acts[] = {kg::Activation::kElu, kg::Activation::kRelu,
                                 kg::Activation::kIdentity};
  double worst = 0, worst_sum = 0;
  for (size_t trial = 0; trial < kGatGraphs; ++trial) {
    const size_t n = 1 + rng() % kGatMaxNodes;
    const size_t dk = 1 + rng() % 6;
    const size_t dp = 1 + rng() % 6;
    kg::GatParams p = kg::DefaultGatParams(dk, dp, 3, trial);
    for (double& x : p.w.data()) x = uni(rng);
    for (double& x : p.a) x = uni(rng);
    p.activation = acts[trial % 3];
    Matrix u(n, dk);
    for (double& x : u.data()) x = uni(rng);
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) edges.emplace_back(a, b);
    Matrix alpha;
    Matrix expected = oracle::DenseGat(u, edges, p, &alpha);
    absl::StatusOr<kg::GatOutput> got =
        kg::GatForward(u, oracle::HoodsFrom(n, edges), p);
    if (!got.ok()) return {false, std::string(got.status().message())};
    for (size_t j = 0; j < n; ++j) {
      double sum = 0;
      for (size_t m = 0; m < got->neighborhoods[j].size(); ++m) {
        const size_t k = got->neighborhoods[j][m];
        worst = std::max(worst, std::abs(got->attention[j][m] - alpha(j, k)));
        sum += got->attention[j][m];
      }
      worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
      for (size_t r = 0; r < dp; ++r) {
        worst = std::max(worst, std::abs(got->rows(j, r) - expected(j, r)));
      }
    }
  }

  // Zero gate: fusion returns the input rows bit for bit.
  bool noop = true;
  for (int trial = 0; trial < 100 && noop; ++trial) {
    const size_t n = 5 + rng() % 40, d = 2 + rng() % 8, dp = 1 + rng() % 5;
    kg::GatParams p = kg::DefaultGatParams(3, dp, d, trial, 0.0);
    embed::TokenEmbeddings t;
    t.doc_id = "d";
    t.vectors = Matrix(n, d);
    for (double& x : t.vectors.data()) x = uni(rng);
    std::map<std::string, std::vector<double>, std::less<>> enriched;
    std::vector<kg::EntityMention> mentions;
    for (size_t i = 0; i < n; i += 1 + rng() % 4) {
      kg::EntityMention m;
      m.cui = fmt::format("C{}", rng() % 4);
      m.first = i;
      m.last = std::min(n - 1, i + rng() % 3);
      i = m.last;
      mentions.push_back(m);
      std::vector<double> v(dp);
      for (double& x : v) x = uni(rng);
      enriched[m.cui] = v;
    }
    absl::StatusOr<embed::TokenEmbeddings> out =
        kg::FuseTokens(t, mentions, enriched, p);
    noop = out.ok() && out->vectors == t.vectors;
  }

  // The three worked boundary examples, by hand substitution.
  chunkers::BoundaryWeights w;
  auto block = [](size_t n, size_t split) {
    Matrix m(n, 2);
    for (size_t i = 0; i < n; ++i) m(i, i < split ? 0 : 1) = 1.0;
    return m;
  };
  auto node = [](docgraph::NodeType type, size_t b, size_t e) {
    docgraph::StructureGraph g;
    g.nodes.push_back({type, {b, e}, "x", 0});
    return g;
  };
  kg::EntityMention crossing;
  crossing.cui = "C1";
  crossing.first = 6;
  crossing.last = 9;
  const double section = chunkers::ScoreBoundaries(
      block(20, 20), node(docgraph::NodeType::kSection, 8, 20), {}, w)[7];
  const double paragraph = chunkers::ScoreBoundaries(
      block(20, 20), node(docgraph::NodeType::kParagraph, 8, 20),
      std::vector{crossing}, w)[7];
  const double mid =
      chunkers::ScoreBoundaries(block(40, 20), docgraph::StructureGraph{}, {}, w)[19];
  const bool examples = section == 0.5 * 1.0 + 0.3 * 0.0 + 1.0 * 0.0 &&
                        paragraph == 0.5 * 0.4 + 0.3 * 0.0 + 1.0 * -0.5 &&
                        mid == 0.3 * 1.0;

  return {worst <= kGatTol && worst_sum <= kRowSumTol && noop && examples,
          fmt::format("gat max err {:.2e} (tol {:.0e}), row-sum err {:.2e}, "
                      "zero gate no-op {}, boundary examples {:.17g} {:.17g} "
                      "{:.17g}",
                      worst, kGatTol, worst_sum, noop ? "yes" : "no", section,
                      paragraph, mid)};
}

Outcome MetricOracles() {
  std::mt19937_64 rng(77);
  size_t queries = 0;
  for (size_t trial = 0; trial < kMetricFixtures; ++trial) {
    std::vector<eval::EvalQuery> qs = oracle::RandomQueries(rng);
    queries += qs.size();
    absl::StatusOr<double> mrr = eval::Mrr(qs);
    if (!mrr.ok() || *mrr != oracle::OracleMrr(qs)) {
      return {false, fmt::format("MRR mismatch on fixture {}", trial)};
    }
    for (size_t k : {1, 3, 5, 10, 20}) {
      if (eval::RecallAtK(qs, k) != oracle::OracleRecall(qs, k) ||
          eval::SecCovAtK(qs, k) != oracle::OracleSecCov(qs, k) ||
          eval::CsRecallAtK(qs, k) != oracle::OracleCsRecall(qs, k)) {
        return {false, fmt::format("mismatch on fixture {} at k={}", trial, k)};
      }
    }
  }
  return {true, fmt::format("{} fixtures, {} queries, exact", kMetricFixtures,
                            queries)};
}

Outcome RetrievalEquivalences() {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  size_t compared = 0;
  for (size_t trial = 0; trial < kRetrievalFixtures; ++trial) {
    const size_t d = 2 + rng() % 8, n = 5 + rng() % 60;
    std::vector<chunkers::Chunk> chunks;
    for (size_t i = 0; i < n; ++i) {
      chunkers::Chunk c;
      c.chunk_id = fmt::format("doc{}#{:05d}", i % 7, i);
      c.doc_id = fmt::format("doc{}", i % 7);
      c.embedding.resize(d);
      for (double& x : c.embedding) x = g(rng);
      if (i > 0 && rng() % 5 == 0) c.embedding = chunks[rng() % i].embedding;
      c.cuis = {fmt::format("C{}", rng() % 6)};
      chunks.push_back(std::move(c));
    }
    std::vector<kg::Concept> concepts;
    for (size_t i = 0; i < 6; ++i) {
      std::vector<double> v(3);
      for (double& x : v) x = g(rng);
      concepts.push_back({fmt::format("C{}", i), "n", {}, {}, v});
    }
    kg::ConceptGraph graph = *kg::ConceptGraph::Create(std::move(concepts), {});
    retrieval::ChunkIndex idx = *retrieval::ChunkIndex::Build(chunks);
    retrieval::Query q{"q", std::vector<double>(d), {"C1", "C4"}};
    for (double& x : q.vector) x = g(rng);
    const size_t k = 1 + rng() % 30;
    auto dense = retrieval::DenseRetrieve(q, idx, k);
    auto hybrid = retrieval::HybridRetrieve(q, idx, graph, 1.0, k);
    if (!dense.ok() || !hybrid.ok() || dense->hits.size() != hybrid->hits.size()) {
      return {false, fmt::format("fixture {} failed", trial)};
    }
    for (size_t i = 0; i < dense->hits.size(); ++i) {
      if (dense->hits[i].chunk_id != hybrid->hits[i].chunk_id) {
        return {false, fmt::format("ranking differs on fixture {} rank {}", trial, i)};
      }
      ++compared;
    }
  }

  kg::ConceptGraph graph =
      *kg::ConceptGraph::Create({{"C1", "", {}, {}, {0.3, -0.4, 1.2}}}, {});
  auto along = [](double s) { return std::vector<double>{s, std::sqrt(1 - s * s)}; };
  std::vector<chunkers::Chunk> chunks(3);
  const double cos[] = {0.9, 0.5, 0.1};
  for (size_t i = 0; i < 3; ++i) {
    chunks[i].chunk_id = fmt::format("chunk{}", i + 1);
    chunks[i].doc_id = "D";
    chunks[i].embedding = along(cos[i]);
    if (i > 0) chunks[i].cuis = {"C1"};
  }
  retrieval::ChunkIndex idx = *retrieval::ChunkIndex::Build(chunks);
  auto r = retrieval::HybridRetrieve({"q", {1, 0}, {"C1"}}, idx, graph, 0.7, 3);
  std::map<std::string, double> score;
  if (r.ok()) {
    for (const auto& h : r->hits) score[h.chunk_id] = h.score;
  }
  const bool example = score.size() == 3 &&
                       std::abs(score["chunk1"] - 0.63) <= kHybridTol &&
                       std::abs(score["chunk2"] - 0.65) <= kHybridTol &&
                       std::abs(score["chunk3"] - 0.37) <= kHybridTol;
  return {example,
          fmt::format("beta=1 equals dense on {} fixtures ({} ranks); worked "
                      "example scores {:.15f} {:.15f} {:.15f}",
                      kRetrievalFixtures, compared, score["chunk1"],
                      score["chunk2"], score["chunk3"])};
}

Outcome SecCovDivergence() {
  Scratch dir("coverage");
  auto config = SynthConfig(dir, CoverageCorpusOptions(), kCoverageDim,
                            kCoverageContextMix,
                            R"("conditions": ["fulltext"])");
  if (!config.ok()) return {false, std::string(config.status().message())};
  auto res = pipeline::LoadResources(*config);
  auto corpus = pipeline::IngestCorpus(config->corpus_dir);
  if (!res.ok() || !corpus.ok()) return {false, "setup failed"};
  std::vector<bench::BenchmarkQuestion> questions =
      pipeline::GenerateBenchmark(*corpus, *res);
  auto queries = pipeline::EmbedQuestions(questions, *res);
  if (!queries.ok()) return {false, std::string(queries.status().message())};
  auto counts = pipeline::SectionCounts(*corpus, Condition::kFullText);
  size_t min_tokens = std::numeric_limits<size_t>::max();
  for (const auto& d : corpus->documents) {
    min_tokens = std::min(min_tokens, d.doc.tokens.size());
  }

  std::map<Strategy, std::map<size_t, double>> sc;
  for (Strategy s : {Strategy::kNaive, Strategy::kSemantic, Strategy::kLate,
                     Strategy::kStructure}) {
    auto build = pipeline::BuildIndex(s, Condition::kFullText, *corpus, *res, 1);
    if (!build.ok()) return {false, std::string(build.status().message())};
    auto results = pipeline::RetrieveAll(s, build->index, *queries, *res,
                                         config->beta, 20);
    if (!results.ok()) return {false, std::string(results.status().message())};
    auto row = pipeline::EvaluateRetrieval(s, Condition::kFullText, build->index,
                                           questions, *results, counts);
    if (!row.ok()) return {false, std::string(row.status().message())};
    for (size_t k : {5, 10, 20}) {
      sc[s][k] = *row->Get(fmt::format("seccov@{}", k));
    }
  }
  bool pass = sc[Strategy::kStructure][5] >= kStructureSecCov5Min &&
              sc[Strategy::kStructure][20] > sc[Strategy::kStructure][5];
  std::string detail = fmt::format(
      "{} docs (min {} tokens), {} questions; SecCov@5/10/20:",
      corpus->documents.size(), min_tokens, questions.size());
  for (const auto& [s, by_k] : sc) {
    detail += fmt::format(" {} {:.2f}/{:.2f}/{:.2f}", pipeline::StrategyName(s),
                          by_k.at(5), by_k.at(10), by_k.at(20));
    if (s != Strategy::kStructure) {
      for (const auto& [k, v] : by_k) pass = pass && v <= kContentOnlySecCovMax;
    }
  }
  return {pass, detail};
}

bool CheckChunkSizes(const std::vector<chunkers::Chunk>& chunks, size_t n,
                     const chunkers::BoundaryWeights& w, std::string* why) {
  size_t cursor = 0;
  for (const chunkers::Chunk& c : chunks) {
    if (c.span.begin != cursor) {
      *why = "chunks do not tile the document";
      return false;
    }
    cursor = c.span.end;
    const bool whole_short = n < w.min_chunk && chunks.size() == 1;
    if (!whole_short && (c.size() < w.min_chunk || c.size() > w.max_chunk)) {
      *why = fmt::format("chunk of {} tokens in a {}-token document", c.size(), n);
      return false;
    }
  }
  if (cursor != n) {
    *why = "chunks do not cover the document";
    return false;
  }
  return true;
}

Outcome ChunkSizeContract() {
  chunkers::BoundaryWeights w;
  size_t docs = 0, chunks = 0;
  std::string why;

  // Random articles of every size, including ones shorter than a chunk.
  std::mt19937_64 rng(23);
  embed::DeterministicEmbedder e({.dim = 16});
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<testing::SectionSpec> secs;
    const int nsec = 1 + rng() % 7;
    for (int s = 0; s < nsec; ++s) {
      testing::SectionSpec spec{fmt::format("Section {}", s), {}};
      const int np = 1 + rng() % 6;
      const size_t scale = trial % 3 == 0 ? 30 : 500;
      for (int p = 0; p < np; ++p) {
        spec.paragraphs.push_back(
            testing::Words(1 + rng() % scale, fmt::format("w{}", rng() % 5)));
      }
      secs.push_back(spec);
    }
    auto doc = docgraph::ParseJats(testing::BuildJats("PMC1", secs));
    if (!doc.ok()) return {false, std::string(doc.status().message())};
    docgraph::StructureGraph g = docgraph::BuildStructureGraph(*doc);
    auto t = embed::EncodeDocument(*doc, e);
    if (!t.ok()) return {false, std::string(t.status().message())};
    std::vector<kg::EntityMention> mentions;
    const size_t n = doc->tokens.size();
    for (size_t i = rng() % 20; i < n; i += 1 + rng() % 40) {
      kg::EntityMention m;
      m.cui = "C1";
      m.first = i;
      m.last = std::min(n - 1, i + rng() % 4);
      mentions.push_back(m);
      i = m.last;
    }
    for (bool entity : {false, true}) {
      auto c = chunkers::StructureChunks(
          *doc, g, t->vectors,
          entity ? std::span<const kg::EntityMention>(mentions)
                 : std::span<const kg::EntityMention>(),
          w);
      if (!c.ok()) return {false, std::string(c.status().message())};
      if (!CheckChunkSizes(*c, n, w, &why)) return {false, why};
      chunks += c->size();
    }
    ++docs;
  }

  // Every condition slice of the synthetic corpus, both structure-aware
  // strategies.
  Scratch dir("sizes");
  synth::SynthOptions opts;
  opts.documents = 20;
  auto config = SynthConfig(dir, opts, 64, 0.0);
  if (!config.ok()) return {false, std::string(config.status().message())};
  auto res = pipeline::LoadResources(*config);
  auto corpus = pipeline::IngestCorpus(config->corpus_dir);
  if (!res.ok() || !corpus.ok()) return {false, "setup failed"};
  for (const auto& d : corpus->documents) {
    for (Condition cond : {Condition::kAbstract, Condition::kIntroduction,
                           Condition::kPartial, Condition::kFullText}) {
      auto slice = docgraph::ExtractCondition(d.doc, cond);
      if (!slice.ok()) continue;
      for (Strategy s : {Strategy::kStructure, Strategy::kGralcKg}) {
        auto c = pipeline::ChunkDocument(s, *slice, *res);
        if (!c.ok()) return {false, std::string(c.status().message())};
        if (!CheckChunkSizes(*c, slice->tokens.size(), w, &why)) {
          return {false, fmt::format("{}: {}", slice->doc_id, why)};
        }
        chunks += c->size();
      }
      ++docs;
    }
  }
  return {true, fmt::format("{} documents, {} chunks, all within [{}, {}]", docs,
                            chunks, w.min_chunk, w.max_chunk)};
}

Outcome EfficiencyOrdering() {
  Scratch dir("timing");
  synth::SynthOptions opts;
  opts.documents = 20;
  auto config = SynthConfig(dir, opts, 768, 0.0, R"("conditions": ["fulltext"])");
  if (!config.ok()) return {false, std::string(config.status().message())};
  auto res = pipeline::LoadResources(*config);
  auto corpus = pipeline::IngestCorpus(config->corpus_dir);
  if (!res.ok() || !corpus.ok()) return {false, "setup failed"};
  // Per-document wall time of slicing plus chunking (which embeds), the
  // strategies interleaved document by document; each strategy's total is
  // the sum over documents of the fastest of kTimingRepeats runs.
  const Strategy order[] = {Strategy::kNaive, Strategy::kLate,
                            Strategy::kStructure, Strategy::kGralcKg};
  const size_t ndocs = corpus->documents.size();
  std::map<Strategy, std::vector<double>> fastest;
  for (Strategy s : order) {
    fastest[s].assign(ndocs, std::numeric_limits<double>::infinity());
  }
  for (size_t rep = 0; rep < kTimingRepeats; ++rep) {
    for (size_t i = 0; i < ndocs; ++i) {
      for (Strategy s : order) {
        const auto start = std::chrono::steady_clock::now();
        auto slice = docgraph::ExtractCondition(corpus->documents[i].doc,
                                                Condition::kFullText);
        if (!slice.ok()) return {false, std::string(slice.status().message())};
        auto chunks = pipeline::ChunkDocument(s, *slice, *res);
        if (!chunks.ok()) return {false, std::string(chunks.status().message())};
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        fastest[s][i] = std::min(fastest[s][i], secs);
      }
    }
  }
  std::map<Strategy, double> best;
  for (Strategy s : order) {
    for (double t : fastest[s]) best[s] += t;
  }
  const bool pass = best[Strategy::kNaive] < best[Strategy::kStructure] &&
                    best[Strategy::kStructure] < best[Strategy::kGralcKg];
  std::string detail =
      fmt::format("one thread, {} docs, per-document best of {}:", ndocs,
                  kTimingRepeats);
  for (Strategy s : order) {
    detail += fmt::format(" {} {:.3f}s", pipeline::StrategyName(s), best[s]);
  }
  return {pass, detail};
}

std::map<std::string, std::string> Artifacts(const std::string& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::string rel = fs::relative(e.path(), root).string();
    if (rel == "timing.csv") continue;  // wall-clock by design
    out[rel] = ReadFile(e.path());
  }
  return out;
}

Outcome Determinism() {
  Scratch dir("determinism");
  synth::SynthOptions opts;
  opts.documents = 8;
  auto config = SynthConfig(dir, opts, 64, 0.3);
  if (!config.ok()) return {false, std::string(config.status().message())};
  config->out_dir = dir.Sub("run1");
  config->workers = 1;
  auto a = pipeline::CmdAll(*config);
  config->out_dir = dir.Sub("run2");
  config->workers = 3;
  auto b = pipeline::CmdAll(*config);
  if (!a.ok() || !b.ok()) return {false, "pipeline run failed"};
  auto fa = Artifacts(dir.Sub("run1"));
  auto fb = Artifacts(dir.Sub("run2"));
  size_t indexes = 0, bytes = 0;
  for (const auto& [rel, text] : fa) {
    auto it = fb.find(rel);
    if (it == fb.end() || it->second != text) {
      return {false, fmt::format("{} differs between runs", rel)};
    }
    if (rel.ends_with(".idx")) ++indexes;
    bytes += text.size();
  }
  const bool pass = fa.size() == fb.size() && indexes == 18 &&
                    fa.count("report.json") && fa.count("report.csv");
  return {pass, fmt::format("{} files ({} indexes, {} bytes) identical across "
                            "runs with 1 and 3 workers",
                            fa.size(), indexes, bytes)};
}

std::string CheckQuestion(const bench::BenchmarkQuestion& q,
                          const docgraph::Document& doc) {
  std::set<docgraph::SectionKind> present;
  for (int top : doc.TopLevelSections()) {
    if (doc.sections[top].in_body) present.insert(doc.sections[top].kind);
  }
  std::set<docgraph::SectionKind> req(q.required_sections.begin(),
                                      q.required_sections.end());
  if (q.required_sections.size() < 2 || req.size() != q.required_sections.size()) {
    return q.question_id + ": fewer than two distinct required sections";
  }
  for (docgraph::SectionKind k : req) {
    if (!present.count(k)) {
      return fmt::format("{}: {} absent from source", q.question_id,
                         docgraph::SectionKindName(k));
    }
  }
  return "";
}

Outcome BenchmarkContract() {
  size_t questions = 0, docs = 0;
  // Synthetic corpus with dictionary linking.
  Scratch dir("bench");
  auto config = SynthConfig(dir, synth::SynthOptions{}, 64, 0.0);
  if (!config.ok()) return {false, std::string(config.status().message())};
  auto res = pipeline::LoadResources(*config);
  auto corpus = pipeline::IngestCorpus(config->corpus_dir);
  if (!res.ok() || !corpus.ok()) return {false, "setup failed"};
  std::map<std::string, const docgraph::Document*> by_id;
  for (const auto& d : corpus->documents) by_id[d.doc.doc_id] = &d.doc;
  for (const auto& q : pipeline::GenerateBenchmark(*corpus, *res)) {
    std::string err = CheckQuestion(q, *by_id.at(q.doc_id));
    if (!err.empty()) return {false, err};
    ++questions;
  }
  docs += corpus->documents.size();

  // Random articles over header synonyms, some sections missing, without a
  // dictionary.
  const std::vector<std::string> titles = {
      "Introduction", "Background", "Methods", "Materials and Methods",
      "Results",      "Findings",   "Discussion", "Conclusions",
      "Limitations",  "Results and Discussion", "Experimental Procedures"};
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<testing::SectionSpec> secs;
    const int nsec = 1 + rng() % 6;
    for (int s = 0; s < nsec; ++s) {
      secs.push_back({titles[rng() % titles.size()], {}});
      for (int p = 0; p < 1 + static_cast<int>(rng() % 3); ++p) {
        std::string text;
        for (int k = 0; k < 3; ++k) {
          text += fmt::format("The Alpha{} Beta assay was run {} times. ",
                              rng() % 4, rng() % 9);
        }
        if (rng() % 4 == 0) text += "We hypothesized that Gamma acts here.";
        secs.back().paragraphs.push_back(text);
      }
    }
    auto doc = docgraph::ParseJats(
        testing::BuildJats(fmt::format("PMC{}", trial), secs));
    if (!doc.ok()) continue;
    for (const auto& q : bench::GenerateQuestions(*doc, {}, 2)) {
      std::string err = CheckQuestion(q, *doc);
      if (!err.empty()) return {false, err};
      ++questions;
    }
    ++docs;
  }
  return {questions > 0,
          fmt::format("{} questions from {} documents checked", questions, docs)};
}

}  // namespace
}  // namespace latechunk::acceptance

int main(int argc, char** argv) {
  using namespace latechunk::acceptance;
  const std::vector<Criterion> all = {
      {"formula_oracles", 10, FormulaOracles},
      {"metric_oracles", 10, MetricOracles},
      {"retrieval_equivalences", 0, RetrievalEquivalences},
      {"seccov_divergence", 120, SecCovDivergence},
      {"chunk_size_contract", 0, ChunkSizeContract},
      {"efficiency_ordering", 0, EfficiencyOrdering},
      {"determinism", 0, Determinism},
      {"benchmark_contract", 0, BenchmarkContract},
  };
  std::vector<const Criterion*> chosen;
  for (int i = 1; i < argc; ++i) {
    std::string name = argv[i];
    if (name == "--list") {
      for (const Criterion& c : all) fmt::print("{}\n", c.name);
      return 0;
    }
    auto it = std::find_if(all.begin(), all.end(),
                           [&](const Criterion& c) { return c.name == name; });
    if (it == all.end()) {
      fmt::print(stderr, "unknown criterion {}\n", name);
      return 2;
    }
    chosen.push_back(&*it);
  }
  if (chosen.empty()) {
    for (const Criterion& c : all) chosen.push_back(&c);
  }
  int failed = 0;
  for (const Criterion* c : chosen) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c->run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::string limit;
    if (c->max_seconds > 0) {
      limit = fmt::format(", limit {:.0f}s", c->max_seconds);
      if (secs >= c->max_seconds) o.pass = false;
    }
    fmt::print("{} {} ({:.2f}s{}): {}\n", o.pass ? "PASS" : "FAIL", c->name,
               secs, limit, o.detail);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
