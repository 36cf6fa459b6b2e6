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

#ifndef LATECHUNK_PIPELINE_RUNNER_H_
#define LATECHUNK_PIPELINE_RUNNER_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/bench/questions.h"
#include "latechunk/chunkers/chunk.h"
#include "latechunk/docgraph/document.h"
#include "latechunk/embed/provider.h"
#include "latechunk/eval/report.h"
#include "latechunk/kg/concept_graph.h"
#include "latechunk/kg/gat.h"
#include "latechunk/kg/linker.h"
#include "latechunk/pipeline/config.h"
#include "latechunk/retrieval/index.h"
#include "latechunk/retrieval/search.h"

namespace latechunk::pipeline {

struct CorpusDocument {
  std::string file;  // path relative to the corpus directory
  docgraph::Document doc;
};

struct SkippedFile {
  std::string file;
  std::string reason;
};

struct Corpus {
  std::vector<CorpusDocument> documents;  // passed the IMRaD filter
  std::vector<SkippedFile> skipped;
  size_t files = 0;
  size_t parsed = 0;
  std::string corpus_hash;

  double pass_rate() const;
};

// Parses every .xml file below dir in path order and keeps the IMRaD
// articles. Unparseable files are recorded and skipped; it is an error if
// there are no files or nothing survives.
absl::StatusOr<Corpus> IngestCorpus(const std::string& dir, size_t workers = 1);
std::string ManifestJson(const Corpus& corpus);

// Everything the strategies need besides the document itself.
struct Resources {
  PipelineConfig config;
  std::shared_ptr<embed::EmbeddingProvider> provider;
  std::optional<kg::ConceptGraph> graph;
  std::optional<kg::EntityLinker> linker;
  std::optional<kg::GatParams> gat;
};

// Loads the concept graph, dictionary and GAT parameters named by the
// config. Without a parameter file the seeded defaults are used; the
// config's lambda always wins.
absl::StatusOr<Resources> LoadResources(const PipelineConfig& config);

absl::StatusOr<std::vector<chunkers::Chunk>> ChunkDocument(
    Strategy strategy, const docgraph::Document& doc, const Resources& res);

struct IndexBuild {
  Strategy strategy = Strategy::kNaive;
  docgraph::Condition condition = docgraph::Condition::kFullText;
  retrieval::ChunkIndex index;
  std::vector<chunkers::Chunk> chunks;
  size_t documents = 0;
  std::vector<SkippedFile> skipped;
  double wall_seconds = 0;  // slicing, chunking, embedding and indexing
};

// Document-parallel over the given number of threads; output order follows
// the corpus.
absl::StatusOr<IndexBuild> BuildIndex(Strategy strategy,
                                      docgraph::Condition condition,
                                      const Corpus& corpus,
                                      const Resources& res, size_t workers);

std::string IndexFileName(Strategy strategy, docgraph::Condition condition);
// JSON lines with chunk ids, spans, labels and text.
std::string ChunkSidecar(const std::vector<chunkers::Chunk>& chunks);

std::vector<bench::BenchmarkQuestion> GenerateBenchmark(const Corpus& corpus,
                                                        const Resources& res);

retrieval::Query MakeQuery(const bench::BenchmarkQuestion& question,
                           const std::vector<double>& vector,
                           const Resources& res);

// Embedded questions, in benchmark order.
absl::StatusOr<std::vector<retrieval::Query>> EmbedQuestions(
    const std::vector<bench::BenchmarkQuestion>& questions,
    const Resources& res);

// Dense search for every strategy but kGralcGraph, which uses the hybrid
// score with the given beta.
absl::StatusOr<std::vector<retrieval::RetrievalResult>> RetrieveAll(
    Strategy strategy, const retrieval::ChunkIndex& index,
    const std::vector<retrieval::Query>& queries, const Resources& res,
    double beta, size_t k);

// Top-level body section counts of every article under the condition,
// keyed by base document id.
std::map<std::string, size_t> SectionCounts(const Corpus& corpus,
                                            docgraph::Condition condition);

absl::StatusOr<eval::ReportRow> EvaluateRetrieval(
    Strategy strategy, docgraph::Condition condition,
    const retrieval::ChunkIndex& index,
    const std::vector<bench::BenchmarkQuestion>& questions,
    const std::vector<retrieval::RetrievalResult>& results,
    const std::map<std::string, size_t>& section_counts,
    std::vector<eval::EvalQuery>* per_query = nullptr);

// Per-question retrieved context for external generation runs.
std::string ContextBundles(
    const std::vector<bench::BenchmarkQuestion>& questions,
    const std::vector<retrieval::RetrievalResult>& results,
    const retrieval::ChunkIndex& index,
    const std::map<std::string, std::string>& chunk_text);

}  // namespace latechunk::pipeline

#endif  // LATECHUNK_PIPELINE_RUNNER_H_
