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

#include "latechunk/pipeline/runner.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "fmt/format.h"
#include "json.hpp"
#include "latechunk/chunkers/baselines.h"
#include "latechunk/docgraph/jats.h"
#include "latechunk/docgraph/structure_graph.h"
#include "latechunk/embed/encoder.h"
#include "latechunk/kg/fusion.h"
#include "latechunk/util/hash.h"
#include "latechunk/util/status.h"
#include "latechunk/util/text.h"

namespace latechunk::pipeline {
namespace {

namespace fs = std::filesystem;
using docgraph::Condition;
using docgraph::Document;

// Runs fn(i) for i in [0, n) on up to `workers` threads.
template <typename Fn>
void ParallelFor(size_t n, size_t workers, Fn fn) {
  workers = std::max<size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

absl::StatusOr<std::string> ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return MakeError(ErrorKind::kIo, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string StatusText(const absl::Status& s) { return std::string(s.message()); }

}  // namespace

double Corpus::pass_rate() const {
  return files == 0 ? 0.0
                    : static_cast<double>(documents.size()) /
                          static_cast<double>(files);
}

absl::StatusOr<Corpus> IngestCorpus(const std::string& dir, size_t workers) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    return MakeError(ErrorKind::kIo, fmt::format("{} is not a directory", dir));
  }
  std::vector<fs::path> paths;
  for (const auto& entry : fs::recursive_directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".xml") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) {
    return MakeError(ErrorKind::kIo, fmt::format("no .xml files under {}", dir));
  }

  struct Slot {
    std::string file;
    std::string content_hash;
    std::optional<Document> doc;
    std::string error;
    bool parsed = false;
  };
  std::vector<Slot> slots(paths.size());
  ParallelFor(paths.size(), workers, [&](size_t i) {
    Slot& s = slots[i];
    s.file = fs::relative(paths[i], dir).generic_string();
    absl::StatusOr<std::string> xml = ReadFile(paths[i]);
    if (!xml.ok()) {
      s.error = StatusText(xml.status());
      return;
    }
    s.content_hash = fmt::format("{:016x}", Fnv1a64(*xml));
    docgraph::JatsOptions options;
    options.fallback_id = paths[i].stem().string();
    absl::StatusOr<Document> doc = docgraph::ParseJats(*xml, options);
    if (!doc.ok()) {
      s.error = StatusText(doc.status());
      return;
    }
    s.parsed = true;
    if (!docgraph::ImradFilter(*doc)) {
      s.error = "not an IMRaD article";
      return;
    }
    s.doc = std::move(*doc);
  });

  Corpus corpus;
  corpus.files = paths.size();
  std::string digest;
  std::set<std::string> seen_ids;
  for (Slot& s : slots) {
    digest += s.file + "\t" + s.content_hash + "\n";
    corpus.parsed += s.parsed;
    if (s.doc && !seen_ids.insert(s.doc->doc_id).second) {
      s.error = "duplicate document id " + s.doc->doc_id;
      s.doc.reset();
    }
    if (s.doc) {
      corpus.documents.push_back({s.file, std::move(*s.doc)});
    } else {
      corpus.skipped.push_back({s.file, s.error});
    }
  }
  corpus.corpus_hash = fmt::format("{:016x}", Fnv1a64(digest));
  if (corpus.documents.empty()) {
    return MakeError(ErrorKind::kMissingSection,
                     fmt::format("none of {} files under {} is a usable article",
                                 corpus.files, dir));
  }
  return corpus;
}

std::string ManifestJson(const Corpus& corpus) {
  nlohmann::ordered_json j;
  j["corpus_hash"] = corpus.corpus_hash;
  j["files"] = corpus.files;
  j["parsed"] = corpus.parsed;
  j["passed"] = corpus.documents.size();
  j["pass_rate"] = corpus.pass_rate();
  nlohmann::ordered_json docs = nlohmann::ordered_json::array();
  for (const CorpusDocument& d : corpus.documents) {
    nlohmann::ordered_json conditions = nlohmann::ordered_json::object();
    for (Condition c : {Condition::kAbstract, Condition::kIntroduction,
                        Condition::kPartial, Condition::kFullText}) {
      absl::StatusOr<Document> slice = docgraph::ExtractCondition(d.doc, c);
      if (slice.ok()) {
        conditions[std::string(docgraph::ConditionName(c))] =
            slice->tokens.size();
      }
    }
    docs.push_back({{"doc_id", d.doc.doc_id},
                    {"file", d.file},
                    {"words", d.doc.word_count},
                    {"sections", d.doc.BodySectionCount()},
                    {"tokens", d.doc.tokens.size()},
                    {"condition_tokens", conditions}});
  }
  j["documents"] = std::move(docs);
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  for (const SkippedFile& s : corpus.skipped) {
    skipped.push_back({{"file", s.file}, {"reason", s.reason}});
  }
  j["skipped"] = std::move(skipped);
  return j.dump(2) + "\n";
}

absl::StatusOr<Resources> LoadResources(const PipelineConfig& config) {
  Resources res;
  res.config = config;
  LC_ASSIGN_OR_RETURN(res.provider, MakeProvider(config));
  if (!config.concept_graph.empty()) {
    LC_ASSIGN_OR_RETURN(kg::ConceptGraph graph,
                        kg::ReadConceptGraph(config.concept_graph));
    res.graph = std::move(graph);
  }
  if (!config.dictionary.empty()) {
    LC_ASSIGN_OR_RETURN(kg::Dictionary dict,
                        kg::ReadDictionary(config.dictionary));
    res.linker.emplace(dict);
  }
  if (res.graph && res.graph->size() > 0) {
    kg::GatParams params;
    if (!config.gat_params.empty()) {
      std::ifstream in(config.gat_params, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      LC_ASSIGN_OR_RETURN(params, kg::ParseGatParams(ss.str()));
    } else {
      size_t dk = res.graph->dim();
      params = kg::DefaultGatParams(dk, dk, res.provider->dim(), config.seed,
                                    config.lambda);
    }
    params.lambda = config.lambda;
    LC_RETURN_IF_ERROR(params.Validate());
    if (params.d_k() != res.graph->dim() || params.d() != res.provider->dim()) {
      return MakeError(ErrorKind::kDimMismatch,
                       fmt::format("GAT parameters are {}->{} but the graph is "
                                   "{}-dim and the embedder {}-dim",
                                   params.d_k(), params.d(), res.graph->dim(),
                                   res.provider->dim()));
    }
    res.gat = std::move(params);
  }
  return res;
}

absl::StatusOr<std::vector<chunkers::Chunk>> ChunkDocument(
    Strategy strategy, const Document& doc, const Resources& res) {
  const PipelineConfig& c = res.config;
  embed::EmbeddingProvider& provider = *res.provider;
  switch (strategy) {
    case Strategy::kNaive:
      return chunkers::NaiveChunks(doc, provider, c.naive_size, c.naive_overlap);
    case Strategy::kSemantic:
      return chunkers::SemanticChunks(doc, provider, c.semantic_threshold);
    default:
      break;
  }
  LC_ASSIGN_OR_RETURN(embed::TokenEmbeddings tokens,
                      embed::EncodeDocument(doc, provider, c.encoder_window,
                                            c.encoder_overlap));
  if (strategy == Strategy::kLate) {
    return chunkers::LateSentenceChunks(doc, tokens.vectors);
  }
  docgraph::StructureGraph graph = docgraph::BuildStructureGraph(doc);
  if (strategy == Strategy::kStructure) {
    return chunkers::StructureChunks(doc, graph, tokens.vectors, {}, c.boundary);
  }
  if (!res.graph || !res.linker || !res.gat) {
    return MakeError(ErrorKind::kInvalidConfig,
                     "KG strategies need a concept graph and dictionary");
  }
  LC_ASSIGN_OR_RETURN(kg::InfusionResult infused,
                      kg::InfuseDocument(doc, tokens, *res.linker, *res.graph,
                                         *res.gat));
  return chunkers::StructureChunks(doc, graph, infused.tokens.vectors,
                                   infused.mentions, c.boundary);
}

absl::StatusOr<IndexBuild> BuildIndex(Strategy strategy, Condition condition,
                                      const Corpus& corpus,
                                      const Resources& res, size_t workers) {
  auto start = std::chrono::steady_clock::now();
  const size_t n = corpus.documents.size();
  std::vector<absl::StatusOr<std::vector<chunkers::Chunk>>> per_doc(
      n, absl::UnknownError("not run"));
  ParallelFor(n, workers, [&](size_t i) {
    absl::StatusOr<Document> slice =
        docgraph::ExtractCondition(corpus.documents[i].doc, condition);
    if (!slice.ok()) {
      per_doc[i] = slice.status();
      return;
    }
    per_doc[i] = ChunkDocument(strategy, *slice, res);
  });

  IndexBuild build;
  build.strategy = strategy;
  build.condition = condition;
  for (size_t i = 0; i < n; ++i) {
    if (!per_doc[i].ok()) {
      const absl::Status& s = per_doc[i].status();
      if (HasErrorKind(s, ErrorKind::kProviderFailure)) {
        return Annotate(s, "document " + corpus.documents[i].doc.doc_id);
      }
      build.skipped.push_back({corpus.documents[i].file, StatusText(s)});
      continue;
    }
    ++build.documents;
    for (chunkers::Chunk& c : *per_doc[i]) build.chunks.push_back(std::move(c));
  }
  if (build.chunks.empty()) {
    return MakeError(ErrorKind::kEmptyIndex,
                     fmt::format("no chunks for {}/{}", StrategyName(strategy),
                                 docgraph::ConditionName(condition)));
  }
  LC_ASSIGN_OR_RETURN(build.index, retrieval::ChunkIndex::Build(build.chunks));
  build.wall_seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return build;
}

std::string IndexFileName(Strategy strategy, Condition condition) {
  return fmt::format("{}.{}.idx", StrategyName(strategy),
                     docgraph::ConditionName(condition));
}

std::string ChunkSidecar(const std::vector<chunkers::Chunk>& chunks) {
  std::string out;
  for (const chunkers::Chunk& c : chunks) {
    nlohmann::ordered_json j;
    j["chunk_id"] = c.chunk_id;
    j["doc_id"] = c.doc_id;
    j["span"] = {c.span.begin, c.span.end};
    j["primary_label"] = c.primary_label;
    j["text"] = c.text;
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<bench::BenchmarkQuestion> GenerateBenchmark(const Corpus& corpus,
                                                        const Resources& res) {
  std::vector<bench::BenchmarkQuestion> out;
  for (const CorpusDocument& d : corpus.documents) {
    std::vector<kg::EntityMention> mentions;
    if (res.linker) mentions = res.linker->Link(d.doc);
    for (bench::BenchmarkQuestion& q :
         bench::GenerateQuestions(d.doc, mentions, res.config.max_per_template)) {
      out.push_back(std::move(q));
    }
  }
  return out;
}

retrieval::Query MakeQuery(const bench::BenchmarkQuestion& question,
                           const std::vector<double>& vector,
                           const Resources& res) {
  retrieval::Query q;
  q.id = question.question_id;
  q.vector = vector;
  if (res.linker) {
    std::vector<std::string> words;
    for (const RawToken& t : Tokenize(question.text)) words.push_back(t.text);
    std::set<std::string> cuis;
    for (const kg::EntityMention& m : res.linker->Link(words)) cuis.insert(m.cui);
    q.cuis.assign(cuis.begin(), cuis.end());
  }
  return q;
}

absl::StatusOr<std::vector<retrieval::Query>> EmbedQuestions(
    const std::vector<bench::BenchmarkQuestion>& questions,
    const Resources& res) {
  std::vector<retrieval::Query> out;
  out.reserve(questions.size());
  for (const bench::BenchmarkQuestion& q : questions) {
    absl::StatusOr<std::vector<double>> v = embed::EmbedQuery(q.text, *res.provider);
    if (!v.ok()) return Annotate(v.status(), "question " + q.question_id);
    out.push_back(MakeQuery(q, *v, res));
  }
  return out;
}

absl::StatusOr<std::vector<retrieval::RetrievalResult>> RetrieveAll(
    Strategy strategy, const retrieval::ChunkIndex& index,
    const std::vector<retrieval::Query>& queries, const Resources& res,
    double beta, size_t k) {
  std::vector<absl::StatusOr<retrieval::RetrievalResult>> results(
      queries.size(), absl::UnknownError("not run"));
  const bool hybrid = strategy == Strategy::kGralcGraph;
  if (hybrid && !res.graph) {
    return MakeError(ErrorKind::kInvalidConfig,
                     "hybrid retrieval needs a concept graph");
  }
  ParallelFor(queries.size(), res.config.workers, [&](size_t i) {
    results[i] = hybrid ? retrieval::HybridRetrieve(queries[i], index,
                                                    *res.graph, beta, k)
                        : retrieval::DenseRetrieve(queries[i], index, k);
  });
  std::vector<retrieval::RetrievalResult> out;
  for (auto& r : results) {
    if (!r.ok()) return r.status();
    out.push_back(std::move(*r));
  }
  return out;
}

std::map<std::string, size_t> SectionCounts(const Corpus& corpus,
                                            Condition condition) {
  std::map<std::string, size_t> out;
  for (const CorpusDocument& d : corpus.documents) {
    absl::StatusOr<Document> slice = docgraph::ExtractCondition(d.doc, condition);
    out[std::string(docgraph::BaseDocId(d.doc.doc_id))] =
        slice.ok() ? slice->BodySectionCount() : 0;
  }
  return out;
}

absl::StatusOr<eval::ReportRow> EvaluateRetrieval(
    Strategy strategy, Condition condition, const retrieval::ChunkIndex& index,
    const std::vector<bench::BenchmarkQuestion>& questions,
    const std::vector<retrieval::RetrievalResult>& results,
    const std::map<std::string, size_t>& section_counts,
    std::vector<eval::EvalQuery>* per_query) {
  if (questions.size() != results.size()) {
    return MakeError(ErrorKind::kMissingGold,
                     "questions and results are misaligned");
  }
  std::vector<eval::EvalQuery> queries;
  for (size_t i = 0; i < questions.size(); ++i) {
    const bench::BenchmarkQuestion& q = questions[i];
    auto it = section_counts.find(std::string(docgraph::BaseDocId(q.gold_doc_id)));
    size_t sections = it == section_counts.end() ? 0 : it->second;
    queries.push_back(eval::MakeEvalQuery(results[i], index, q.gold_doc_id,
                                          q.required_sections, sections));
  }
  LC_ASSIGN_OR_RETURN(eval::ReportRow row,
                      eval::ComputeRow(std::string(StrategyName(strategy)),
                                       std::string(docgraph::ConditionName(condition)),
                                       queries, index.size()));
  if (per_query != nullptr) *per_query = std::move(queries);
  return row;
}

std::string ContextBundles(
    const std::vector<bench::BenchmarkQuestion>& questions,
    const std::vector<retrieval::RetrievalResult>& results,
    const retrieval::ChunkIndex& index,
    const std::map<std::string, std::string>& chunk_text) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (size_t i = 0; i < questions.size() && i < results.size(); ++i) {
    nlohmann::ordered_json hits = nlohmann::ordered_json::array();
    for (size_t r = 0; r < results[i].hits.size(); ++r) {
      const retrieval::Hit& h = results[i].hits[r];
      auto text = chunk_text.find(h.chunk_id);
      hits.push_back({{"rank", r + 1},
                      {"chunk_id", h.chunk_id},
                      {"doc_id", h.doc_id},
                      {"score", h.score},
                      {"dense", h.dense},
                      {"kg", h.kg},
                      {"section", h.primary_label},
                      {"section_index", h.primary_section},
                      {"section_kind", docgraph::SectionKindName(
                                           index.entries()[h.entry].primary_kind)},
                      {"text", text == chunk_text.end() ? "" : text->second}});
    }
    out.push_back({{"question_id", questions[i].question_id},
                   {"question", questions[i].text},
                   {"gold_doc_id", questions[i].gold_doc_id},
                   {"contexts", std::move(hits)}});
  }
  return out.dump(2) + "\n";
}

}  // namespace latechunk::pipeline
