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

#include "latechunk/pipeline/commands.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "fmt/format.h"
#include "json.hpp"
#include "latechunk/util/status.h"

namespace latechunk::pipeline {
namespace {

namespace fs = std::filesystem;
using docgraph::Condition;

absl::Status WriteText(const std::string& path, const std::string& text) {
  std::error_code ec;
  fs::create_directories(fs::path(path).parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) return MakeError(ErrorKind::kIo, "cannot write " + path);
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadText(const std::string& path, ErrorKind missing) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return MakeError(missing, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Strategy> OrAll(const std::vector<Strategy>& chosen,
                            const PipelineConfig& c) {
  return chosen.empty() ? c.strategies : chosen;
}

std::vector<Condition> OrAll(const std::vector<Condition>& chosen,
                             const PipelineConfig& c) {
  return chosen.empty() ? c.conditions : chosen;
}

std::string IndexPath(const PipelineConfig& c, Strategy s, Condition cond) {
  return OutPath(c, "index/" + IndexFileName(s, cond));
}

std::string SidecarPath(const PipelineConfig& c, Strategy s, Condition cond) {
  return OutPath(c, fmt::format("index/{}.{}.chunks.jsonl", StrategyName(s),
                                docgraph::ConditionName(cond)));
}

absl::StatusOr<std::vector<bench::BenchmarkQuestion>> ReadBenchmark(
    const PipelineConfig& c) {
  LC_ASSIGN_OR_RETURN(std::string text,
                      ReadText(OutPath(c, "benchmark.jsonl"), ErrorKind::kIo));
  return bench::ParseQuestionsJsonl(text);
}

absl::StatusOr<std::map<std::string, std::string>> ReadSidecar(
    const std::string& path) {
  LC_ASSIGN_OR_RETURN(std::string text, ReadText(path, ErrorKind::kMissingIndex));
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      out[j.at("chunk_id").get<std::string>()] = j.at("text").get<std::string>();
    } catch (const std::exception& e) {
      return MakeError(ErrorKind::kMissingIndex,
                       fmt::format("bad chunk sidecar {}: {}", path, e.what()));
    }
  }
  return out;
}

absl::Status WriteReport(const PipelineConfig& c, const eval::EvalReport& r) {
  for (eval::ReportFormat f :
       {eval::ReportFormat::kCsv, eval::ReportFormat::kJson,
        eval::ReportFormat::kMarkdown, eval::ReportFormat::kPlotData}) {
    LC_RETURN_IF_ERROR(WriteText(OutPath(c, std::string(eval::ReportFileName(f))),
                                 eval::EmitReport(r, f)));
  }
  return absl::OkStatus();
}

size_t RetrievalDepth(const PipelineConfig& c) {
  return std::max<size_t>(c.max_k(), 20);
}

}  // namespace

std::string OutPath(const PipelineConfig& config, const std::string& relative) {
  return (fs::path(config.out_dir) / relative).string();
}

absl::StatusOr<Corpus> CmdIngest(const PipelineConfig& config) {
  LC_ASSIGN_OR_RETURN(Corpus corpus,
                      IngestCorpus(config.corpus_dir, config.workers));
  for (const SkippedFile& s : corpus.skipped) {
    fmt::print(stderr, "skipped {}: {}\n", s.file, s.reason);
  }
  LC_RETURN_IF_ERROR(WriteText(OutPath(config, "manifest.json"),
                               ManifestJson(corpus)));
  return corpus;
}

absl::StatusOr<std::vector<eval::EfficiencyRow>> CmdIndex(
    const PipelineConfig& config, const std::vector<Strategy>& strategies,
    const std::vector<Condition>& conditions, bool timing) {
  LC_ASSIGN_OR_RETURN(Corpus corpus, CmdIngest(config));
  LC_ASSIGN_OR_RETURN(Resources res, LoadResources(config));
  const size_t workers = timing ? 1 : config.workers;
  std::vector<eval::EfficiencyRow> rows;
  for (Strategy s : OrAll(strategies, config)) {
    for (Condition cond : OrAll(conditions, config)) {
      LC_ASSIGN_OR_RETURN(IndexBuild build,
                          BuildIndex(s, cond, corpus, res, workers));
      for (const SkippedFile& f : build.skipped) {
        fmt::print(stderr, "{}/{}: skipped {}: {}\n", StrategyName(s),
                   docgraph::ConditionName(cond), f.file, f.reason);
      }
      std::error_code ec;
      fs::create_directories(OutPath(config, "index"), ec);
      LC_RETURN_IF_ERROR(build.index.Write(IndexPath(config, s, cond)));
      LC_RETURN_IF_ERROR(WriteText(SidecarPath(config, s, cond),
                                   ChunkSidecar(build.chunks)));
      rows.push_back({std::string(StrategyName(s)),
                      std::string(docgraph::ConditionName(cond)),
                      build.documents, build.index.size(), build.wall_seconds});
    }
  }
  eval::EvalReport timing_report;
  timing_report.efficiency = rows;
  LC_RETURN_IF_ERROR(
      WriteText(OutPath(config, "timing.csv"),
                eval::EmitReport(timing_report, eval::ReportFormat::kTiming)));
  return rows;
}

absl::StatusOr<std::vector<bench::BenchmarkQuestion>> CmdBenchGen(
    const PipelineConfig& config) {
  LC_ASSIGN_OR_RETURN(Corpus corpus, IngestCorpus(config.corpus_dir, config.workers));
  LC_ASSIGN_OR_RETURN(Resources res, LoadResources(config));
  std::vector<bench::BenchmarkQuestion> questions = GenerateBenchmark(corpus, res);
  LC_RETURN_IF_ERROR(WriteText(OutPath(config, "benchmark.jsonl"),
                               bench::FormatQuestionsJsonl(questions)));
  return questions;
}

absl::Status CmdRetrieve(const PipelineConfig& config,
                         const std::vector<Strategy>& strategies,
                         const std::vector<Condition>& conditions) {
  LC_ASSIGN_OR_RETURN(std::vector<bench::BenchmarkQuestion> questions,
                      ReadBenchmark(config));
  LC_ASSIGN_OR_RETURN(Resources res, LoadResources(config));
  LC_ASSIGN_OR_RETURN(std::vector<retrieval::Query> queries,
                      EmbedQuestions(questions, res));
  for (Strategy s : OrAll(strategies, config)) {
    for (Condition cond : OrAll(conditions, config)) {
      LC_ASSIGN_OR_RETURN(retrieval::ChunkIndex index,
                          retrieval::ChunkIndex::Read(IndexPath(config, s, cond)));
      LC_ASSIGN_OR_RETURN(auto texts, ReadSidecar(SidecarPath(config, s, cond)));
      LC_ASSIGN_OR_RETURN(auto results,
                          RetrieveAll(s, index, queries, res, config.beta,
                                      RetrievalDepth(config)));
      LC_RETURN_IF_ERROR(WriteText(
          OutPath(config, fmt::format("retrieval/{}.{}.json", StrategyName(s),
                                      docgraph::ConditionName(cond))),
          ContextBundles(questions, results, index, texts)));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<eval::EvalReport> CmdEval(const PipelineConfig& config) {
  LC_ASSIGN_OR_RETURN(std::vector<bench::BenchmarkQuestion> questions,
                      ReadBenchmark(config));
  LC_ASSIGN_OR_RETURN(Corpus corpus, IngestCorpus(config.corpus_dir, config.workers));
  LC_ASSIGN_OR_RETURN(Resources res, LoadResources(config));
  LC_ASSIGN_OR_RETURN(std::vector<retrieval::Query> queries,
                      EmbedQuestions(questions, res));
  eval::EvalReport report;
  report.metadata = {corpus.corpus_hash, ConfigHash(config), config.seed,
                     config.timestamp};
  for (Strategy s : config.strategies) {
    for (Condition cond : config.conditions) {
      LC_ASSIGN_OR_RETURN(retrieval::ChunkIndex index,
                          retrieval::ChunkIndex::Read(IndexPath(config, s, cond)));
      LC_ASSIGN_OR_RETURN(auto results,
                          RetrieveAll(s, index, queries, res, config.beta,
                                      RetrievalDepth(config)));
      LC_ASSIGN_OR_RETURN(eval::ReportRow row,
                          EvaluateRetrieval(s, cond, index, questions, results,
                                            SectionCounts(corpus, cond)));
      report.rows.push_back(std::move(row));
    }
  }
  LC_RETURN_IF_ERROR(WriteReport(config, report));
  return report;
}

absl::StatusOr<std::string> CmdCompare(
    const std::vector<std::string>& report_paths,
    const std::optional<std::string>& baseline_strategy) {
  std::vector<eval::EvalReport> reports;
  for (const std::string& path : report_paths) {
    LC_ASSIGN_OR_RETURN(std::string text, ReadText(path, ErrorKind::kIo));
    LC_ASSIGN_OR_RETURN(eval::EvalReport r, eval::ParseReportJson(text));
    reports.push_back(std::move(r));
  }
  if (reports.empty()) {
    return MakeError(ErrorKind::kInvalidConfig, "no reports to compare");
  }
  std::string out;
  if (baseline_strategy) {
    for (size_t i = 0; i < reports.size(); ++i) {
      LC_ASSIGN_OR_RETURN(eval::Comparison c,
                          eval::CompareToBaseline(reports[i], *baseline_strategy));
      out += fmt::format("## {}\n\n", report_paths[i]);
      out += eval::FormatComparisonMarkdown(c) + "\n";
    }
    return out;
  }
  if (reports.size() < 2) {
    return MakeError(ErrorKind::kInvalidConfig,
                     "need two reports or a baseline strategy");
  }
  for (size_t i = 1; i < reports.size(); ++i) {
    LC_ASSIGN_OR_RETURN(eval::Comparison c,
                        eval::CompareReports(reports[0], reports[i]));
    out += fmt::format("## {} vs {}\n\n", report_paths[i], report_paths[0]);
    out += eval::FormatComparisonMarkdown(c) + "\n";
  }
  return out;
}

absl::StatusOr<eval::EvalReport> CmdAll(const PipelineConfig& config) {
  LC_ASSIGN_OR_RETURN(std::vector<eval::EfficiencyRow> timing, CmdIndex(config));
  LC_ASSIGN_OR_RETURN(auto questions, CmdBenchGen(config));
  (void)questions;
  LC_RETURN_IF_ERROR(CmdRetrieve(config));
  LC_ASSIGN_OR_RETURN(eval::EvalReport report, CmdEval(config));
  report.efficiency = std::move(timing);
  return report;
}

}  // namespace latechunk::pipeline
