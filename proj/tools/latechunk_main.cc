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

// Command-line driver: ingest, index, bench-gen, retrieve, eval, compare,
// all, plus synth for generating a self-contained demo corpus.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fmt/format.h"
#include "json.hpp"
#include "latechunk/pipeline/commands.h"
#include "latechunk/synth/corpus.h"
#include "latechunk/util/status.h"

namespace {

namespace fs = std::filesystem;
using latechunk::ErrorKind;
using latechunk::HasErrorKind;
using latechunk::pipeline::PipelineConfig;
using latechunk::pipeline::Strategy;
using latechunk::docgraph::Condition;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

int Fail(const absl::Status& status) {
  fmt::print(stderr, "error: {}\n", std::string(status.message()));
  return HasErrorKind(status, ErrorKind::kInvalidConfig) ? kExitUsage
                                                         : kExitData;
}

struct GlobalFlags {
  std::string config;
  std::optional<uint64_t> seed;
  std::optional<size_t> workers;
  std::optional<std::string> out_dir;
  std::optional<double> beta;
};

absl::StatusOr<PipelineConfig> Load(const GlobalFlags& g) {
  if (g.config.empty()) {
    return latechunk::MakeError(ErrorKind::kInvalidConfig,
                                "--config is required");
  }
  LC_ASSIGN_OR_RETURN(PipelineConfig c,
                      latechunk::pipeline::LoadConfig(g.config));
  if (g.seed) c.seed = *g.seed;
  if (g.workers) c.workers = std::max<size_t>(1, *g.workers);
  if (g.out_dir) c.out_dir = *g.out_dir;
  if (g.beta) {
    if (*g.beta < 0 || *g.beta > 1) {
      return latechunk::MakeError(ErrorKind::kInvalidConfig,
                                  "--beta must lie in [0, 1]");
    }
    c.beta = *g.beta;
  }
  return c;
}

absl::StatusOr<std::vector<Strategy>> Strategies(
    const std::vector<std::string>& names) {
  std::vector<Strategy> out;
  for (const std::string& n : names) {
    auto s = latechunk::pipeline::ParseStrategy(n);
    if (!s) {
      return latechunk::MakeError(ErrorKind::kInvalidConfig,
                                  "unknown strategy " + n);
    }
    out.push_back(*s);
  }
  return out;
}

absl::StatusOr<std::vector<Condition>> Conditions(
    const std::vector<std::string>& names) {
  std::vector<Condition> out;
  for (const std::string& n : names) {
    auto c = latechunk::docgraph::ParseCondition(n);
    if (!c) {
      return latechunk::MakeError(ErrorKind::kInvalidConfig,
                                  "unknown condition " + n);
    }
    out.push_back(*c);
  }
  return out;
}

void PrintReport(const latechunk::eval::EvalReport& report) {
  fmt::print("{}", latechunk::eval::EmitReport(
                       report, latechunk::eval::ReportFormat::kMarkdown));
}

absl::Status Synth(const std::string& out,
                   const latechunk::synth::SynthOptions& opts, size_t dim,
                   double context_mix) {
  latechunk::synth::SynthCorpus corpus = latechunk::synth::GenerateCorpus(opts);
  LC_RETURN_IF_ERROR(latechunk::synth::WriteCorpus(corpus, out));
  nlohmann::ordered_json cfg;
  cfg["corpus_dir"] = "articles";
  cfg["concept_graph"] = "concepts.tsv";
  cfg["dictionary"] = "dictionary.tsv";
  cfg["provider"] = {
      {"kind", "deterministic"}, {"dim", dim}, {"context_mix", context_mix}};
  cfg["seed"] = opts.seed;
  cfg["out_dir"] = "out";
  std::ofstream f(fs::path(out) / "config.json");
  f << cfg.dump(2) << "\n";
  if (!f) {
    return latechunk::MakeError(ErrorKind::kIo, "cannot write config.json");
  }
  fmt::print("wrote {} articles to {}\n", corpus.articles.size(), out);
  return absl::OkStatus();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-aware late-chunking retrieval engine"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_option("--config", g.config, "pipeline config (JSON)");
  app.add_option("--seed", g.seed, "override the config seed");
  app.add_option("--workers", g.workers, "document-level worker threads");
  app.add_option("--out-dir", g.out_dir, "override the output directory");
  app.add_option("--beta", g.beta, "hybrid score weight on the dense term");

  std::vector<std::string> strategy_names, condition_names;
  bool timing = false;

  CLI::App* ingest = app.add_subcommand("ingest", "parse and filter the corpus");
  CLI::App* index = app.add_subcommand("index", "chunk, embed and index");
  index->add_option("--strategy", strategy_names, "strategies (default all)");
  index->add_option("--condition", condition_names, "conditions (default all)");
  index->add_flag("--timing", timing, "single worker, for wall-time rows");
  CLI::App* bench = app.add_subcommand("bench-gen", "generate questions");
  CLI::App* retrieve = app.add_subcommand("retrieve", "retrieve top-k contexts");
  retrieve->add_option("--strategy", strategy_names, "strategies (default all)");
  retrieve->add_option("--condition", condition_names,
                       "conditions (default all)");
  CLI::App* eval = app.add_subcommand("eval", "score every index");
  std::vector<std::string> reports;
  std::optional<std::string> baseline;
  CLI::App* compare = app.add_subcommand("compare", "diff report.json files");
  compare->add_option("reports", reports, "report.json paths")->required();
  compare->add_option("--baseline-strategy", baseline,
                      "compare strategies within each report");
  CLI::App* all = app.add_subcommand("all", "run the whole pipeline");
  std::string synth_out;
  latechunk::synth::SynthOptions synth_opts;
  size_t synth_dim = 384;
  double synth_mix = 0.0, entity_rate = -1;
  CLI::App* synth = app.add_subcommand("synth", "write a synthetic corpus");
  synth->add_option("--out", synth_out, "output directory")->required();
  synth->add_option("--documents", synth_opts.documents, "article count");
  synth->add_option("--seed", synth_opts.seed, "generator seed");
  synth->add_option("--function-word-rate", synth_opts.function_word_rate,
                    "share of stopwords in sentences");
  synth->add_option("--entity-rate", entity_rate,
                    "per-sentence chance of naming the section entity");
  synth->add_option("--lead-in-words", synth_opts.lead_in_words,
                    "entity-free opening words of Methods, Results, Discussion");
  synth->add_option("--dim", synth_dim, "embedding dimension in config.json");
  synth->add_option("--context-mix", synth_mix,
                    "document-mean weight in config.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (synth->parsed()) {
    if (entity_rate >= 0) {
      synth_opts.method_rate = synth_opts.marker_rate = synth_opts.target_rate =
          entity_rate;
    }
    absl::Status s = Synth(synth_out, synth_opts, synth_dim, synth_mix);
    return s.ok() ? kExitOk : Fail(s);
  }
  if (compare->parsed()) {
    auto out = latechunk::pipeline::CmdCompare(reports, baseline);
    if (!out.ok()) return Fail(out.status());
    fmt::print("{}", *out);
    return kExitOk;
  }

  auto config = Load(g);
  if (!config.ok()) return Fail(config.status());
  auto strategies = Strategies(strategy_names);
  if (!strategies.ok()) return Fail(strategies.status());
  auto conditions = Conditions(condition_names);
  if (!conditions.ok()) return Fail(conditions.status());

  if (ingest->parsed()) {
    auto corpus = latechunk::pipeline::CmdIngest(*config);
    if (!corpus.ok()) return Fail(corpus.status());
    fmt::print("{} of {} files kept ({:.1f}%)\n", corpus->documents.size(),
               corpus->files, 100.0 * corpus->pass_rate());
  } else if (index->parsed()) {
    auto rows = latechunk::pipeline::CmdIndex(*config, *strategies,
                                              *conditions, timing);
    if (!rows.ok()) return Fail(rows.status());
    for (const auto& r : *rows) {
      fmt::print("{}.{}: {} chunks from {} documents in {:.3f}s\n", r.strategy,
                 r.condition, r.chunks, r.documents, r.wall_seconds);
    }
  } else if (bench->parsed()) {
    auto questions = latechunk::pipeline::CmdBenchGen(*config);
    if (!questions.ok()) return Fail(questions.status());
    fmt::print("{} questions\n", questions->size());
  } else if (retrieve->parsed()) {
    absl::Status s =
        latechunk::pipeline::CmdRetrieve(*config, *strategies, *conditions);
    if (!s.ok()) return Fail(s);
  } else if (eval->parsed()) {
    auto report = latechunk::pipeline::CmdEval(*config);
    if (!report.ok()) return Fail(report.status());
    PrintReport(*report);
  } else if (all->parsed()) {
    auto report = latechunk::pipeline::CmdAll(*config);
    if (!report.ok()) return Fail(report.status());
    PrintReport(*report);
  }
  return kExitOk;
}
