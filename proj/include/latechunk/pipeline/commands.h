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

#ifndef LATECHUNK_PIPELINE_COMMANDS_H_
#define LATECHUNK_PIPELINE_COMMANDS_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/eval/report.h"
#include "latechunk/pipeline/config.h"
#include "latechunk/pipeline/runner.h"

namespace latechunk::pipeline {

// Output layout under PipelineConfig::out_dir:
//   manifest.json                       ingest
//   index/<strategy>.<condition>.idx    index
//   index/<strategy>.<condition>.chunks.jsonl
//   timing.csv                          index (wall times)
//   benchmark.jsonl                     bench-gen
//   retrieval/<strategy>.<condition>.json   retrieve
//   report.{csv,json,md}, plotdata.csv  eval
std::string OutPath(const PipelineConfig& config, const std::string& relative);

absl::StatusOr<Corpus> CmdIngest(const PipelineConfig& config);

// Empty selections mean every configured strategy or condition. With
// timing set, documents are processed on one worker.
absl::StatusOr<std::vector<eval::EfficiencyRow>> CmdIndex(
    const PipelineConfig& config, const std::vector<Strategy>& strategies = {},
    const std::vector<docgraph::Condition>& conditions = {},
    bool timing = false);

absl::StatusOr<std::vector<bench::BenchmarkQuestion>> CmdBenchGen(
    const PipelineConfig& config);

absl::Status CmdRetrieve(const PipelineConfig& config,
                         const std::vector<Strategy>& strategies = {},
                         const std::vector<docgraph::Condition>& conditions = {});

// Needs the benchmark and every index. MissingIndex otherwise.
absl::StatusOr<eval::EvalReport> CmdEval(const PipelineConfig& config);

absl::StatusOr<std::string> CmdCompare(
    const std::vector<std::string>& report_paths,
    const std::optional<std::string>& baseline_strategy);

// ingest, index, bench-gen, retrieve and eval in one go.
absl::StatusOr<eval::EvalReport> CmdAll(const PipelineConfig& config);

}  // namespace latechunk::pipeline

#endif  // LATECHUNK_PIPELINE_COMMANDS_H_
