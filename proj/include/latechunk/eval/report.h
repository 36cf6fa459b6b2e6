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

#ifndef LATECHUNK_EVAL_REPORT_H_
#define LATECHUNK_EVAL_REPORT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/eval/metrics.h"

namespace latechunk::eval {

inline constexpr int kReportSchemaVersion = 1;

// Metric columns in rendering order.
const std::vector<std::string>& MetricColumns();

struct ReportRow {
  std::string strategy;
  std::string condition;
  size_t queries = 0;
  size_t chunks = 0;
  std::vector<std::pair<std::string, double>> metrics;

  std::optional<double> Get(std::string_view metric) const;
};

struct EfficiencyRow {
  std::string strategy;
  std::string condition;
  size_t documents = 0;
  size_t chunks = 0;
  double wall_seconds = 0;
};

struct ReportMetadata {
  std::string corpus_hash;
  std::string config_hash;
  uint64_t seed = 0;
  std::string timestamp;
};

// Wall times live in efficiency rows, which only the timing format renders;
// every other format depends on the inputs alone.
struct EvalReport {
  ReportMetadata metadata;
  std::vector<ReportRow> rows;
  std::vector<EfficiencyRow> efficiency;
};

// Every MetricColumns() entry for one strategy x condition cell.
absl::StatusOr<ReportRow> ComputeRow(std::string strategy,
                                     std::string condition,
                                     std::span<const EvalQuery> queries,
                                     size_t chunks);

enum class ReportFormat { kCsv, kJson, kMarkdown, kPlotData, kTiming };

// "csv", "json", "md", "plot", "timing"; UnsupportedFormat otherwise.
absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name);
std::string_view ReportFileName(ReportFormat format);

std::string EmitReport(const EvalReport& report, ReportFormat format);
absl::StatusOr<std::string> EmitReport(const EvalReport& report,
                                       std::string_view format);

// Reads the JSON rendering back. Rows may lack metric columns.
absl::StatusOr<EvalReport> ParseReportJson(std::string_view text);

struct ComparisonCell {
  std::string metric;
  double baseline = 0;
  double value = 0;
  double delta = 0;
  std::optional<double> ratio;  // absent when the baseline is 0
};

struct ComparisonRow {
  std::string strategy;
  std::string condition;
  std::string baseline;  // label of what the row was compared against
  std::vector<ComparisonCell> cells;
};

struct Comparison {
  std::vector<ComparisonRow> rows;
  std::vector<std::string> warnings;  // skipped metric columns
};

// Matches rows on (strategy, condition). DisjointRows if none match.
absl::StatusOr<Comparison> CompareReports(const EvalReport& baseline,
                                          const EvalReport& candidate);

// Every other strategy against the named one, condition by condition.
absl::StatusOr<Comparison> CompareToBaseline(const EvalReport& report,
                                             std::string_view strategy);

std::string FormatComparisonMarkdown(const Comparison& comparison);

}  // namespace latechunk::eval

#endif  // LATECHUNK_EVAL_REPORT_H_
