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

#include "latechunk/eval/report.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fmt/format.h"
#include "json.hpp"
#include "latechunk/util/status.h"

namespace latechunk::eval {
namespace {

using Table = std::vector<std::vector<std::string>>;

std::string Num(double v) { return fmt::format("{:.6f}", v); }

// Markdown table with every column padded to its widest cell. Columns past
// `text_columns` are right-aligned.
std::string AlignedTable(const Table& table, size_t text_columns) {
  if (table.empty()) return "";
  std::vector<size_t> width(table[0].size(), 3);
  for (const auto& row : table) {
    for (size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto render = [&](const std::vector<std::string>& row) {
    std::string line = "|";
    for (size_t c = 0; c < row.size(); ++c) {
      line += c < text_columns ? fmt::format(" {:<{}} |", row[c], width[c])
                               : fmt::format(" {:>{}} |", row[c], width[c]);
    }
    return line + "\n";
  };
  std::string out = render(table[0]);
  out += "|";
  for (size_t c = 0; c < width.size(); ++c) {
    out += c < text_columns ? fmt::format(" {:-<{}} |", "", width[c])
                            : fmt::format(" {:->{}}:|", "", width[c]);
  }
  out += "\n";
  for (size_t r = 1; r < table.size(); ++r) out += render(table[r]);
  return out;
}

std::string Csv(const Table& table) {
  std::string out;
  for (const auto& row : table) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      const std::string& cell = row[c];
      if (cell.find_first_of(",\"\n") == std::string::npos) {
        out += cell;
      } else {
        out += '"';
        for (char ch : cell) {
          if (ch == '"') out += '"';
          out += ch;
        }
        out += '"';
      }
    }
    out += '\n';
  }
  return out;
}

Table MetricTable(const EvalReport& report, bool markdown) {
  Table t;
  std::vector<std::string> header = {"strategy", "condition", "queries",
                                     "chunks"};
  for (const std::string& m : MetricColumns()) header.push_back(m);
  t.push_back(header);
  for (const ReportRow& row : report.rows) {
    std::vector<std::string> line = {row.strategy, row.condition,
                                     std::to_string(row.queries),
                                     std::to_string(row.chunks)};
    for (const std::string& m : MetricColumns()) {
      std::optional<double> v = row.Get(m);
      if (!v) {
        line.push_back("");
      } else {
        line.push_back(markdown ? fmt::format("{:.3f}", *v) : Num(*v));
      }
    }
    t.push_back(std::move(line));
  }
  return t;
}

std::string EmitJson(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["metadata"] = {{"corpus_hash", report.metadata.corpus_hash},
                   {"config_hash", report.metadata.config_hash},
                   {"seed", report.metadata.seed},
                   {"timestamp", report.metadata.timestamp}};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ReportRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["strategy"] = row.strategy;
    r["condition"] = row.condition;
    r["queries"] = row.queries;
    r["chunks"] = row.chunks;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [name, value] : row.metrics) m[name] = value;
    r["metrics"] = std::move(m);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string EmitPlotData(const EvalReport& report) {
  Table t = {{"strategy", "condition", "metric", "value"}};
  for (const ReportRow& row : report.rows) {
    for (const auto& [name, value] : row.metrics) {
      t.push_back({row.strategy, row.condition, name, Num(value)});
    }
  }
  return Csv(t);
}

std::string EmitTiming(const EvalReport& report) {
  Table t = {{"strategy", "condition", "documents", "chunks", "wall_seconds"}};
  for (const EfficiencyRow& e : report.efficiency) {
    t.push_back({e.strategy, e.condition, std::to_string(e.documents),
                 std::to_string(e.chunks), Num(e.wall_seconds)});
  }
  return Csv(t);
}

ComparisonRow CompareRow(const ReportRow& base, const ReportRow& cand,
                         std::string baseline_label,
                         std::vector<std::string>* warnings) {
  ComparisonRow out{cand.strategy, cand.condition, std::move(baseline_label),
                    {}};
  std::vector<std::string> names;
  for (const auto& [name, value] : base.metrics) names.push_back(name);
  for (const auto& [name, value] : cand.metrics) {
    if (!base.Get(name)) names.push_back(name);
  }
  for (const std::string& name : names) {
    std::optional<double> b = base.Get(name);
    std::optional<double> c = cand.Get(name);
    if (!b || !c) {
      warnings->push_back(fmt::format("{}/{}: metric {} missing, skipped",
                                      cand.strategy, cand.condition, name));
      continue;
    }
    ComparisonCell cell{name, *b, *c, *c - *b, std::nullopt};
    if (*b != 0) cell.ratio = *c / *b;
    out.cells.push_back(std::move(cell));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& MetricColumns() {
  static const std::vector<std::string> columns = {
      "mrr",           "recall@1",       "recall@3",       "recall@5",
      "recall@10",     "recall@20",      "seccov@5",       "seccov@10",
      "seccov@20",     "seccov_norm@5",  "seccov_norm@10", "seccov_norm@20",
      "csrecall@5",    "csrecall@10",    "csrecall@20"};
  return columns;
}

std::optional<double> ReportRow::Get(std::string_view metric) const {
  for (const auto& [name, value] : metrics) {
    if (name == metric) return value;
  }
  return std::nullopt;
}

absl::StatusOr<ReportRow> ComputeRow(std::string strategy,
                                     std::string condition,
                                     std::span<const EvalQuery> queries,
                                     size_t chunks) {
  ReportRow row;
  row.strategy = std::move(strategy);
  row.condition = std::move(condition);
  row.queries = queries.size();
  row.chunks = chunks;
  LC_ASSIGN_OR_RETURN(double mrr, Mrr(queries));
  row.metrics.emplace_back("mrr", mrr);
  for (size_t k : {1, 3, 5, 10, 20}) {
    row.metrics.emplace_back(fmt::format("recall@{}", k), RecallAtK(queries, k));
  }
  for (size_t k : {5, 10, 20}) {
    row.metrics.emplace_back(fmt::format("seccov@{}", k), SecCovAtK(queries, k));
  }
  for (size_t k : {5, 10, 20}) {
    row.metrics.emplace_back(fmt::format("seccov_norm@{}", k),
                             SecCovNormalizedAtK(queries, k));
  }
  for (size_t k : {5, 10, 20}) {
    row.metrics.emplace_back(fmt::format("csrecall@{}", k),
                             CsRecallAtK(queries, k));
  }
  return row;
}

absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "md") return ReportFormat::kMarkdown;
  if (name == "plot") return ReportFormat::kPlotData;
  if (name == "timing") return ReportFormat::kTiming;
  return MakeError(ErrorKind::kUnsupportedFormat,
                   fmt::format("unsupported report format '{}'", name));
}

std::string_view ReportFileName(ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv: return "report.csv";
    case ReportFormat::kJson: return "report.json";
    case ReportFormat::kMarkdown: return "report.md";
    case ReportFormat::kPlotData: return "plotdata.csv";
    case ReportFormat::kTiming: return "timing.csv";
  }
  return "report";
}

std::string EmitReport(const EvalReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv:
      return Csv(MetricTable(report, false));
    case ReportFormat::kJson:
      return EmitJson(report);
    case ReportFormat::kMarkdown:
      return AlignedTable(MetricTable(report, true), 2);
    case ReportFormat::kPlotData:
      return EmitPlotData(report);
    case ReportFormat::kTiming:
      return EmitTiming(report);
  }
  return "";
}

absl::StatusOr<std::string> EmitReport(const EvalReport& report,
                                       std::string_view format) {
  LC_ASSIGN_OR_RETURN(ReportFormat f, ParseReportFormat(format));
  return EmitReport(report, f);
}

absl::StatusOr<EvalReport> ParseReportJson(std::string_view text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    EvalReport report;
    if (j.contains("metadata")) {
      const auto& m = j.at("metadata");
      report.metadata.corpus_hash = m.value("corpus_hash", "");
      report.metadata.config_hash = m.value("config_hash", "");
      report.metadata.seed = m.value("seed", uint64_t{0});
      report.metadata.timestamp = m.value("timestamp", "");
    }
    for (const auto& r : j.at("rows")) {
      ReportRow row;
      row.strategy = r.at("strategy").get<std::string>();
      row.condition = r.at("condition").get<std::string>();
      row.queries = r.value("queries", size_t{0});
      row.chunks = r.value("chunks", size_t{0});
      // Parsed objects are key-sorted; restore the rendering order.
      std::map<std::string, double> metrics;
      for (const auto& [name, value] : r.at("metrics").items()) {
        metrics[name] = value.get<double>();
      }
      for (const std::string& name : MetricColumns()) {
        auto it = metrics.find(name);
        if (it == metrics.end()) continue;
        row.metrics.emplace_back(name, it->second);
        metrics.erase(it);
      }
      for (const auto& [name, value] : metrics) row.metrics.emplace_back(name, value);
      report.rows.push_back(std::move(row));
    }
    return report;
  } catch (const std::exception& e) {
    return MakeError(ErrorKind::kUnsupportedFormat,
                     fmt::format("not a report: {}", e.what()));
  }
}

absl::StatusOr<Comparison> CompareReports(const EvalReport& baseline,
                                          const EvalReport& candidate) {
  Comparison out;
  for (const ReportRow& cand : candidate.rows) {
    for (const ReportRow& base : baseline.rows) {
      if (base.strategy != cand.strategy || base.condition != cand.condition) {
        continue;
      }
      out.rows.push_back(CompareRow(base, cand, "baseline", &out.warnings));
    }
  }
  if (out.rows.empty()) {
    return MakeError(ErrorKind::kDisjointRows,
                     "reports share no strategy/condition rows");
  }
  return out;
}

absl::StatusOr<Comparison> CompareToBaseline(const EvalReport& report,
                                             std::string_view strategy) {
  Comparison out;
  for (const ReportRow& base : report.rows) {
    if (base.strategy != strategy) continue;
    for (const ReportRow& cand : report.rows) {
      if (cand.condition != base.condition || cand.strategy == strategy) {
        continue;
      }
      out.rows.push_back(CompareRow(base, cand, std::string(strategy),
                                    &out.warnings));
    }
  }
  if (out.rows.empty()) {
    return MakeError(ErrorKind::kDisjointRows,
                     fmt::format("no rows to compare against '{}'", strategy));
  }
  return out;
}

std::string FormatComparisonMarkdown(const Comparison& comparison) {
  Table t = {{"strategy", "condition", "baseline", "metric", "baseline_value",
              "value", "delta", "ratio"}};
  for (const ComparisonRow& row : comparison.rows) {
    for (const ComparisonCell& c : row.cells) {
      t.push_back({row.strategy, row.condition, row.baseline, c.metric,
                   fmt::format("{:.3f}", c.baseline),
                   fmt::format("{:.3f}", c.value),
                   fmt::format("{:+.3f}", c.delta),
                   c.ratio ? fmt::format("{:.2f}", *c.ratio) : "n/a"});
    }
  }
  std::string out = AlignedTable(t, 4);
  for (const std::string& w : comparison.warnings) {
    out += "\nwarning: " + w;
  }
  if (!comparison.warnings.empty()) out += "\n";
  return out;
}

}  // namespace latechunk::eval
