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
#include "latechunk/kg/concept_graph.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fmt/format.h"
#include "latechunk/util/status.h"

namespace latechunk::kg {
namespace {

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> SplitNonEmpty(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  for (std::string& part : Split(s, sep)) {
    if (!part.empty()) out.push_back(std::move(part));
  }
  return out;
}

std::string Join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

absl::Status LineError(size_t line, std::string_view detail) {
  return MakeError(ErrorKind::kUnsupportedFormat,
                   fmt::format("line {}: {}", line, detail));
}

absl::StatusOr<std::string> Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return MakeError(ErrorKind::kIo, fmt::format("cannot open {}", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

absl::StatusOr<ConceptGraph> ConceptGraph::Create(
    std::vector<Concept> concepts, std::vector<Relation> relations) {
  ConceptGraph g;
  for (Concept& c : concepts) {
    if (c.cui.empty()) return MakeError(ErrorKind::kInvalidConfig, "empty CUI");
    if (g.concepts_.empty()) g.dim_ = c.embedding.size();
    if (c.embedding.size() != g.dim_) {
      return MakeError(ErrorKind::kDimMismatch,
                       fmt::format("concept {} has dim {}, expected {}", c.cui,
                                   c.embedding.size(), g.dim_));
    }
    for (double x : c.embedding) {
      if (!std::isfinite(x)) {
        return MakeError(ErrorKind::kInvalidConfig,
                         fmt::format("concept {} has a non-finite embedding", c.cui));
      }
    }
    std::string cui = c.cui;
    if (!g.concepts_.emplace(cui, std::move(c)).second) {
      return MakeError(ErrorKind::kDuplicateId, fmt::format("concept {}", cui));
    }
  }
  for (Relation& r : relations) {
    for (const std::string& end : {r.from, r.to}) {
      if (!g.concepts_.contains(end)) {
        return MakeError(ErrorKind::kInvalidConfig,
                         fmt::format("relation {} {} {} references unknown {}",
                                     r.from, r.label, r.to, end));
      }
    }
    const size_t index = g.relations_.size();
    g.incident_[r.from].push_back(index);
    if (r.to != r.from) g.incident_[r.to].push_back(index);
    g.relations_.push_back(std::move(r));
  }
  return g;
}

const Concept* ConceptGraph::Find(std::string_view cui) const {
  auto it = concepts_.find(cui);
  return it == concepts_.end() ? nullptr : &it->second;
}

const std::vector<size_t>& ConceptGraph::IncidentRelations(
    std::string_view cui) const {
  static const std::vector<size_t> kNone;
  auto it = incident_.find(cui);
  return it == incident_.end() ? kNone : it->second;
}

absl::StatusOr<ConceptGraph> ParseConceptGraph(std::string_view text) {
  enum class Part { kNone, kConcepts, kRelations } part = Part::kNone;
  std::vector<Concept> concepts;
  std::vector<Relation> relations;
  size_t line_no = 0;
  for (std::string line : Split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line == "[concepts]") {
      part = Part::kConcepts;
      continue;
    }
    if (line == "[relations]") {
      part = Part::kRelations;
      continue;
    }
    std::vector<std::string> f = Split(line, '\t');
    if (part == Part::kConcepts) {
      if (f.size() != 5) return LineError(line_no, "concept needs 5 fields");
      Concept c{f[0], f[1], SplitNonEmpty(f[2], '|'), SplitNonEmpty(f[3], '|'), {}};
      for (const std::string& v : SplitNonEmpty(f[4], ',')) {
        char* end = nullptr;
        const double x = std::strtod(v.c_str(), &end);
        if (end == v.c_str() || *end != '\0') {
          return LineError(line_no, fmt::format("bad float '{}'", v));
        }
        c.embedding.push_back(x);
      }
      concepts.push_back(std::move(c));
    } else if (part == Part::kRelations) {
      if (f.size() != 3) return LineError(line_no, "relation needs 3 fields");
      relations.push_back({f[0], f[1], f[2]});
    } else {
      return LineError(line_no, "data before a section header");
    }
  }
  return ConceptGraph::Create(std::move(concepts), std::move(relations));
}

absl::StatusOr<ConceptGraph> ReadConceptGraph(const std::string& path) {
  LC_ASSIGN_OR_RETURN(std::string text, Slurp(path));
  absl::StatusOr<ConceptGraph> g = ParseConceptGraph(text);
  if (!g.ok()) return Annotate(g.status(), path);
  return g;
}

std::string FormatConceptGraph(const ConceptGraph& graph) {
  std::string out = "[concepts]\n";
  for (const auto& [cui, c] : graph.concepts()) {
    std::vector<std::string> values;
    for (double x : c.embedding) values.push_back(fmt::format("{:.17g}", x));
    out += fmt::format("{}\t{}\t{}\t{}\t{}\n", cui, c.name, Join(c.synonyms, '|'),
                       Join(c.semantic_types, '|'), Join(values, ','));
  }
  out += "[relations]\n";
  for (const Relation& r : graph.relations()) {
    out += fmt::format("{}\t{}\t{}\n", r.from, r.label, r.to);
  }
  return out;
}

absl::StatusOr<Dictionary> ParseDictionary(std::string_view text) {
  Dictionary out;
  size_t line_no = 0;
  for (std::string line : Split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 2 || f[0].empty() || f[1].empty()) {
      return LineError(line_no, "dictionary line needs term and CUI");
    }
    out.emplace_back(std::move(f[0]), std::move(f[1]));
  }
  return out;
}

absl::StatusOr<Dictionary> ReadDictionary(const std::string& path) {
  LC_ASSIGN_OR_RETURN(std::string text, Slurp(path));
  absl::StatusOr<Dictionary> d = ParseDictionary(text);
  if (!d.ok()) return Annotate(d.status(), path);
  return d;
}

std::string FormatDictionary(const Dictionary& dictionary) {
  std::string out;
  for (const auto& [term, cui] : dictionary) out += term + "\t" + cui + "\n";
  return out;
}

Dictionary DictionaryFromGraph(const ConceptGraph& graph) {
  Dictionary out;
  for (const auto& [cui, c] : graph.concepts()) {
    if (!c.name.empty()) out.emplace_back(c.name, cui);
    for (const std::string& s : c.synonyms) out.emplace_back(s, cui);
  }
  return out;
}

}  // namespace latechunk::kg
