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

#include "latechunk/pipeline/config.h"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fmt/format.h"
#include "json.hpp"
#include "latechunk/embed/deterministic_embedder.h"
#include "latechunk/embed/remote_provider.h"
#include "latechunk/util/hash.h"
#include "latechunk/util/status.h"

namespace latechunk::pipeline {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Thrown inside the parser and turned into InvalidConfig at the boundary.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
T Get(const json& value, std::string_view key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(fmt::format("bad value for '{}'", key));
  }
}

void ForEachKey(const json& obj, std::string_view where,
                const std::function<bool(const std::string&, const json&)>& fn) {
  if (!obj.is_object()) {
    throw ConfigError(fmt::format("'{}' must be an object", where));
  }
  for (const auto& [key, value] : obj.items()) {
    if (!fn(key, value)) {
      throw ConfigError(fmt::format("unknown key '{}' in {}", key, where));
    }
  }
}

std::string ResolvePath(const std::string& raw, const std::string& base,
                        std::string_view key) {
  fs::path p(raw);
  if (p.is_relative()) p = fs::path(base) / p;
  if (!fs::exists(p)) {
    throw ConfigError(fmt::format("{} '{}' does not exist", key, p.string()));
  }
  return p.lexically_normal().string();
}

void ParseProvider(const json& obj, ProviderConfig* out) {
  ForEachKey(obj, "provider", [&](const std::string& k, const json& v) {
    if (k == "kind") {
      std::string kind = Get<std::string>(v, k);
      if (kind == "deterministic") {
        out->kind = ProviderConfig::Kind::kDeterministic;
      } else if (kind == "remote") {
        out->kind = ProviderConfig::Kind::kRemote;
      } else {
        throw ConfigError("provider kind must be deterministic or remote");
      }
    } else if (k == "dim") {
      out->dim = Get<size_t>(v, k);
    } else if (k == "radius") {
      out->radius = Get<size_t>(v, k);
    } else if (k == "context_mix") {
      out->context_mix = Get<double>(v, k);
    } else if (k == "max_window") {
      out->max_window = Get<size_t>(v, k);
    } else if (k == "endpoint") {
      out->endpoint = Get<std::string>(v, k);
    } else if (k == "model") {
      out->model = Get<std::string>(v, k);
    } else if (k == "timeout_seconds") {
      out->timeout_seconds = Get<int>(v, k);
    } else {
      return false;
    }
    return true;
  });
  if (out->dim == 0) throw ConfigError("provider dim must be positive");
  if (out->context_mix < 0 || out->context_mix > 1) {
    throw ConfigError("context_mix must lie in [0, 1]");
  }
}

void ParseBoundary(const json& obj, chunkers::BoundaryWeights* out) {
  ForEachKey(obj, "boundary", [&](const std::string& k, const json& v) {
    if (k == "tau") {
      out->tau = Get<double>(v, k);
    } else if (k == "alpha_struct") {
      out->alpha_struct = Get<double>(v, k);
    } else if (k == "alpha_sem") {
      out->alpha_sem = Get<double>(v, k);
    } else if (k == "alpha_entity") {
      out->alpha_entity = Get<double>(v, k);
    } else if (k == "gamma") {
      out->gamma = Get<double>(v, k);
    } else if (k == "window") {
      out->window = Get<size_t>(v, k);
    } else if (k == "min_chunk") {
      out->min_chunk = Get<size_t>(v, k);
    } else if (k == "max_chunk") {
      out->max_chunk = Get<size_t>(v, k);
    } else {
      return false;
    }
    return true;
  });
}

PipelineConfig ParseOrThrow(std::string_view text, const std::string& base) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("config is not JSON: {}", e.what()));
  }
  PipelineConfig c;
  ForEachKey(root, "config", [&](const std::string& k, const json& v) {
    if (k == "corpus_dir") {
      c.corpus_dir = ResolvePath(Get<std::string>(v, k), base, k);
    } else if (k == "concept_graph") {
      c.concept_graph = ResolvePath(Get<std::string>(v, k), base, k);
    } else if (k == "dictionary") {
      c.dictionary = ResolvePath(Get<std::string>(v, k), base, k);
    } else if (k == "gat_params") {
      std::string raw = Get<std::string>(v, k);
      c.gat_params = raw.empty() ? "" : ResolvePath(raw, base, k);
    } else if (k == "strategies") {
      c.strategies.clear();
      for (const json& s : v) {
        auto parsed = ParseStrategy(Get<std::string>(s, k));
        if (!parsed) throw ConfigError(fmt::format("unknown strategy {}", s.dump()));
        c.strategies.push_back(*parsed);
      }
    } else if (k == "conditions") {
      c.conditions.clear();
      for (const json& s : v) {
        auto parsed = docgraph::ParseCondition(Get<std::string>(s, k));
        if (!parsed) throw ConfigError(fmt::format("unknown condition {}", s.dump()));
        c.conditions.push_back(*parsed);
      }
    } else if (k == "provider") {
      ParseProvider(v, &c.provider);
    } else if (k == "encoder") {
      ForEachKey(v, "encoder", [&](const std::string& ek, const json& ev) {
        if (ek == "window") {
          c.encoder_window = Get<size_t>(ev, ek);
        } else if (ek == "overlap") {
          c.encoder_overlap = Get<size_t>(ev, ek);
        } else {
          return false;
        }
        return true;
      });
    } else if (k == "boundary") {
      ParseBoundary(v, &c.boundary);
    } else if (k == "lambda") {
      c.lambda = Get<double>(v, k);
    } else if (k == "beta") {
      c.beta = Get<double>(v, k);
    } else if (k == "naive_size") {
      c.naive_size = Get<size_t>(v, k);
    } else if (k == "naive_overlap") {
      c.naive_overlap = Get<size_t>(v, k);
    } else if (k == "semantic_threshold") {
      c.semantic_threshold = Get<double>(v, k);
    } else if (k == "ks") {
      c.ks = Get<std::vector<size_t>>(v, k);
    } else if (k == "max_per_template") {
      c.max_per_template = Get<size_t>(v, k);
    } else if (k == "seed") {
      c.seed = Get<uint64_t>(v, k);
    } else if (k == "workers") {
      c.workers = Get<size_t>(v, k);
    } else if (k == "out_dir") {
      std::string raw = Get<std::string>(v, k);
      fs::path p(raw);
      c.out_dir = (p.is_relative() ? fs::path(base) / p : p)
                      .lexically_normal()
                      .string();
    } else if (k == "timestamp") {
      c.timestamp = Get<std::string>(v, k);
    } else {
      return false;
    }
    return true;
  });
  if (c.corpus_dir.empty()) throw ConfigError("corpus_dir is required");
  if (c.strategies.empty()) throw ConfigError("strategies must not be empty");
  if (c.conditions.empty()) throw ConfigError("conditions must not be empty");
  if (c.ks.empty() || std::find(c.ks.begin(), c.ks.end(), 0u) != c.ks.end()) {
    throw ConfigError("ks must be non-empty and positive");
  }
  bool needs_kg = std::any_of(c.strategies.begin(), c.strategies.end(),
                              [](Strategy s) {
                                return s == Strategy::kGralcKg ||
                                       s == Strategy::kGralcGraph;
                              });
  if (needs_kg && (c.concept_graph.empty() || c.dictionary.empty())) {
    throw ConfigError("KG strategies need concept_graph and dictionary");
  }
  if (c.naive_size == 0 || c.naive_overlap >= c.naive_size) {
    throw ConfigError("naive_overlap must be below naive_size");
  }
  if (c.encoder_overlap >= c.encoder_window) {
    throw ConfigError("encoder overlap must be below the window");
  }
  if (c.beta < 0 || c.beta > 1) throw ConfigError("beta must lie in [0, 1]");
  if (c.workers == 0) c.workers = 1;
  return c;
}

}  // namespace

std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kNaive: return "naive";
    case Strategy::kSemantic: return "semantic";
    case Strategy::kLate: return "late";
    case Strategy::kStructure: return "structure";
    case Strategy::kGralcKg: return "gralc_kg";
    case Strategy::kGralcGraph: return "gralc_graph";
  }
  return "unknown";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

size_t PipelineConfig::max_k() const {
  return ks.empty() ? 0 : *std::max_element(ks.begin(), ks.end());
}

absl::StatusOr<PipelineConfig> ParseConfig(std::string_view json_text,
                                           const std::string& base_dir) {
  try {
    PipelineConfig c = ParseOrThrow(json_text, base_dir);
    LC_RETURN_IF_ERROR(c.boundary.Validate());
    return c;
  } catch (const ConfigError& e) {
    return MakeError(ErrorKind::kInvalidConfig, e.what());
  }
}

absl::StatusOr<PipelineConfig> LoadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return MakeError(ErrorKind::kInvalidConfig, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string base = fs::path(path).parent_path().string();
  if (base.empty()) base = ".";
  return ParseConfig(ss.str(), base);
}

std::string CanonicalConfig(const PipelineConfig& c) {
  nlohmann::ordered_json j;
  j["corpus_dir"] = c.corpus_dir;
  j["concept_graph"] = c.concept_graph;
  j["dictionary"] = c.dictionary;
  j["gat_params"] = c.gat_params;
  nlohmann::ordered_json strategies = nlohmann::ordered_json::array();
  for (Strategy s : c.strategies) strategies.push_back(StrategyName(s));
  j["strategies"] = strategies;
  nlohmann::ordered_json conditions = nlohmann::ordered_json::array();
  for (docgraph::Condition cond : c.conditions) {
    conditions.push_back(docgraph::ConditionName(cond));
  }
  j["conditions"] = conditions;
  const ProviderConfig& p = c.provider;
  if (p.kind == ProviderConfig::Kind::kDeterministic) {
    j["provider"] = {{"kind", "deterministic"},   {"dim", p.dim},
                     {"radius", p.radius},        {"context_mix", p.context_mix},
                     {"max_window", p.max_window}};
  } else {
    j["provider"] = {{"kind", "remote"}, {"model", p.model}, {"dim", p.dim},
                     {"max_window", p.max_window}};
  }
  j["encoder"] = {{"window", c.encoder_window}, {"overlap", c.encoder_overlap}};
  const chunkers::BoundaryWeights& b = c.boundary;
  j["boundary"] = {{"tau", b.tau},
                   {"alpha_struct", b.alpha_struct},
                   {"alpha_sem", b.alpha_sem},
                   {"alpha_entity", b.alpha_entity},
                   {"gamma", b.gamma},
                   {"window", b.window},
                   {"min_chunk", b.min_chunk},
                   {"max_chunk", b.max_chunk}};
  j["lambda"] = c.lambda;
  j["beta"] = c.beta;
  j["naive_size"] = c.naive_size;
  j["naive_overlap"] = c.naive_overlap;
  j["semantic_threshold"] = c.semantic_threshold;
  j["ks"] = c.ks;
  j["max_per_template"] = c.max_per_template;
  j["seed"] = c.seed;
  return j.dump();
}

std::string ConfigHash(const PipelineConfig& config) {
  return fmt::format("{:016x}", Fnv1a64(CanonicalConfig(config)));
}

absl::StatusOr<std::shared_ptr<embed::EmbeddingProvider>> MakeProvider(
    const PipelineConfig& config) {
  const ProviderConfig& p = config.provider;
  if (p.kind == ProviderConfig::Kind::kDeterministic) {
    embed::DeterministicOptions o;
    o.dim = p.dim;
    o.radius = p.radius;
    o.context_mix = p.context_mix;
    o.max_window = p.max_window;
    o.seed = config.seed;
    return std::shared_ptr<embed::EmbeddingProvider>(
        std::make_unique<embed::DeterministicEmbedder>(o));
  }
  embed::RemoteOptions o;
  o.endpoint = embed::ResolveEndpoint(p.endpoint);
  o.model = p.model;
  o.dim = p.dim;
  o.max_window = p.max_window;
  o.timeout_seconds = p.timeout_seconds;
  if (o.endpoint.empty()) {
    return MakeError(ErrorKind::kInvalidConfig,
                     "remote provider needs an endpoint or " +
                         std::string(embed::kEndpointEnvVar));
  }
  return std::shared_ptr<embed::EmbeddingProvider>(embed::MakeConcurrent(
      std::make_unique<embed::RemoteProvider>(std::move(o))));
}

}  // namespace latechunk::pipeline
