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
#include "latechunk/embed/protocol.h"

#include <cmath>
#include <stdexcept>

#include "fmt/format.h"
#include "json.hpp"
#include "latechunk/util/status.h"

namespace latechunk::embed {

using nlohmann::json;

std::string_view EmbedModeName(EmbedMode mode) {
  switch (mode) {
    case EmbedMode::kTokens: return "tokens";
    case EmbedMode::kQuery: return "query";
    case EmbedMode::kConcepts: return "concepts";
  }
  return "tokens";
}

absl::StatusOr<EmbedMode> ParseEmbedMode(std::string_view name) {
  if (name == "tokens") return EmbedMode::kTokens;
  if (name == "query") return EmbedMode::kQuery;
  if (name == "concepts") return EmbedMode::kConcepts;
  return MakeError(ErrorKind::kProviderFailure,
                   fmt::format("unknown embed mode '{}'", name));
}

namespace {

absl::Status Malformed(std::string_view what, std::string_view detail) {
  return MakeError(ErrorKind::kProviderFailure,
                   fmt::format("malformed {}: {}", what, detail));
}

template <typename T>
absl::StatusOr<T> Parse(std::string_view body, std::string_view what,
                        T (*convert)(const json&)) {
  try {
    return convert(json::parse(body));
  } catch (const std::exception& e) {
    return Malformed(what, e.what());
  }
}

EmbedRequest RequestFromJson(const json& j) {
  EmbedRequest r;
  absl::StatusOr<EmbedMode> mode = ParseEmbedMode(j.at("mode").get<std::string>());
  if (!mode.ok()) {
    throw std::invalid_argument(std::string(mode.status().message()));
  }
  r.mode = *mode;
  r.model = j.value("model", "");
  if (j.contains("texts")) r.texts = j.at("texts").get<std::vector<std::string>>();
  if (j.contains("tokens")) {
    r.tokens = j.at("tokens").get<std::vector<std::vector<std::string>>>();
  }
  if (j.contains("cuis")) r.cuis = j.at("cuis").get<std::vector<std::string>>();
  return r;
}

EmbedResponse ResponseFromJson(const json& j) {
  EmbedResponse r;
  r.dim = j.at("dim").get<size_t>();
  r.model = j.value("model", "");
  for (const json& item : j.at("items")) {
    EmbedItem e;
    e.vectors = item.at("vectors").get<std::vector<std::vector<double>>>();
    if (item.contains("offsets")) e.offsets = item.at("offsets").get<std::vector<size_t>>();
    r.items.push_back(std::move(e));
  }
  return r;
}

HealthResponse HealthFromJson(const json& j) {
  HealthResponse h;
  h.status = j.at("status").get<std::string>();
  h.models = j.value("models", std::vector<std::string>{});
  h.dims = j.value("dims", std::vector<size_t>{});
  return h;
}

}  // namespace

std::string SerializeRequest(const EmbedRequest& request) {
  json j;
  j["mode"] = EmbedModeName(request.mode);
  j["model"] = request.model;
  if (request.mode == EmbedMode::kConcepts) {
    j["cuis"] = request.cuis;
  } else {
    j["texts"] = request.texts;
    if (!request.tokens.empty()) j["tokens"] = request.tokens;
  }
  return j.dump();
}

absl::StatusOr<EmbedRequest> ParseRequest(std::string_view body) {
  return Parse<EmbedRequest>(body, "request", RequestFromJson);
}

std::string SerializeResponse(const EmbedResponse& response) {
  json items = json::array();
  for (const EmbedItem& item : response.items) {
    json e;
    e["vectors"] = item.vectors;
    if (!item.offsets.empty()) e["offsets"] = item.offsets;
    items.push_back(std::move(e));
  }
  json j;
  j["dim"] = response.dim;
  j["model"] = response.model;
  j["items"] = std::move(items);
  return j.dump();
}

absl::StatusOr<EmbedResponse> ParseResponse(std::string_view body) {
  return Parse<EmbedResponse>(body, "response", ResponseFromJson);
}

std::string SerializeHealth(const HealthResponse& health) {
  json j;
  j["status"] = health.status;
  j["models"] = health.models;
  j["dims"] = health.dims;
  return j.dump();
}

absl::StatusOr<HealthResponse> ParseHealth(std::string_view body) {
  return Parse<HealthResponse>(body, "health", HealthFromJson);
}

absl::Status ValidateResponse(const EmbedRequest& request,
                              const EmbedResponse& response,
                              size_t expected_dim) {
  if (response.items.size() != request.item_count()) {
    return Malformed("response", fmt::format("{} items for {} requested",
                                             response.items.size(),
                                             request.item_count()));
  }
  if (response.dim != expected_dim) {
    return MakeError(ErrorKind::kDimMismatch,
                     fmt::format("service dim {} != configured {}", response.dim,
                                 expected_dim));
  }
  for (size_t i = 0; i < response.items.size(); ++i) {
    const EmbedItem& item = response.items[i];
    for (const std::vector<double>& v : item.vectors) {
      if (v.size() != expected_dim) {
        return MakeError(ErrorKind::kDimMismatch,
                         fmt::format("item {} has a {}-dim vector", i, v.size()));
      }
      for (double x : v) {
        if (!std::isfinite(x)) return Malformed("response", "non-finite value");
      }
    }
    if (request.mode != EmbedMode::kTokens) {
      if (item.vectors.size() != 1) {
        return Malformed("response", fmt::format("item {} must hold one vector", i));
      }
      continue;
    }
    const size_t n = i < request.tokens.size() ? request.tokens[i].size()
                                               : item.vectors.size();
    if (item.vectors.size() != n || item.offsets.size() != n) {
      return Malformed("response",
                       fmt::format("item {}: {} vectors, {} offsets for {} tokens",
                                   i, item.vectors.size(), item.offsets.size(), n));
    }
    std::vector<bool> seen(n, false);
    for (size_t off : item.offsets) {
      if (off >= n || seen[off]) {
        return Malformed("response",
                         fmt::format("item {}: offset {} out of range or repeated",
                                     i, off));
      }
      seen[off] = true;
    }
  }
  return absl::OkStatus();
}

}  // namespace latechunk::embed
