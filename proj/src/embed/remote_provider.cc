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
#include "latechunk/embed/remote_provider.h"

#include <cstdlib>
#include <utility>

#include "fmt/format.h"
#include "httplib.h"
#include "latechunk/util/status.h"

namespace latechunk::embed {

std::string ResolveEndpoint(const std::string& configured) {
  const char* env = std::getenv(kEndpointEnvVar);
  if (env != nullptr && *env != '\0') return env;
  return configured;
}

RemoteProvider::RemoteProvider(RemoteOptions options)
    : options_(std::move(options)) {}

namespace {

absl::Status Failure(std::string_view detail) {
  return MakeError(ErrorKind::kProviderFailure, detail);
}

Matrix RowsOf(const EmbedResponse& response, size_t dim) {
  Matrix out(0, dim);
  for (const EmbedItem& item : response.items) out.AppendRow(item.vectors[0]);
  return out;
}

}  // namespace

absl::StatusOr<EmbedResponse> RemoteProvider::Post(const EmbedRequest& request) {
  if (options_.endpoint.empty()) return Failure("no embedding endpoint configured");
  httplib::Client client(options_.endpoint);
  client.set_read_timeout(options_.timeout_seconds, 0);
  client.set_connection_timeout(10, 0);
  httplib::Result res =
      client.Post("/embed", SerializeRequest(request), "application/json");
  if (!res) {
    return Failure(fmt::format("POST {}/embed: {}", options_.endpoint,
                               httplib::to_string(res.error())));
  }
  if (res->status != 200) {
    return Failure(fmt::format("POST {}/embed: HTTP {} {}", options_.endpoint,
                               res->status, res->body));
  }
  LC_ASSIGN_OR_RETURN(EmbedResponse response, ParseResponse(res->body));
  LC_RETURN_IF_ERROR(ValidateResponse(request, response, options_.dim));
  return response;
}

absl::StatusOr<Matrix> RemoteProvider::EmbedTokens(
    std::span<const std::string> tokens) {
  EmbedRequest request;
  request.mode = EmbedMode::kTokens;
  request.model = options_.model;
  std::string joined;
  for (const std::string& t : tokens) {
    if (!joined.empty()) joined += ' ';
    joined += t;
  }
  request.texts = {std::move(joined)};
  request.tokens = {std::vector<std::string>(tokens.begin(), tokens.end())};
  LC_ASSIGN_OR_RETURN(EmbedResponse response, Post(request));
  const EmbedItem& item = response.items[0];
  Matrix out(tokens.size(), options_.dim);
  for (size_t k = 0; k < item.vectors.size(); ++k) {
    std::copy(item.vectors[k].begin(), item.vectors[k].end(),
              out.Row(item.offsets[k]).begin());
  }
  return out;
}

absl::StatusOr<Matrix> RemoteProvider::EmbedPooled(
    const std::vector<std::string>& texts) {
  EmbedRequest request;
  request.mode = EmbedMode::kQuery;
  request.model = options_.model;
  request.texts = texts;
  LC_ASSIGN_OR_RETURN(EmbedResponse response, Post(request));
  return RowsOf(response, options_.dim);
}

absl::StatusOr<Matrix> RemoteProvider::EmbedConcepts(
    const std::vector<std::string>& cuis) {
  EmbedRequest request;
  request.mode = EmbedMode::kConcepts;
  request.model = options_.model;
  request.cuis = cuis;
  LC_ASSIGN_OR_RETURN(EmbedResponse response, Post(request));
  return RowsOf(response, options_.dim);
}

absl::StatusOr<HealthResponse> RemoteProvider::Health() {
  httplib::Client client(options_.endpoint);
  client.set_connection_timeout(10, 0);
  httplib::Result res = client.Get("/health");
  if (!res) {
    return Failure(fmt::format("GET {}/health: {}", options_.endpoint,
                               httplib::to_string(res.error())));
  }
  if (res->status != 200) {
    return Failure(fmt::format("GET {}/health: HTTP {}", options_.endpoint,
                               res->status));
  }
  return ParseHealth(res->body);
}

}  // namespace latechunk::embed
