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
#include "latechunk/util/status.h"

#include <optional>

#include <string>

#include "absl/strings/cord.h"

namespace latechunk {
namespace {

constexpr std::string_view kPayloadUrl = "latechunk/error-kind";

absl::StatusCode CodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedXml:
    case ErrorKind::kDimMismatch:
    case ErrorKind::kEmptySpan:
    case ErrorKind::kZeroVector:
    case ErrorKind::kUnsupportedFormat:
    case ErrorKind::kInvalidConfig:
    case ErrorKind::kEmptyQuery:
      return absl::StatusCode::kInvalidArgument;
    case ErrorKind::kEmptyBody:
    case ErrorKind::kMissingSection:
    case ErrorKind::kAlreadyEnriched:
    case ErrorKind::kEmptyIndex:
    case ErrorKind::kMissingGold:
    case ErrorKind::kDisjointRows:
      return absl::StatusCode::kFailedPrecondition;
    case ErrorKind::kDuplicateId:
      return absl::StatusCode::kAlreadyExists;
    case ErrorKind::kMissingIndex:
      return absl::StatusCode::kNotFound;
    case ErrorKind::kProviderFailure:
      return absl::StatusCode::kUnavailable;
    case ErrorKind::kIo:
      return absl::StatusCode::kDataLoss;
  }
  return absl::StatusCode::kUnknown;
}

}  // namespace

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedXml: return "MalformedXml";
    case ErrorKind::kEmptyBody: return "EmptyBody";
    case ErrorKind::kMissingSection: return "MissingSection";
    case ErrorKind::kProviderFailure: return "ProviderFailure";
    case ErrorKind::kDimMismatch: return "DimMismatch";
    case ErrorKind::kAlreadyEnriched: return "AlreadyEnriched";
    case ErrorKind::kEmptySpan: return "EmptySpan";
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kEmptyIndex: return "EmptyIndex";
    case ErrorKind::kMissingGold: return "MissingGold";
    case ErrorKind::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::kMissingIndex: return "MissingIndex";
    case ErrorKind::kDisjointRows: return "DisjointRows";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kEmptyQuery: return "EmptyQuery";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

absl::Status MakeError(ErrorKind kind, std::string_view detail) {
  const std::string name(ErrorKindName(kind));
  absl::Status status(CodeFor(kind), name + ": " + std::string(detail));
  status.SetPayload(std::string(kPayloadUrl), absl::Cord(name));
  return status;
}

bool HasErrorKind(const absl::Status& status, ErrorKind kind) {
  auto payload =
      status.GetPayload(std::string(kPayloadUrl));
  const std::string name(ErrorKindName(kind));
  return payload.has_value() && *payload == name;
}

absl::Status Annotate(const absl::Status& status, std::string_view context) {
  if (status.ok()) return status;
  absl::Status out(status.code(),
                   std::string(status.message()) + " (" + std::string(context) + ")");
  status.ForEachPayload([&out](auto url, const absl::Cord& payload) {
    out.SetPayload(url, payload);
  });
  return out;
}

}  // namespace latechunk
