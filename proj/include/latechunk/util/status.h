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
#ifndef LATECHUNK_UTIL_STATUS_H_
#define LATECHUNK_UTIL_STATUS_H_

#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace latechunk {

// Domain error kinds. Each maps onto an absl status code and is attached to
// the status as a payload so callers can branch on the precise failure.
enum class ErrorKind {
  kMalformedXml,
  kEmptyBody,
  kMissingSection,
  kProviderFailure,
  kDimMismatch,
  kAlreadyEnriched,
  kEmptySpan,
  kZeroVector,
  kDuplicateId,
  kEmptyIndex,
  kMissingGold,
  kUnsupportedFormat,
  kMissingIndex,
  kDisjointRows,
  kInvalidConfig,
  kEmptyQuery,
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

absl::Status MakeError(ErrorKind kind, std::string_view detail);

// Returns true if the status carries the given kind.
bool HasErrorKind(const absl::Status& status, ErrorKind kind);

// Appends context to the message, keeping code and kind.
absl::Status Annotate(const absl::Status& status, std::string_view context);

}  // namespace latechunk

#define LC_STATUS_CONCAT_INNER_(a, b) a##b
#define LC_STATUS_CONCAT_(a, b) LC_STATUS_CONCAT_INNER_(a, b)

#define LC_RETURN_IF_ERROR(expr)            \
  do {                                      \
    const absl::Status lc_status_ = (expr); \
    if (!lc_status_.ok()) return lc_status_; \
  } while (0)

#define LC_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, expr) \
  auto tmp = (expr);                              \
  if (!tmp.ok()) return tmp.status();             \
  lhs = std::move(*tmp)

#define LC_ASSIGN_OR_RETURN(lhs, expr) \
  LC_ASSIGN_OR_RETURN_IMPL_(LC_STATUS_CONCAT_(lc_statusor_, __LINE__), lhs, expr)

#endif  // LATECHUNK_UTIL_STATUS_H_
