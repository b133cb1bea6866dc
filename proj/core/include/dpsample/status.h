//
// Copyright 2026 The dpsample Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DPSAMPLE_STATUS_H_
#define DPSAMPLE_STATUS_H_

#include <optional>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace dpsample {

// Library-specific error kinds. Every non-OK status produced by this library
// carries one of these as a payload, so callers (and tests) can branch on the
// precise failure without parsing messages.
enum class ErrorKind {
  kNegativeMass,
  kNotNormalized,
  kDomainTooSmall,
  kDomainMismatch,
  kOutOfDomain,
  kEmptyDataset,
  kDimensionMismatch,
  kInvalidOrder,
  kInvalidAlpha,
  kInvalidParameter,
  kNonIntegerShape,
  kInsufficientSamples,
  kTooManyOutputs,
  kTooFewSamples,
  kNormViolation,
  kBadSplit,
  kPrecisionLimit,
  kInsufficientData,
  kEnumerationTooLarge,
  kConfigInvalid,
  kIoError,
};

std::string_view ErrorKindName(ErrorKind kind);

// Builds a status with the canonical code matching `kind` and attaches the
// kind as a payload.
absl::Status MakeError(ErrorKind kind, std::string_view message);

// Returns the error kind attached by MakeError, or nullopt for OK statuses and
// statuses that did not originate here.
std::optional<ErrorKind> GetErrorKind(const absl::Status& status);

inline bool IsErrorKind(const absl::Status& status, ErrorKind kind) {
  return GetErrorKind(status) == kind;
}

}  // namespace dpsample

#define DPSAMPLE_RETURN_IF_ERROR(expr)          \
  do {                                          \
    if (absl::Status _st = (expr); !_st.ok()) { \
      return _st;                               \
    }                                           \
  } while (0)

#define DPSAMPLE_CONCAT_INNER_(a, b) a##b
#define DPSAMPLE_CONCAT_(a, b) DPSAMPLE_CONCAT_INNER_(a, b)

#define DPSAMPLE_ASSIGN_OR_RETURN(lhs, rexpr)                                  \
  DPSAMPLE_ASSIGN_OR_RETURN_IMPL_(DPSAMPLE_CONCAT_(_statusor_, __LINE__), lhs, \
                                  rexpr)

#define DPSAMPLE_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, rexpr) \
  auto tmp = (rexpr);                                    \
  if (!tmp.ok()) {                                       \
    return tmp.status();                                 \
  }                                                      \
  lhs = std::move(tmp).value()

#endif  // DPSAMPLE_STATUS_H_
