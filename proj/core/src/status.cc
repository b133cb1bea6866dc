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

#include "dpsample/status.h"

#include <array>
#include <string>
#include <utility>

#include "absl/strings/cord.h"
#include "absl/strings/str_cat.h"

namespace dpsample {
namespace {

constexpr std::string_view kPayloadUrl = "type.dpsample/error_kind";

constexpr std::array<std::pair<ErrorKind, std::string_view>, 21> kNames = {{
    {ErrorKind::kNegativeMass, "NegativeMass"},
    {ErrorKind::kNotNormalized, "NotNormalized"},
    {ErrorKind::kDomainTooSmall, "DomainTooSmall"},
    {ErrorKind::kDomainMismatch, "DomainMismatch"},
    {ErrorKind::kOutOfDomain, "OutOfDomain"},
    {ErrorKind::kEmptyDataset, "EmptyDataset"},
    {ErrorKind::kDimensionMismatch, "DimensionMismatch"},
    {ErrorKind::kInvalidOrder, "InvalidOrder"},
    {ErrorKind::kInvalidAlpha, "InvalidAlpha"},
    {ErrorKind::kInvalidParameter, "InvalidParameter"},
    {ErrorKind::kNonIntegerShape, "NonIntegerShape"},
    {ErrorKind::kInsufficientSamples, "InsufficientSamples"},
    {ErrorKind::kTooManyOutputs, "TooManyOutputs"},
    {ErrorKind::kTooFewSamples, "TooFewSamples"},
    {ErrorKind::kNormViolation, "NormViolation"},
    {ErrorKind::kBadSplit, "BadSplit"},
    {ErrorKind::kPrecisionLimit, "PrecisionLimit"},
    {ErrorKind::kInsufficientData, "InsufficientData"},
    {ErrorKind::kEnumerationTooLarge, "EnumerationTooLarge"},
    {ErrorKind::kConfigInvalid, "ConfigInvalid"},
    {ErrorKind::kIoError, "IoError"},
}};

absl::StatusCode CodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInsufficientSamples:
    case ErrorKind::kTooFewSamples:
    case ErrorKind::kInsufficientData:
    case ErrorKind::kNormViolation:
      return absl::StatusCode::kFailedPrecondition;
    case ErrorKind::kPrecisionLimit:
    case ErrorKind::kEnumerationTooLarge:
      return absl::StatusCode::kOutOfRange;
    case ErrorKind::kIoError:
      return absl::StatusCode::kNotFound;
    default:
      return absl::StatusCode::kInvalidArgument;
  }
}

}  // namespace

std::string_view ErrorKindName(ErrorKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "Unknown";
}

absl::Status MakeError(ErrorKind kind, std::string_view message) {
  const std::string name(ErrorKindName(kind));
  const std::string text = name + ": " + std::string(message);
  absl::Status status(CodeFor(kind), text);
  status.SetPayload(std::string(kPayloadUrl), absl::Cord(name));
  return status;
}

std::optional<ErrorKind> GetErrorKind(const absl::Status& status) {
  if (status.ok()) return std::nullopt;
  auto payload = status.GetPayload(std::string(kPayloadUrl));
  if (!payload.has_value()) return std::nullopt;
  const std::string name(*payload);
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

}  // namespace dpsample
