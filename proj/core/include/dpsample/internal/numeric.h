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

#ifndef DPSAMPLE_INTERNAL_NUMERIC_H_
#define DPSAMPLE_INTERNAL_NUMERIC_H_

#include <cmath>
#include <cstdint>
#include <limits>

#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"
#include "dpsample/status.h"

namespace dpsample::internal {

// Largest sample count a calculator will report.
inline constexpr double kMaxSampleCount = 0x1.0p62;

// Ceiling of a real-valued sample bound. A few ulps of slack absorb rounding
// in the bound's evaluation: 9 * 0.9 / 0.1 evaluates to 81.00000000000001,
// whose true value is exactly 81.
inline absl::StatusOr<int64_t> CeilSampleBound(double bound,
                                               absl::string_view what) {
  if (std::isnan(bound) || bound > kMaxSampleCount) {
    return MakeError(ErrorKind::kPrecisionLimit,
                     absl::StrCat(what, " needs ", bound,
                                  " samples, beyond the representable range"));
  }
  const double slack = 8.0 * std::numeric_limits<double>::epsilon();
  const double value = std::ceil(bound * (1.0 - slack));
  return std::max<int64_t>(1, static_cast<int64_t>(value));
}

inline absl::Status CheckAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    return MakeError(ErrorKind::kInvalidAlpha,
                     absl::StrCat("alpha must lie in (0, 1), got ", alpha));
  }
  return absl::OkStatus();
}

inline absl::Status CheckPositive(double value, absl::string_view name) {
  if (!(value > 0.0) || std::isnan(value)) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat(name, " must be positive, got ", value));
  }
  return absl::OkStatus();
}

}  // namespace dpsample::internal

#endif  // DPSAMPLE_INTERNAL_NUMERIC_H_
