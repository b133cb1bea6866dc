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

// CSV datasets: one record per line, either a single integer in [1..k] or a
// comma-separated real vector. A first line that does not parse as numbers is
// treated as a header and skipped. Blank lines are ignored.

#ifndef DPSAMPLE_DATASET_IO_H_
#define DPSAMPLE_DATASET_IO_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpsample/types.h"

namespace dpsample {

// Parses k-ary records. When `k` is nullopt the domain size is the largest
// value seen (but at least 2).
absl::StatusOr<KaryDataset> ParseKaryCsv(std::string_view text,
                                         std::optional<int> k = std::nullopt);
absl::StatusOr<VectorDataset> ParseVectorCsv(std::string_view text);

absl::StatusOr<KaryDataset> ReadKaryCsv(const std::string& path,
                                        std::optional<int> k = std::nullopt);
absl::StatusOr<VectorDataset> ReadVectorCsv(const std::string& path);

// Shortest decimal string that round-trips to the same double.
std::string FormatDouble(double value);

std::string FormatKaryCsv(std::span<const Element> values);
// `rows` is row-major with `dim` columns.
std::string FormatVectorCsv(std::span<const double> rows, int dim);

absl::Status WriteTextFile(const std::string& path, std::string_view content);
absl::StatusOr<std::string> ReadTextFile(const std::string& path);

}  // namespace dpsample

#endif  // DPSAMPLE_DATASET_IO_H_
