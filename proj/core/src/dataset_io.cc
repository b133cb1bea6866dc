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

#include "dpsample/dataset_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "dpsample/status.h"

namespace dpsample {
namespace {

// The system absl has its own string_view type.
absl::string_view ToAbsl(std::string_view s) { return {s.data(), s.size()}; }
std::string_view FromAbsl(absl::string_view s) { return {s.data(), s.size()}; }

std::string_view Strip(std::string_view s) {
  return FromAbsl(absl::StripAsciiWhitespace(ToAbsl(s)));
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  for (absl::string_view part : absl::StrSplit(ToAbsl(text), sep)) {
    parts.push_back(FromAbsl(part));
  }
  return parts;
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view line : Split(text, '\n')) {
    line = Strip(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

bool ParseDouble(std::string_view field, double& out) {
  field = Strip(field);
  if (field.empty()) return false;
  if (field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

bool ParseInt(std::string_view field, long long& out) {
  field = Strip(field);
  if (field.empty()) return false;
  if (field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

bool ParseRow(std::string_view line, std::vector<double>& row) {
  row.clear();
  for (std::string_view field : Split(line, ',')) {
    double v;
    if (!ParseDouble(field, v)) return false;
    row.push_back(v);
  }
  return true;
}

}  // namespace

absl::StatusOr<KaryDataset> ParseKaryCsv(std::string_view text,
                                         std::optional<int> k) {
  std::vector<std::string_view> lines = Lines(text);
  std::vector<Element> values;
  values.reserve(lines.size());
  for (size_t i = 0; i < lines.size(); ++i) {
    long long v;
    if (!ParseInt(lines[i], v)) {
      if (i == 0) continue;  // header
      return MakeError(ErrorKind::kConfigInvalid,
                       absl::StrCat("line ", i + 1, ": '", ToAbsl(lines[i]),
                                    "' is not an integer record"));
    }
    if (v < 1 || v > std::numeric_limits<Element>::max()) {
      return MakeError(ErrorKind::kOutOfDomain,
                       absl::StrCat("line ", i + 1, ": value ", v,
                                    " is not a positive domain element"));
    }
    values.push_back(static_cast<Element>(v));
  }
  int domain = 2;
  if (k.has_value()) {
    domain = *k;
  } else if (!values.empty()) {
    domain = std::max(2, *std::max_element(values.begin(), values.end()));
  }
  return KaryDataset::Create(std::move(values), domain);
}

absl::StatusOr<VectorDataset> ParseVectorCsv(std::string_view text) {
  std::vector<std::string_view> lines = Lines(text);
  std::vector<double> flat;
  std::vector<double> row;
  int dim = -1;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (!ParseRow(lines[i], row)) {
      if (i == 0) continue;
      return MakeError(ErrorKind::kConfigInvalid,
                       absl::StrCat("line ", i + 1, ": '", ToAbsl(lines[i]),
                                    "' is not a numeric row"));
    }
    if (dim < 0) dim = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != dim) {
      return MakeError(ErrorKind::kDimensionMismatch,
                       absl::StrCat("line ", i + 1, " has ", row.size(),
                                    " columns, expected ", dim));
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (dim < 0) return MakeError(ErrorKind::kEmptyDataset, "no rows");
  return VectorDataset::FromFlat(std::move(flat), dim);
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorKind::kIoError,
                     absl::StrCat("cannot open '", path, "'"));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteTextFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return MakeError(ErrorKind::kIoError,
                     absl::StrCat("cannot write '", path, "'"));
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    return MakeError(ErrorKind::kIoError,
                     absl::StrCat("short write to '", path, "'"));
  }
  return absl::OkStatus();
}

absl::StatusOr<KaryDataset> ReadKaryCsv(const std::string& path,
                                        std::optional<int> k) {
  DPSAMPLE_ASSIGN_OR_RETURN(std::string text, ReadTextFile(path));
  return ParseKaryCsv(text, k);
}

absl::StatusOr<VectorDataset> ReadVectorCsv(const std::string& path) {
  DPSAMPLE_ASSIGN_OR_RETURN(std::string text, ReadTextFile(path));
  return ParseVectorCsv(text);
}

std::string FormatDouble(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string FormatKaryCsv(std::span<const Element> values) {
  std::string out;
  out.reserve(values.size() * 3);
  for (Element v : values) absl::StrAppend(&out, v, "\n");
  return out;
}

std::string FormatVectorCsv(std::span<const double> rows, int dim) {
  std::string out;
  for (size_t i = 0; i < rows.size(); ++i) {
    out += FormatDouble(rows[i]);
    out += ((i + 1) % static_cast<size_t>(dim) == 0) ? '\n' : ',';
  }
  return out;
}

}  // namespace dpsample
