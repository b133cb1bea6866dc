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

#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "cli/cli.h"
#include "dpsample/dataset_io.h"
#include "dpsample/gaussian.h"
#include "dpsample/kary.h"
#include "dpsample/samplers.h"
#include "dpsample/status.h"

namespace dpsample::cli {
namespace {

using nlohmann::json;

template <typename T>
absl::Status ReadList(const json& j, const char* key, std::vector<T>& out) {
  if (!j.contains(key)) return absl::OkStatus();
  const json& v = j.at(key);
  out.clear();
  try {
    if (v.is_array()) {
      for (const json& e : v) out.push_back(e.get<T>());
    } else {
      out.push_back(v.get<T>());
    }
  } catch (const json::exception& e) {
    return MakeError(ErrorKind::kConfigInvalid,
                     absl::StrCat("grid key '", key, "': ", e.what()));
  }
  if (out.empty()) {
    return MakeError(ErrorKind::kConfigInvalid,
                     absl::StrCat("grid key '", key, "' is empty"));
  }
  return absl::OkStatus();
}

std::string Cell(const absl::StatusOr<int64_t>& value) {
  return value.ok() ? absl::StrCat(*value) : "NA";
}

absl::StatusOr<int64_t> FromReport(
    const absl::StatusOr<ComplexityReport>& report) {
  if (!report.ok()) return report.status();
  return report->n_required;
}

}  // namespace

absl::StatusOr<SweepGrid> ParseSweepGrid(const json& j) {
  if (!j.is_object()) {
    return MakeError(ErrorKind::kConfigInvalid, "grid must be a JSON object");
  }
  SweepGrid grid;
  DPSAMPLE_RETURN_IF_ERROR(ReadList(j, "k", grid.k));
  DPSAMPLE_RETURN_IF_ERROR(ReadList(j, "alpha", grid.alpha));
  DPSAMPLE_RETURN_IF_ERROR(ReadList(j, "eps", grid.eps));
  DPSAMPLE_RETURN_IF_ERROR(ReadList(j, "delta", grid.delta));
  DPSAMPLE_RETURN_IF_ERROR(ReadList(j, "m", grid.m));
  DPSAMPLE_RETURN_IF_ERROR(ReadList(j, "d", grid.d));
  DPSAMPLE_RETURN_IF_ERROR(ReadList(j, "R", grid.mean_bound));
  try {
    if (j.contains("clip_constant")) {
      grid.clip_constant = j.at("clip_constant").get<double>();
    }
    if (j.contains("complexity_constant")) {
      grid.complexity_constant = j.at("complexity_constant").get<double>();
    }
  } catch (const json::exception& e) {
    return MakeError(ErrorKind::kConfigInvalid, e.what());
  }
  return grid;
}

absl::StatusOr<std::string> TableSweep(const SweepGrid& g) {
  if (g.k.empty() || g.alpha.empty() || g.eps.empty() || g.delta.empty() ||
      g.m.empty() || g.d.empty() || g.mean_bound.empty()) {
    return MakeError(ErrorKind::kConfigInvalid, "sweep grid is empty");
  }
  std::string csv =
      "k,alpha,eps,delta,m,d,R,subrr_single,subrr_weak_repeat,"
      "subrr_strong_both,shurr_weak,shurr_strong,shurr_strong_over_weak,"
      "gaussian_pure_single,gaussian_zcdp_known_single,"
      "gaussian_zcdp_bounded_single\n";
  for (int k : g.k) {
    for (double alpha : g.alpha) {
      for (double eps : g.eps) {
        for (double delta : g.delta) {
          for (int64_t m : g.m) {
            for (int d : g.d) {
              for (double r : g.mean_bound) {
                const absl::StatusOr<int64_t> single =
                    FromReport(SubrrSampleComplexity(k, alpha, eps));
                absl::StatusOr<int64_t> repeat = single;
                if (single.ok()) repeat = m * *single;
                absl::StatusOr<int64_t> both =
                    MakeError(ErrorKind::kInvalidParameter, "n/a");
                if (auto sampler = MakeSubrrSampler(k, eps); sampler.ok()) {
                  both = StrongViaBothComplexity(*sampler, m, alpha);
                }
                const absl::StatusOr<int64_t> weak =
                    FromReport(ShurrWeakComplexity(k, alpha, eps, delta, m));
                const absl::StatusOr<int64_t> strong =
                    FromReport(ShurrStrongComplexity(k, alpha, eps, delta, m));
                std::string ratio = "NA";
                if (weak.ok() && strong.ok()) {
                  ratio = FormatDouble(static_cast<double>(*strong) /
                                       static_cast<double>(*weak));
                }
                const absl::StatusOr<int64_t> pure =
                    FromReport(PureSampleComplexity(d, r, alpha, eps,
                                                    g.complexity_constant,
                                                    g.clip_constant));
                const absl::StatusOr<int64_t> known =
                    FromReport(ZcdpKnownCovComplexity(d, r, alpha, eps));
                const absl::StatusOr<int64_t> bounded =
                    FromReport(ZcdpBoundedCovComplexity(d, r, alpha, eps));
                absl::StrAppend(
                    &csv,
                    absl::StrJoin({absl::StrCat(k), FormatDouble(alpha),
                                   FormatDouble(eps), FormatDouble(delta),
                                   absl::StrCat(m), absl::StrCat(d),
                                   FormatDouble(r), Cell(single), Cell(repeat),
                                   Cell(both), Cell(weak), Cell(strong), ratio,
                                   Cell(pure), Cell(known), Cell(bounded)},
                                  ","),
                    "\n");
              }
            }
          }
        }
      }
    }
  }
  return csv;
}

}  // namespace dpsample::cli
