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

// Combinators from single-samplers to weak multi-samplers (disjoint blocks)
// and from weak to strong multi-samplers (per-output tolerance alpha / m).
//
// Dataset must provide size() and Slice(begin, count).

#ifndef DPSAMPLE_MULTISAMPLING_H_
#define DPSAMPLE_MULTISAMPLING_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "dpsample/kary.h"
#include "dpsample/parallel.h"
#include "dpsample/random.h"
#include "dpsample/status.h"
#include "dpsample/types.h"

namespace dpsample {

template <typename Dataset, typename Output>
struct SingleSampler {
  std::string name;
  PrivacyBudget budget;
  // Rows needed for one call at tolerance alpha.
  std::function<absl::StatusOr<int64_t>(double alpha)> n_per_call;
  std::function<absl::StatusOr<Output>(const Dataset&, double alpha,
                                       RandomSource&)>
      sample;
};

template <typename Dataset, typename Output>
struct WeakSampler {
  std::string name;
  PrivacyBudget budget;
  std::function<absl::StatusOr<int64_t>(double alpha, int64_t m)> n_required;
  std::function<absl::StatusOr<std::vector<Output>>(
      const Dataset&, int64_t m, double alpha, RandomSource&)>
      sample;
};

struct Block {
  int64_t begin = 0;
  int64_t count = 0;
};

// Consecutive blocks [j * n, (j + 1) * n) for j < m.
inline std::vector<Block> RepetitionBlocks(int64_t m, int64_t n) {
  std::vector<Block> blocks(m);
  for (int64_t j = 0; j < m; ++j) blocks[j] = {j * n, n};
  return blocks;
}

// Runs the single-sampler on m disjoint consecutive blocks of n_per_call(alpha)
// rows. Block j draws from stream rng.Derive(j). Rows past m * n are ignored.
// Errors: InsufficientData, plus errors of the inner sampler.
template <typename Dataset, typename Output>
absl::StatusOr<std::vector<Output>> WeakViaRepetition(
    const SingleSampler<Dataset, Output>& single, int64_t m, double alpha,
    const Dataset& data, const RandomSource& rng) {
  if (m < 1) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("m must be >= 1, got ", m));
  }
  DPSAMPLE_ASSIGN_OR_RETURN(int64_t n, single.n_per_call(alpha));
  if (data.size() / m < n) {
    return MakeError(
        ErrorKind::kInsufficientData,
        absl::StrCat(single.name, ": ", m, " blocks of ", n, " rows need ",
                     m * n, ", have ", data.size()));
  }
  const std::vector<Block> blocks = RepetitionBlocks(m, n);
  std::vector<std::optional<absl::StatusOr<Output>>> results(m);
  ParallelFor(m, [&](int64_t j) {
    RandomSource block_rng = rng.Derive(static_cast<uint64_t>(j));
    results[j] = single.sample(data.Slice(blocks[j].begin, blocks[j].count),
                               alpha, block_rng);
  });
  std::vector<Output> out;
  out.reserve(m);
  for (auto& r : results) {
    if (!r->ok()) return r->status();
    out.push_back(*std::move(*r));
  }
  return out;
}

template <typename Dataset, typename Output>
WeakSampler<Dataset, Output> MakeWeakFromSingle(
    SingleSampler<Dataset, Output> single) {
  WeakSampler<Dataset, Output> weak{
      .name = absl::StrCat("repeat(", single.name, ")"),
      .budget = single.budget,
      .n_required = nullptr,
      .sample = nullptr,
  };
  weak.n_required = [n_per_call = single.n_per_call](
                        double alpha, int64_t m) -> absl::StatusOr<int64_t> {
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t n, n_per_call(alpha));
    return m * n;
  };
  weak.sample = [single = std::move(single)](
                    const Dataset& data, int64_t m, double alpha,
                    RandomSource& rng) -> absl::StatusOr<std::vector<Output>> {
    return WeakViaRepetition(single, m, alpha, data, rng);
  };
  return weak;
}

inline absl::StatusOr<double> StrongTolerance(double alpha, int64_t m) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    return MakeError(ErrorKind::kInvalidAlpha,
                     absl::StrCat("alpha must lie in (0, 1), got ", alpha));
  }
  if (m < 1) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("m must be >= 1, got ", m));
  }
  const double per_output = alpha / static_cast<double>(m);
  if (per_output < kMinStrongTolerance) {
    return MakeError(
        ErrorKind::kPrecisionLimit,
        absl::StrCat("alpha / m = ", per_output,
                     " is below the supported minimum ", kMinStrongTolerance));
  }
  return per_output;
}

// Rows needed by StrongViaPrecision.
template <typename Dataset, typename Output>
absl::StatusOr<int64_t> StrongViaPrecisionComplexity(
    const WeakSampler<Dataset, Output>& weak, int64_t m, double alpha) {
  DPSAMPLE_ASSIGN_OR_RETURN(double per_output, StrongTolerance(alpha, m));
  return weak.n_required(per_output, m);
}

// Weak sampler at tolerance alpha / m. Errors: PrecisionLimit,
// InsufficientData, plus errors of the inner sampler.
template <typename Dataset, typename Output>
absl::StatusOr<std::vector<Output>> StrongViaPrecision(
    const WeakSampler<Dataset, Output>& weak, int64_t m, double alpha,
    const Dataset& data, RandomSource& rng) {
  DPSAMPLE_ASSIGN_OR_RETURN(double per_output, StrongTolerance(alpha, m));
  DPSAMPLE_ASSIGN_OR_RETURN(int64_t needed, weak.n_required(per_output, m));
  if (data.size() < needed) {
    return MakeError(
        ErrorKind::kInsufficientData,
        absl::StrCat(weak.name, " at tolerance ", per_output, " needs ", needed,
                     " rows, have ", data.size()));
  }
  return weak.sample(data, m, per_output, rng);
}

// m * n_per_call(alpha / m).
template <typename Dataset, typename Output>
absl::StatusOr<int64_t> StrongViaBothComplexity(
    const SingleSampler<Dataset, Output>& single, int64_t m, double alpha) {
  DPSAMPLE_ASSIGN_OR_RETURN(double per_output, StrongTolerance(alpha, m));
  DPSAMPLE_ASSIGN_OR_RETURN(int64_t n, single.n_per_call(per_output));
  return m * n;
}

template <typename Dataset, typename Output>
absl::StatusOr<std::vector<Output>> StrongViaBoth(
    const SingleSampler<Dataset, Output>& single, int64_t m, double alpha,
    const Dataset& data, RandomSource& rng) {
  return StrongViaPrecision(MakeWeakFromSingle(single), m, alpha, data, rng);
}

}  // namespace dpsample

#endif  // DPSAMPLE_MULTISAMPLING_H_
