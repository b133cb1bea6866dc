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

// Not installed. Lets tests switch off individual noise components.

#ifndef DPSAMPLE_INTERNAL_GAUSSIAN_HOOKS_H_
#define DPSAMPLE_INTERNAL_GAUSSIAN_HOOKS_H_

#include <vector>

#include "absl/status/statusor.h"
#include "dpsample/gaussian.h"

namespace dpsample::internal {

struct NoiseMask {
  bool elap = true;
  bool gaussian = true;
};

absl::StatusOr<std::vector<double>> PureGaussianSampleMasked(
    const VectorDataset& data, const PureGaussianSamplerParams& params,
    RandomSource& rng, NoiseMask mask);

absl::StatusOr<std::vector<double>> ZcdpBoundedCovSampleMasked(
    const VectorDataset& data, int64_t n1, int64_t n2, double clip_bound,
    double sigma2, RandomSource& rng, NoiseMask mask);

}  // namespace dpsample::internal

#endif  // DPSAMPLE_INTERNAL_GAUSSIAN_HOOKS_H_
