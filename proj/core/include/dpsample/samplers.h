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

// Concrete samplers packaged for the combinators in multisampling.h.

#ifndef DPSAMPLE_SAMPLERS_H_
#define DPSAMPLE_SAMPLERS_H_

#include <vector>

#include "absl/status/statusor.h"
#include "dpsample/multisampling.h"
#include "dpsample/types.h"

namespace dpsample {

using KarySingleSampler = SingleSampler<KaryDataset, Element>;
using KaryWeakSampler = WeakSampler<KaryDataset, Element>;
using GaussianSingleSampler = SingleSampler<VectorDataset, std::vector<double>>;
using GaussianWeakSampler = WeakSampler<VectorDataset, std::vector<double>>;

absl::StatusOr<KarySingleSampler> MakeSubrrSampler(int k, double eps);

// Uses the first n_required(alpha, m) rows. Budget is (eps, delta).
absl::StatusOr<KaryWeakSampler> MakeShurrSampler(int k, double eps,
                                                 double delta);

struct GaussianSamplerOptions {
  int dim = 1;
  double mean_bound = 1.0;
  double eps = 1.0;
  double clip_constant = 2.0;
  double complexity_constant = 1.0;
  double sensitivity_multiplier = 1.0;
};

absl::StatusOr<GaussianSingleSampler> MakePureGaussianSampler(
    const GaussianSamplerOptions& options);

absl::StatusOr<GaussianSingleSampler> MakeZcdpKnownCovSampler(
    const GaussianSamplerOptions& options);

// Block size is the complexity rounded up to a multiple of 3, split evenly.
absl::StatusOr<GaussianSingleSampler> MakeZcdpBoundedCovSampler(
    const GaussianSamplerOptions& options);

}  // namespace dpsample

#endif  // DPSAMPLE_SAMPLERS_H_
