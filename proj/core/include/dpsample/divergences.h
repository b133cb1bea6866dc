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

#ifndef DPSAMPLE_DIVERGENCES_H_
#define DPSAMPLE_DIVERGENCES_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "dpsample/types.h"

namespace dpsample {

// (1/2) sum |p_i - q_i|. Errors: DomainMismatch.
absl::StatusOr<double> TvDistance(const CategoricalDist& p,
                                  const CategoricalDist& q);

// sum max(0, p_i - beta q_i) = sup_E P(E) - beta Q(E).
// Errors: DomainMismatch, InvalidOrder (beta < 1).
absl::StatusOr<double> HockeyStick(const CategoricalDist& p,
                                   const CategoricalDist& q, double beta);

// Renyi divergence of order > 1, in nats:
//   1/(order-1) log sum p_i^order q_i^(1-order).
// Terms with p_i = 0 contribute 0 (including 0 log 0/0); p_i > 0 = q_i gives
// +infinity. Errors: DomainMismatch, InvalidOrder (order <= 1).
absl::StatusOr<double> RenyiDivergence(const CategoricalDist& p,
                                       const CategoricalDist& q, double order);

struct ClosenessResult {
  double hs_forward = 0.0;   // D^HS_{e^eps}(p || q)
  double hs_backward = 0.0;  // D^HS_{e^eps}(q || p)
  // Smallest delta with p ~_{eps, delta} q.
  double delta_at_eps = 0.0;
};

// Errors: DomainMismatch, InvalidParameter (eps < 0).
absl::StatusOr<ClosenessResult> EpsDeltaCloseness(const CategoricalDist& p,
                                                  const CategoricalDist& q,
                                                  double eps);

// Upper bound on TV between (eps, delta)-close distributions:
// 2 delta / (e^eps + 1) + (e^eps - 1).
double HockeyStickToTvBound(double eps, double delta);

struct BinnedTvEstimate {
  double estimate = 0.0;
  // Half of the central 95% bootstrap interval.
  double halfwidth = 0.0;
  int bins_per_axis = 0;
};

struct BinnedTvOptions {
  int bins_per_axis = 100;
  int bootstrap_resamples = 200;
  uint64_t seed = 0;
};

// Half-L1 distance between equal-width histograms of the two sample sets on
// their joint bounding box (widened by 1%, half on each side), with a
// bootstrap confidence halfwidth. Errors: DimensionMismatch, EmptyDataset,
// InvalidParameter (bins_per_axis < 2, or too many cells).
absl::StatusOr<BinnedTvEstimate> TvEstimateBinned(
    const VectorDataset& samples_p, const VectorDataset& samples_q,
    const BinnedTvOptions& options);

}  // namespace dpsample

#endif  // DPSAMPLE_DIVERGENCES_H_
