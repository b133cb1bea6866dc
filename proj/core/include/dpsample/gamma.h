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

#ifndef DPSAMPLE_GAMMA_H_
#define DPSAMPLE_GAMMA_H_

#include "absl/status/statusor.h"
#include "dpsample/random.h"

namespace dpsample {

// Gamma(shape, rate); the scale is 1 / rate.
class GammaParams {
 public:
  static absl::StatusOr<GammaParams> Create(double shape, double rate);

  double shape() const { return shape_; }
  double rate() const { return rate_; }
  double scale() const { return 1.0 / rate_; }
  bool has_integer_shape() const;

 private:
  GammaParams(double shape, double rate) : shape_(shape), rate_(rate) {}

  double shape_;
  double rate_;
};

// Pr(X > t) <= shape * exp(-rate * t / shape), clamped to [0, 1]. The
// union-bound argument behind it needs an integer shape; otherwise
// NonIntegerShape. t must be positive.
absl::StatusOr<double> GammaTailBound(const GammaParams& params, double t);

// Exact Pr(X > t), the regularized upper incomplete gamma Q(shape, rate * t).
// Integer shapes use the Poisson sum; other shapes use the series /
// continued-fraction pair. Negative t returns 1.
double GammaExactTail(const GammaParams& params, double t);

// Pr(X <= t).
double GammaCdf(const GammaParams& params, double t);

// Regularized incomplete gamma functions Q(a, x) and P(a, x) = 1 - Q(a, x).
double RegularizedGammaQ(double a, double x);
double RegularizedGammaP(double a, double x);

// Exact Gamma variate by Marsaglia-Tsang rejection (shape >= 1), with the
// U^(1/shape) boost for shape < 1.
double GammaSample(const GammaParams& params, RandomSource& rng);

}  // namespace dpsample

#endif  // DPSAMPLE_GAMMA_H_
