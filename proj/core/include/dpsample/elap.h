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

// The Euclidean-Laplace distribution ELap(b) on R^d: density
//
//   Gamma(d/2) / (2 pi^(d/2) b^d Gamma(d)) * exp(-||eta||_2 / b).
//
// It is spherically symmetric and its norm is Gamma(shape d, rate 1/b).

#ifndef DPSAMPLE_ELAP_H_
#define DPSAMPLE_ELAP_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "dpsample/gamma.h"
#include "dpsample/random.h"

namespace dpsample {

class ElapParams {
 public:
  static absl::StatusOr<ElapParams> Create(int dim, double scale);

  int dim() const { return dim_; }
  double scale() const { return scale_; }

  // Law of ||eta||_2: Gamma(dim, 1 / scale).
  GammaParams NormLaw() const;

  // log of the normalizing constant Gamma(d/2) / (2 pi^(d/2) b^d Gamma(d)).
  double LogNormalizer() const { return log_normalizer_; }

 private:
  ElapParams(int dim, double scale);

  int dim_;
  double scale_;
  double log_normalizer_;
};

// Errors: DimensionMismatch when eta.size() != dim.
absl::StatusOr<double> ElapLogDensity(std::span<const double> eta,
                                      const ElapParams& params);
absl::StatusOr<double> ElapDensity(std::span<const double> eta,
                                   const ElapParams& params);

// Log-density as a function of the radius ||eta||_2 alone.
double ElapLogDensityAtRadius(double radius, const ElapParams& params);

// Exact sampler: radius ~ Gamma(shape d, scale b) times a uniform direction
// (normalized standard normal vector, redrawn if its norm is below 1e-300).
std::vector<double> ElapSample(const ElapParams& params, RandomSource& rng);

// Writes one sample into `out` (size dim) without allocating.
void ElapSampleInto(const ElapParams& params, RandomSource& rng,
                    std::span<double> out);

// d * b * ln(d / alpha): the norm exceeds this with probability <= alpha.
// Errors: InvalidAlpha unless 0 < alpha < 1.
absl::StatusOr<double> ElapTailRadius(const ElapParams& params, double alpha);

}  // namespace dpsample

#endif  // DPSAMPLE_ELAP_H_
