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

#ifndef DPSAMPLE_GAUSSIAN_H_
#define DPSAMPLE_GAUSSIAN_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "dpsample/random.h"
#include "dpsample/types.h"

namespace dpsample {

// x * min(1, B / |x|), leaving norms within 16 ulps of B unscaled so that
// clipping is idempotent. The zero vector maps to itself.
std::vector<double> ClipToBall(std::span<const double> x, double bound);
void ClipToBallInPlace(std::span<double> x, double bound);

// Euclidean-Laplace mechanism over sums of rows with norm <= B.
//
// The noise scale is b = multiplier * B / eps. multiplier = 1 matches
// b = B / eps; under replacement neighbors the sum can move by up to 2B, and
// multiplier = 2 calibrates for that.
class ElapMechanismParams {
 public:
  static absl::StatusOr<ElapMechanismParams> Create(double bound, double eps,
                                                    double multiplier = 1.0);

  double bound() const { return bound_; }
  double eps() const { return eps_; }
  double multiplier() const { return multiplier_; }
  double scale() const { return multiplier_ * bound_ / eps_; }

 private:
  ElapMechanismParams(double bound, double eps, double multiplier)
      : bound_(bound), eps_(eps), multiplier_(multiplier) {}

  double bound_;
  double eps_;
  double multiplier_;
};

// Row norms may exceed B by at most this much.
inline constexpr double kNormSlack = 1e-9;

// sum_i X_i + ELap(b). Errors: NormViolation.
absl::StatusOr<std::vector<double>> ElapMechanism(
    const VectorDataset& data, const ElapMechanismParams& params,
    RandomSource& rng);

// Sum of rows.
std::vector<double> RowSum(const VectorDataset& data);

// ---- Pure-DP sampler ------------------------------------------------------

class PureGaussianSamplerParams {
 public:
  // Clip bound B = R + c sqrt(d ln(1/alpha)).
  // Errors: InvalidAlpha, InvalidParameter.
  static absl::StatusOr<PureGaussianSamplerParams> Create(
      double mean_bound, int dim, double alpha, double eps,
      double clip_constant = 2.0, double sensitivity_multiplier = 1.0);

  double mean_bound() const { return mean_bound_; }
  int dim() const { return dim_; }
  double alpha() const { return alpha_; }
  double eps() const { return eps_; }
  double clip_constant() const { return clip_constant_; }
  double sensitivity_multiplier() const { return multiplier_; }
  double clip_bound() const { return clip_bound_; }

 private:
  PureGaussianSamplerParams() = default;

  double mean_bound_ = 0.0;
  int dim_ = 1;
  double alpha_ = 0.0;
  double eps_ = 0.0;
  double clip_constant_ = 0.0;
  double multiplier_ = 1.0;
  double clip_bound_ = 0.0;
};

// Z + (1/n)(ELap(b) + sum_i clip(X_i, B)), Z ~ N(0, ((n-1)/n) I).
// Errors: TooFewSamples (n < 2), DimensionMismatch.
absl::StatusOr<std::vector<double>> PureGaussianSample(
    const VectorDataset& data, const PureGaussianSamplerParams& params,
    RandomSource& rng);

// ceil(C d B ln(d/alpha) ln(1/alpha) / (alpha eps)), B as above.
absl::StatusOr<ComplexityReport> PureSampleComplexity(
    int dim, double mean_bound, double alpha, double eps,
    double complexity_constant = 1.0, double clip_constant = 2.0);

// ---- zCDP samplers --------------------------------------------------------

enum class ZcdpVariant { kKnownCov, kBoundedCov };

struct ZcdpParams {
  ZcdpVariant variant = ZcdpVariant::kKnownCov;
  int dim = 1;
  double clip_bound = 0.0;
  double sigma2 = 0.0;
  int64_t n = 0;
  // Bounded-covariance split; zero for the known-covariance variant.
  int64_t n1 = 0;
  int64_t n2 = 0;

  // L2 sensitivity of the pre-noise statistic under replacement.
  double Sensitivity() const;
};

// B = R + sqrt(2 (d + ln(1/alpha))).
absl::StatusOr<double> ZcdpKnownCovClipBound(double mean_bound, int dim,
                                             double alpha);

// Parameters for n rows. Errors: TooFewSamples when n < 2 or
// 2B / (eps n) > sqrt((n-1)/n).
absl::StatusOr<ZcdpParams> ZcdpKnownCovParams(int dim, double mean_bound,
                                              double eps, double alpha,
                                              int64_t n);

// Clipped mean + N(0, ((n-1)/n) I). Errors: TooFewSamples.
absl::StatusOr<std::vector<double>> ZcdpKnownCovSample(
    const VectorDataset& data, double mean_bound, double eps, double alpha,
    RandomSource& rng);

// Smallest n >= 2 with 2B / (eps n) <= sqrt((n-1)/n).
absl::StatusOr<ComplexityReport> ZcdpKnownCovComplexity(int dim,
                                                        double mean_bound,
                                                        double alpha,
                                                        double eps);

// B = R + sqrt(2 d ln(2/alpha)).
absl::StatusOr<double> ZcdpBoundedCovClipBound(double mean_bound, int dim,
                                               double alpha);

// sigma2 = alpha / (4 sqrt(d)).
double ZcdpBoundedCovSigma2(int dim, double alpha);

// Z + (1/n1) sum_{i<=n1} X_i
//   + sqrt((1 - 1/n1) / (2 n2)) sum_{i<=n2} (X_{n1+2i-1} - X_{n1+2i}),
// rows clipped to B, Z ~ N(0, sigma2 I).
// Errors: BadSplit (rows != n1 + 2 n2 or n1 != n2), TooFewSamples.
absl::StatusOr<std::vector<double>> ZcdpBoundedCovSample(
    const VectorDataset& data, int64_t n1, int64_t n2, double clip_bound,
    double sigma2, RandomSource& rng);

// Same, with n1 = n2 = rows / 3. Errors: BadSplit when rows % 3 != 0.
absl::StatusOr<std::vector<double>> ZcdpBoundedCovSampleEven(
    const VectorDataset& data, double clip_bound, double sigma2,
    RandomSource& rng);

// Largest coefficient a single row receives, times 2B:
//   2B max(1/n1, sqrt((1 - 1/n1) / (2 n2))).
double BoundedCovSensitivity(double clip_bound, int64_t n1, int64_t n2);

// ceil(4 sqrt(d) B^2 / (alpha eps^2)) with B from ZcdpBoundedCovClipBound.
absl::StatusOr<ComplexityReport> ZcdpBoundedCovComplexity(int dim,
                                                          double mean_bound,
                                                          double alpha,
                                                          double eps);

// Same formula with B given directly.
absl::StatusOr<ComplexityReport> ZcdpBoundedCovComplexityForBound(
    int dim, double clip_bound, double alpha, double eps);

// order * delta_norm^2 / (2 sigma^2).
double GaussianMechRenyi(double delta_norm, double sigma, double order);

}  // namespace dpsample

#endif  // DPSAMPLE_GAUSSIAN_H_
