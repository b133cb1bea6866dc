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

#include "dpsample/gaussian.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "dpsample/elap.h"
#include "dpsample/internal/gaussian_hooks.h"
#include "dpsample/internal/numeric.h"
#include "dpsample/status.h"

namespace dpsample {
namespace {

double Norm(std::span<const double> x) {
  double sq = 0.0;
  for (double v : x) sq += v * v;
  return std::sqrt(sq);
}

// Norms within a few ulps of B are left alone so clipping is idempotent: a
// rescaled vector's recomputed norm can land an ulp above B.
constexpr double kClipTolerance = 16 * std::numeric_limits<double>::epsilon();

double ClipFactor(std::span<const double> x, double bound) {
  const double norm = Norm(x);
  return norm > bound * (1.0 + kClipTolerance) ? bound / norm : 1.0;
}

// Adds coef * clip(row, B) to acc.
void AccumulateClipped(std::span<const double> row, double bound, double coef,
                       std::vector<double>& acc) {
  const double scale = coef * ClipFactor(row, bound);
  for (size_t a = 0; a < acc.size(); ++a) acc[a] += scale * row[a];
}

void AddIsotropicNormal(double variance, RandomSource& rng,
                        std::vector<double>& out) {
  const double sd = std::sqrt(variance);
  for (double& v : out) v += sd * rng.StandardNormal();
}

absl::Status CheckSamplesAtLeastTwo(int64_t n) {
  if (n < 2) {
    return MakeError(ErrorKind::kTooFewSamples,
                     absl::StrCat("need at least 2 rows, got ", n));
  }
  return absl::OkStatus();
}

absl::Status CheckDim(int dim) {
  if (dim < 1) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("dimension must be >= 1, got ", dim));
  }
  return absl::OkStatus();
}

absl::Status CheckMeanBound(double mean_bound) {
  if (!(mean_bound >= 0.0) || std::isinf(mean_bound)) {
    return MakeError(
        ErrorKind::kInvalidParameter,
        absl::StrCat("mean bound R must be finite and >= 0, got ", mean_bound));
  }
  return absl::OkStatus();
}

bool KnownCovFeasible(double bound, double eps, int64_t n) {
  const double nn = static_cast<double>(n);
  return 2.0 * bound / (eps * nn) <= std::sqrt((nn - 1.0) / nn);
}

}  // namespace

std::vector<double> ClipToBall(std::span<const double> x, double bound) {
  std::vector<double> out(x.begin(), x.end());
  ClipToBallInPlace(out, bound);
  return out;
}

void ClipToBallInPlace(std::span<double> x, double bound) {
  const double factor = ClipFactor(x, bound);
  if (factor == 1.0) return;
  for (double& v : x) v *= factor;
}

absl::StatusOr<ElapMechanismParams> ElapMechanismParams::Create(
    double bound, double eps, double multiplier) {
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(bound, "clip bound B"));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(eps, "eps"));
  DPSAMPLE_RETURN_IF_ERROR(
      internal::CheckPositive(multiplier, "sensitivity multiplier"));
  return ElapMechanismParams(bound, eps, multiplier);
}

std::vector<double> RowSum(const VectorDataset& data) {
  std::vector<double> sum(data.dim(), 0.0);
  for (int64_t i = 0; i < data.size(); ++i) {
    const auto row = data.row(i);
    for (int a = 0; a < data.dim(); ++a) sum[a] += row[a];
  }
  return sum;
}

absl::StatusOr<std::vector<double>> ElapMechanism(
    const VectorDataset& data, const ElapMechanismParams& params,
    RandomSource& rng) {
  for (int64_t i = 0; i < data.size(); ++i) {
    const double norm = Norm(data.row(i));
    if (norm > params.bound() + kNormSlack) {
      return MakeError(ErrorKind::kNormViolation,
                       absl::StrCat("row ", i, " has norm ", norm,
                                    " > B = ", params.bound()));
    }
  }
  DPSAMPLE_ASSIGN_OR_RETURN(ElapParams noise,
                            ElapParams::Create(data.dim(), params.scale()));
  std::vector<double> out(data.dim());
  ElapSampleInto(noise, rng, out);
  const std::vector<double> sum = RowSum(data);
  for (int a = 0; a < data.dim(); ++a) out[a] += sum[a];
  return out;
}

absl::StatusOr<PureGaussianSamplerParams> PureGaussianSamplerParams::Create(
    double mean_bound, int dim, double alpha, double eps, double clip_constant,
    double sensitivity_multiplier) {
  DPSAMPLE_RETURN_IF_ERROR(CheckDim(dim));
  DPSAMPLE_RETURN_IF_ERROR(CheckMeanBound(mean_bound));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckAlpha(alpha));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(eps, "eps"));
  DPSAMPLE_RETURN_IF_ERROR(
      internal::CheckPositive(clip_constant, "clip constant c"));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(sensitivity_multiplier,
                                                   "sensitivity multiplier"));
  PureGaussianSamplerParams p;
  p.mean_bound_ = mean_bound;
  p.dim_ = dim;
  p.alpha_ = alpha;
  p.eps_ = eps;
  p.clip_constant_ = clip_constant;
  p.multiplier_ = sensitivity_multiplier;
  p.clip_bound_ =
      mean_bound + clip_constant * std::sqrt(dim * std::log(1.0 / alpha));
  return p;
}

namespace internal {

absl::StatusOr<std::vector<double>> PureGaussianSampleMasked(
    const VectorDataset& data, const PureGaussianSamplerParams& params,
    RandomSource& rng, NoiseMask mask) {
  if (data.dim() != params.dim()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrCat("data dimension ", data.dim(),
                                  ", sampler dimension ", params.dim()));
  }
  const int64_t n = data.size();
  DPSAMPLE_RETURN_IF_ERROR(CheckSamplesAtLeastTwo(n));
  const double bound = params.clip_bound();
  std::vector<double> y(data.dim(), 0.0);
  for (int64_t i = 0; i < n; ++i) AccumulateClipped(data.row(i), bound, 1.0, y);
  if (mask.elap) {
    DPSAMPLE_ASSIGN_OR_RETURN(
        ElapParams noise,
        ElapParams::Create(data.dim(), params.sensitivity_multiplier() * bound /
                                           params.eps()));
    std::vector<double> eta(data.dim());
    ElapSampleInto(noise, rng, eta);
    for (int a = 0; a < data.dim(); ++a) y[a] += eta[a];
  }
  const double nn = static_cast<double>(n);
  for (double& v : y) v /= nn;
  if (mask.gaussian) AddIsotropicNormal((nn - 1.0) / nn, rng, y);
  return y;
}

absl::StatusOr<std::vector<double>> ZcdpBoundedCovSampleMasked(
    const VectorDataset& data, int64_t n1, int64_t n2, double clip_bound,
    double sigma2, RandomSource& rng, NoiseMask mask) {
  if (n1 < 1 || n2 < 1 || n1 != n2 || data.size() != n1 + 2 * n2) {
    return MakeError(ErrorKind::kBadSplit,
                     absl::StrCat("need rows = n1 + 2 n2 with n1 = n2 >= 1; "
                                  "got rows = ",
                                  data.size(), ", n1 = ", n1, ", n2 = ", n2));
  }
  DPSAMPLE_RETURN_IF_ERROR(CheckPositive(clip_bound, "clip bound B"));
  DPSAMPLE_RETURN_IF_ERROR(CheckPositive(sigma2, "sigma2"));
  const double inv_n1 = 1.0 / static_cast<double>(n1);
  const double pair_coef =
      std::sqrt((1.0 - inv_n1) / (2.0 * static_cast<double>(n2)));
  std::vector<double> y(data.dim(), 0.0);
  for (int64_t i = 0; i < n1; ++i) {
    AccumulateClipped(data.row(i), clip_bound, inv_n1, y);
  }
  for (int64_t i = 0; i < n2; ++i) {
    AccumulateClipped(data.row(n1 + 2 * i), clip_bound, pair_coef, y);
    AccumulateClipped(data.row(n1 + 2 * i + 1), clip_bound, -pair_coef, y);
  }
  if (mask.gaussian) AddIsotropicNormal(sigma2, rng, y);
  return y;
}

}  // namespace internal

absl::StatusOr<std::vector<double>> PureGaussianSample(
    const VectorDataset& data, const PureGaussianSamplerParams& params,
    RandomSource& rng) {
  return internal::PureGaussianSampleMasked(data, params, rng, {});
}

absl::StatusOr<ComplexityReport> PureSampleComplexity(
    int dim, double mean_bound, double alpha, double eps,
    double complexity_constant, double clip_constant) {
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckAlpha(alpha));
  DPSAMPLE_RETURN_IF_ERROR(
      internal::CheckPositive(complexity_constant, "complexity constant C"));
  DPSAMPLE_ASSIGN_OR_RETURN(PureGaussianSamplerParams params,
                            PureGaussianSamplerParams::Create(
                                mean_bound, dim, alpha, eps, clip_constant));
  const double d = dim;
  const double bound = params.clip_bound();
  const double real = complexity_constant * d * bound * std::log(d / alpha) *
                      std::log(1.0 / alpha) / (alpha * eps);
  ComplexityReport report;
  report.formula_name = "gaussian_pure_single";
  report.inputs = {
      {"d", d},     {"R", mean_bound},          {"alpha", alpha},
      {"eps", eps}, {"C", complexity_constant}, {"c", clip_constant}};
  report.derived = {{"B", bound}, {"real_bound", real}};
  DPSAMPLE_ASSIGN_OR_RETURN(
      int64_t n, internal::CeilSampleBound(real, "pure Gaussian sampler"));
  report.n_required = std::max<int64_t>(2, n);
  return report;
}

double ZcdpParams::Sensitivity() const {
  if (variant == ZcdpVariant::kKnownCov) {
    return 2.0 * clip_bound / static_cast<double>(n);
  }
  return BoundedCovSensitivity(clip_bound, n1, n2);
}

absl::StatusOr<double> ZcdpKnownCovClipBound(double mean_bound, int dim,
                                             double alpha) {
  DPSAMPLE_RETURN_IF_ERROR(CheckDim(dim));
  DPSAMPLE_RETURN_IF_ERROR(CheckMeanBound(mean_bound));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckAlpha(alpha));
  return mean_bound + std::sqrt(2.0 * (dim + std::log(1.0 / alpha)));
}

absl::StatusOr<ComplexityReport> ZcdpKnownCovComplexity(int dim,
                                                        double mean_bound,
                                                        double alpha,
                                                        double eps) {
  DPSAMPLE_ASSIGN_OR_RETURN(double bound,
                            ZcdpKnownCovClipBound(mean_bound, dim, alpha));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(eps, "eps"));
  int64_t hi = 2;
  while (!KnownCovFeasible(bound, eps, hi)) {
    if (hi > static_cast<int64_t>(internal::kMaxSampleCount) / 2) {
      return MakeError(ErrorKind::kPrecisionLimit,
                       "zCDP known-covariance complexity out of range");
    }
    hi *= 2;
  }
  int64_t lo = hi / 2;  // infeasible unless hi == 2
  if (hi == 2) lo = 1;
  while (hi - lo > 1) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (KnownCovFeasible(bound, eps, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  ComplexityReport report;
  report.formula_name = "gaussian_zcdp_known_cov";
  report.n_required = hi;
  report.inputs = {{"d", static_cast<double>(dim)},
                   {"R", mean_bound},
                   {"alpha", alpha},
                   {"eps", eps}};
  const double nn = static_cast<double>(hi);
  report.derived = {{"B", bound},
                    {"sigma2", (nn - 1.0) / nn},
                    {"sensitivity", 2.0 * bound / nn}};
  return report;
}

absl::StatusOr<ZcdpParams> ZcdpKnownCovParams(int dim, double mean_bound,
                                              double eps, double alpha,
                                              int64_t n) {
  DPSAMPLE_ASSIGN_OR_RETURN(double bound,
                            ZcdpKnownCovClipBound(mean_bound, dim, alpha));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(eps, "eps"));
  if (n < 2 || !KnownCovFeasible(bound, eps, n)) {
    DPSAMPLE_ASSIGN_OR_RETURN(
        ComplexityReport needed,
        ZcdpKnownCovComplexity(dim, mean_bound, alpha, eps));
    return MakeError(
        ErrorKind::kTooFewSamples,
        absl::StrCat("zCDP condition 2B/(eps n) <= sqrt((n-1)/n) fails at n = ",
                     n, "; minimum n = ", needed.n_required));
  }
  ZcdpParams params;
  params.variant = ZcdpVariant::kKnownCov;
  params.dim = dim;
  params.clip_bound = bound;
  params.n = n;
  const double nn = static_cast<double>(n);
  params.sigma2 = (nn - 1.0) / nn;
  return params;
}

absl::StatusOr<std::vector<double>> ZcdpKnownCovSample(
    const VectorDataset& data, double mean_bound, double eps, double alpha,
    RandomSource& rng) {
  DPSAMPLE_ASSIGN_OR_RETURN(
      ZcdpParams params,
      ZcdpKnownCovParams(data.dim(), mean_bound, eps, alpha, data.size()));
  const double inv_n = 1.0 / static_cast<double>(data.size());
  std::vector<double> y(data.dim(), 0.0);
  for (int64_t i = 0; i < data.size(); ++i) {
    AccumulateClipped(data.row(i), params.clip_bound, inv_n, y);
  }
  AddIsotropicNormal(params.sigma2, rng, y);
  return y;
}

absl::StatusOr<double> ZcdpBoundedCovClipBound(double mean_bound, int dim,
                                               double alpha) {
  DPSAMPLE_RETURN_IF_ERROR(CheckDim(dim));
  DPSAMPLE_RETURN_IF_ERROR(CheckMeanBound(mean_bound));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckAlpha(alpha));
  return mean_bound + std::sqrt(2.0 * dim * std::log(2.0 / alpha));
}

double ZcdpBoundedCovSigma2(int dim, double alpha) {
  return alpha / (4.0 * std::sqrt(static_cast<double>(dim)));
}

absl::StatusOr<std::vector<double>> ZcdpBoundedCovSample(
    const VectorDataset& data, int64_t n1, int64_t n2, double clip_bound,
    double sigma2, RandomSource& rng) {
  return internal::ZcdpBoundedCovSampleMasked(data, n1, n2, clip_bound, sigma2,
                                              rng, {});
}

absl::StatusOr<std::vector<double>> ZcdpBoundedCovSampleEven(
    const VectorDataset& data, double clip_bound, double sigma2,
    RandomSource& rng) {
  if (data.size() % 3 != 0) {
    return MakeError(
        ErrorKind::kBadSplit,
        absl::StrCat("row count ", data.size(), " is not a multiple of 3"));
  }
  const int64_t third = data.size() / 3;
  return ZcdpBoundedCovSample(data, third, third, clip_bound, sigma2, rng);
}

double BoundedCovSensitivity(double clip_bound, int64_t n1, int64_t n2) {
  const double inv_n1 = 1.0 / static_cast<double>(n1);
  const double pair_coef =
      std::sqrt((1.0 - inv_n1) / (2.0 * static_cast<double>(n2)));
  return 2.0 * clip_bound * std::max(inv_n1, pair_coef);
}

absl::StatusOr<ComplexityReport> ZcdpBoundedCovComplexityForBound(
    int dim, double clip_bound, double alpha, double eps) {
  DPSAMPLE_RETURN_IF_ERROR(CheckDim(dim));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckAlpha(alpha));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(eps, "eps"));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(clip_bound, "clip bound B"));
  const double root_d = std::sqrt(static_cast<double>(dim));
  const double real =
      4.0 * root_d * clip_bound * clip_bound / (alpha * eps * eps);
  ComplexityReport report;
  report.formula_name = "gaussian_zcdp_bounded_cov";
  report.inputs = {
      {"d", static_cast<double>(dim)}, {"alpha", alpha}, {"eps", eps}};
  report.derived = {{"B", clip_bound},
                    {"sigma2", ZcdpBoundedCovSigma2(dim, alpha)},
                    {"real_bound", real}};
  DPSAMPLE_ASSIGN_OR_RETURN(
      report.n_required,
      internal::CeilSampleBound(real, "bounded-covariance sampler"));
  report.n_required = std::max<int64_t>(3, report.n_required);
  return report;
}

absl::StatusOr<ComplexityReport> ZcdpBoundedCovComplexity(int dim,
                                                          double mean_bound,
                                                          double alpha,
                                                          double eps) {
  DPSAMPLE_ASSIGN_OR_RETURN(double bound,
                            ZcdpBoundedCovClipBound(mean_bound, dim, alpha));
  DPSAMPLE_ASSIGN_OR_RETURN(
      ComplexityReport report,
      ZcdpBoundedCovComplexityForBound(dim, bound, alpha, eps));
  report.inputs["R"] = mean_bound;
  return report;
}

double GaussianMechRenyi(double delta_norm, double sigma, double order) {
  return order * delta_norm * delta_norm / (2.0 * sigma * sigma);
}

}  // namespace dpsample
