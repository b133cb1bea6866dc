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

#include "dpsample/samplers.h"

#include "absl/strings/str_cat.h"
#include "dpsample/gaussian.h"
#include "dpsample/kary.h"
#include "dpsample/status.h"

namespace dpsample {

absl::StatusOr<KarySingleSampler> MakeSubrrSampler(int k, double eps) {
  DPSAMPLE_ASSIGN_OR_RETURN(PrivacyBudget budget, PrivacyBudget::Create(eps));
  if (k < 2) {
    return MakeError(ErrorKind::kDomainTooSmall,
                     absl::StrCat("domain size must be >= 2, got ", k));
  }
  return KarySingleSampler{
      .name = "subrr",
      .budget = budget,
      .n_per_call = [k, eps](double alpha) -> absl::StatusOr<int64_t> {
        DPSAMPLE_ASSIGN_OR_RETURN(ComplexityReport r,
                                  SubrrSampleComplexity(k, alpha, eps));
        return r.n_required;
      },
      .sample = [eps](const KaryDataset& data, double, RandomSource& rng)
          -> absl::StatusOr<Element> { return SubrrSample(data, eps, rng); },
  };
}

absl::StatusOr<KaryWeakSampler> MakeShurrSampler(int k, double eps,
                                                 double delta) {
  DPSAMPLE_ASSIGN_OR_RETURN(PrivacyBudget budget,
                            PrivacyBudget::Create(eps, delta));
  const auto n_required =
      [k, eps, delta](double alpha, int64_t m) -> absl::StatusOr<int64_t> {
    DPSAMPLE_ASSIGN_OR_RETURN(ComplexityReport r,
                              ShurrWeakComplexity(k, alpha, eps, delta, m));
    return r.n_required;
  };
  return KaryWeakSampler{
      .name = "shurr",
      .budget = budget,
      .n_required = n_required,
      .sample = [n_required, eps, delta](
                    const KaryDataset& data, int64_t m, double alpha,
                    RandomSource& rng) -> absl::StatusOr<std::vector<Element>> {
        DPSAMPLE_ASSIGN_OR_RETURN(int64_t n, n_required(alpha, m));
        if (data.size() < n) {
          return MakeError(
              ErrorKind::kInsufficientData,
              absl::StrCat("shurr needs ", n, " rows, have ", data.size()));
        }
        return ShurrRun(data.Slice(0, n), eps, delta, m, rng);
      },
  };
}

absl::StatusOr<GaussianSingleSampler> MakePureGaussianSampler(
    const GaussianSamplerOptions& o) {
  DPSAMPLE_ASSIGN_OR_RETURN(PrivacyBudget budget, PrivacyBudget::Create(o.eps));
  // Validates the options once up front.
  DPSAMPLE_RETURN_IF_ERROR(PureGaussianSamplerParams::Create(
                               o.mean_bound, o.dim, 0.5, o.eps, o.clip_constant,
                               o.sensitivity_multiplier)
                               .status());
  return GaussianSingleSampler{
      .name = "gaussian_pure",
      .budget = budget,
      .n_per_call = [o](double alpha) -> absl::StatusOr<int64_t> {
        DPSAMPLE_ASSIGN_OR_RETURN(
            ComplexityReport r,
            PureSampleComplexity(o.dim, o.mean_bound, alpha, o.eps,
                                 o.complexity_constant, o.clip_constant));
        return r.n_required;
      },
      .sample = [o](const VectorDataset& data, double alpha,
                    RandomSource& rng) -> absl::StatusOr<std::vector<double>> {
        DPSAMPLE_ASSIGN_OR_RETURN(
            PureGaussianSamplerParams params,
            PureGaussianSamplerParams::Create(o.mean_bound, o.dim, alpha, o.eps,
                                              o.clip_constant,
                                              o.sensitivity_multiplier));
        return PureGaussianSample(data, params, rng);
      },
  };
}

absl::StatusOr<GaussianSingleSampler> MakeZcdpKnownCovSampler(
    const GaussianSamplerOptions& o) {
  DPSAMPLE_ASSIGN_OR_RETURN(PrivacyBudget budget, PrivacyBudget::Zcdp(o.eps));
  return GaussianSingleSampler{
      .name = "gaussian_zcdp_known_cov",
      .budget = budget,
      .n_per_call = [o](double alpha) -> absl::StatusOr<int64_t> {
        DPSAMPLE_ASSIGN_OR_RETURN(
            ComplexityReport r,
            ZcdpKnownCovComplexity(o.dim, o.mean_bound, alpha, o.eps));
        return r.n_required;
      },
      .sample = [o](const VectorDataset& data, double alpha,
                    RandomSource& rng) -> absl::StatusOr<std::vector<double>> {
        return ZcdpKnownCovSample(data, o.mean_bound, o.eps, alpha, rng);
      },
  };
}

absl::StatusOr<GaussianSingleSampler> MakeZcdpBoundedCovSampler(
    const GaussianSamplerOptions& o) {
  DPSAMPLE_ASSIGN_OR_RETURN(PrivacyBudget budget, PrivacyBudget::Zcdp(o.eps));
  return GaussianSingleSampler{
      .name = "gaussian_zcdp_bounded_cov",
      .budget = budget,
      .n_per_call = [o](double alpha) -> absl::StatusOr<int64_t> {
        DPSAMPLE_ASSIGN_OR_RETURN(
            ComplexityReport r,
            ZcdpBoundedCovComplexity(o.dim, o.mean_bound, alpha, o.eps));
        return (r.n_required + 2) / 3 * 3;
      },
      .sample = [o](const VectorDataset& data, double alpha,
                    RandomSource& rng) -> absl::StatusOr<std::vector<double>> {
        DPSAMPLE_ASSIGN_OR_RETURN(
            double bound, ZcdpBoundedCovClipBound(o.mean_bound, o.dim, alpha));
        return ZcdpBoundedCovSampleEven(
            data, bound, ZcdpBoundedCovSigma2(o.dim, alpha), rng);
      },
  };
}

}  // namespace dpsample
