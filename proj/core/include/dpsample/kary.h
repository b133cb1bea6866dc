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

// Samplers for distributions over [k] built on k-ary randomized response:
//
//  * SubRR: randomized response with eps0 = ln(eps * n) on one uniformly
//    chosen record. eps-DP single-sampler.
//  * ShuRR: randomized response with eps0 = ln(f(eps)^2 n / ln(4/delta) - 1)
//    on every record, shuffled, first m released. (eps, delta)-DP weak
//    multi-sampler via amplification by shuffling.

#ifndef DPSAMPLE_KARY_H_
#define DPSAMPLE_KARY_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "dpsample/random.h"
#include "dpsample/types.h"

namespace dpsample {

// k-ary randomized response with local parameter eps0 >= 0.
class RrParams {
 public:
  static absl::StatusOr<RrParams> Create(double eps0, int k);

  double eps0() const { return eps0_; }
  int k() const { return k_; }

  // e^eps0 / (e^eps0 + k - 1).
  double KeepProbability() const { return keep_; }
  // 1 / (e^eps0 + k - 1).
  double FlipProbability() const { return flip_; }

 private:
  RrParams(double eps0, int k);

  double eps0_;
  int k_;
  double keep_;
  double flip_;
};

// Pr[RR(x) = y]. Errors: OutOfDomain.
absl::StatusOr<double> RrPmf(Element x, Element y, const RrParams& params);

// Errors: OutOfDomain.
absl::StatusOr<Element> RrSample(Element x, const RrParams& params,
                                 RandomSource& rng);

// Weight (k-1) / (k-1 + e^eps0) that randomized response places on the
// "uniform over the other elements" component. Equals TV(RR(D), D) bound.
double RrMixtureWeight(int k, double eps0);

// ---- SubRR ----------------------------------------------------------------

// ln(eps * n). Errors: InsufficientSamples when eps * n <= 1.
absl::StatusOr<double> SubrrEps0(double eps, int64_t n);

absl::StatusOr<Element> SubrrSample(const KaryDataset& data, double eps,
                                    RandomSource& rng);

// Exact law of SubrrSample: probs[y] = (1/n) sum_i RR_{X_i}(y).
absl::StatusOr<CategoricalDist> SubrrExactOutputDist(const KaryDataset& data,
                                                     double eps);

// ceil((k-1)(1-alpha) / (alpha eps)). Errors: InvalidAlpha.
absl::StatusOr<ComplexityReport> SubrrSampleComplexity(int k, double alpha,
                                                       double eps);

// ---- ShuRR ----------------------------------------------------------------

// Amplification factor: eps / (16 sqrt(3/2)) for eps <= 1, else
// sqrt(eps) / (16 sqrt(3/2)).
double ShurrF(double eps);

// ln(f(eps)^2 n / ln(4/delta) - 1). Errors: InsufficientSamples unless the
// result is positive (the log argument exceeds 1).
absl::StatusOr<double> ShurrEps0(double eps, double delta, int64_t n);

// Central privacy parameter after shuffling n eps0-randomized responses:
//   log(1 + 8(e^eps0 + 1)(sqrt((k+1)/k * log(4/delta)/n / (e^eps0 + k - 1))
//                         + (k+1)/(k n))).
double FmtEps1(double eps0, double delta, int64_t n, int k);

struct ShurrConfig {
  double eps = 0.0;
  double delta = 0.0;
  int64_t m = 0;
  int64_t n = 0;
  double eps0 = 0.0;
  double f_value = 0.0;

  // Errors: TooManyOutputs (m > n), InsufficientSamples.
  static absl::StatusOr<ShurrConfig> Create(double eps, double delta, int64_t m,
                                            int64_t n);
};

// Randomized response at eps0 on every record, uniform shuffle, first m.
// Errors: TooManyOutputs.
absl::StatusOr<std::vector<Element>> ShuffledRandomizedResponse(
    const KaryDataset& data, const RrParams& params, int64_t m,
    RandomSource& rng);

// Errors: InsufficientSamples, TooManyOutputs.
absl::StatusOr<std::vector<Element>> ShurrRun(const KaryDataset& data,
                                              double eps, double delta,
                                              int64_t m, RandomSource& rng);

// max(m, ceil(k ln(4/delta) / (alpha f(eps)^2))). Errors: InvalidAlpha.
absl::StatusOr<ComplexityReport> ShurrWeakComplexity(int k, double alpha,
                                                     double eps, double delta,
                                                     int64_t m);

// Weak complexity at tolerance alpha / m. Errors: InvalidAlpha,
// PrecisionLimit (alpha / m < 1e-12).
absl::StatusOr<ComplexityReport> ShurrStrongComplexity(int k, double alpha,
                                                       double eps, double delta,
                                                       int64_t m);

// Smallest tolerance the strong samplers accept.
inline constexpr double kMinStrongTolerance = 1e-12;

}  // namespace dpsample

#endif  // DPSAMPLE_KARY_H_
