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

#include "dpsample/kary.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <utility>

#include "absl/strings/str_cat.h"
#include "dpsample/internal/numeric.h"
#include "dpsample/status.h"

namespace dpsample {
namespace {

absl::Status CheckElement(Element x, int k) {
  if (x < 1 || x > k) {
    return MakeError(ErrorKind::kOutOfDomain,
                     absl::StrCat("element ", x, " is outside [1, ", k, "]"));
  }
  return absl::OkStatus();
}

absl::Status CheckDelta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("delta must lie in (0, 1), got ", delta));
  }
  return absl::OkStatus();
}

absl::Status CheckDomain(int k) {
  if (k < 2) {
    return MakeError(ErrorKind::kDomainTooSmall,
                     absl::StrCat("domain size must be >= 2, got ", k));
  }
  return absl::OkStatus();
}

// Caller guarantees x is in range.
Element RrSampleUnchecked(Element x, const RrParams& params,
                          RandomSource& rng) {
  if (rng.Uniform() < params.KeepProbability()) return x;
  Element y = static_cast<Element>(rng.UniformInt(params.k() - 1)) + 1;
  if (y >= x) ++y;
  return y;
}

constexpr double kSqrtThreeHalves = 1.2247448713915890491;

}  // namespace

RrParams::RrParams(double eps0, int k) : eps0_(eps0), k_(k) {
  // Written in terms of e^-eps0 so that large eps0 does not overflow.
  const double inv = std::exp(-eps0);
  const double denom = 1.0 + (k - 1) * inv;
  keep_ = 1.0 / denom;
  flip_ = inv / denom;
}

absl::StatusOr<RrParams> RrParams::Create(double eps0, int k) {
  DPSAMPLE_RETURN_IF_ERROR(CheckDomain(k));
  if (!(eps0 >= 0.0) || std::isinf(eps0)) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("eps0 must be finite and >= 0, got ", eps0));
  }
  return RrParams(eps0, k);
}

absl::StatusOr<double> RrPmf(Element x, Element y, const RrParams& params) {
  DPSAMPLE_RETURN_IF_ERROR(CheckElement(x, params.k()));
  DPSAMPLE_RETURN_IF_ERROR(CheckElement(y, params.k()));
  return x == y ? params.KeepProbability() : params.FlipProbability();
}

absl::StatusOr<Element> RrSample(Element x, const RrParams& params,
                                 RandomSource& rng) {
  DPSAMPLE_RETURN_IF_ERROR(CheckElement(x, params.k()));
  return RrSampleUnchecked(x, params, rng);
}

double RrMixtureWeight(int k, double eps0) {
  return (k - 1) / ((k - 1) + std::exp(eps0));
}

absl::StatusOr<double> SubrrEps0(double eps, int64_t n) {
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(eps, "eps"));
  if (n < 1 || !(eps * static_cast<double>(n) > 1.0)) {
    const int64_t min_n = static_cast<int64_t>(std::floor(1.0 / eps)) + 1;
    return MakeError(ErrorKind::kInsufficientSamples,
                     absl::StrCat("SubRR needs eps * n > 1; got n = ", n,
                                  ", eps = ", eps, "; minimum n = ", min_n));
  }
  return std::log(eps * static_cast<double>(n));
}

absl::StatusOr<Element> SubrrSample(const KaryDataset& data, double eps,
                                    RandomSource& rng) {
  DPSAMPLE_ASSIGN_OR_RETURN(double eps0, SubrrEps0(eps, data.size()));
  DPSAMPLE_ASSIGN_OR_RETURN(RrParams params, RrParams::Create(eps0, data.k()));
  const int64_t r = static_cast<int64_t>(rng.UniformInt(data.size()));
  return RrSampleUnchecked(data[r], params, rng);
}

absl::StatusOr<CategoricalDist> SubrrExactOutputDist(const KaryDataset& data,
                                                     double eps) {
  DPSAMPLE_ASSIGN_OR_RETURN(double eps0, SubrrEps0(eps, data.size()));
  DPSAMPLE_ASSIGN_OR_RETURN(RrParams params, RrParams::Create(eps0, data.k()));
  std::vector<int64_t> counts(data.k(), 0);
  for (Element x : data.values()) ++counts[x - 1];
  const double n = static_cast<double>(data.size());
  std::vector<double> probs(data.k());
  double total = 0.0;
  for (int y = 0; y < data.k(); ++y) {
    const double c = static_cast<double>(counts[y]);
    probs[y] =
        (c * params.KeepProbability() + (n - c) * params.FlipProbability()) / n;
    total += probs[y];
  }
  for (double& p : probs) p /= total;
  return CategoricalDist::Create(std::move(probs));
}

absl::StatusOr<ComplexityReport> SubrrSampleComplexity(int k, double alpha,
                                                       double eps) {
  DPSAMPLE_RETURN_IF_ERROR(CheckDomain(k));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckAlpha(alpha));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(eps, "eps"));
  const double bound = (k - 1) * (1.0 - alpha) / (alpha * eps);
  ComplexityReport report;
  report.formula_name = "subrr_single";
  report.inputs = {{"k", k}, {"alpha", alpha}, {"eps", eps}};
  report.derived = {{"real_bound", bound}};
  DPSAMPLE_ASSIGN_OR_RETURN(report.n_required,
                            internal::CeilSampleBound(bound, "SubRR"));
  return report;
}

double ShurrF(double eps) {
  const double base = eps <= 1.0 ? eps : std::sqrt(eps);
  return base / (16.0 * kSqrtThreeHalves);
}

absl::StatusOr<double> ShurrEps0(double eps, double delta, int64_t n) {
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(eps, "eps"));
  DPSAMPLE_RETURN_IF_ERROR(CheckDelta(delta));
  const double f = ShurrF(eps);
  const double log_term = std::log(4.0 / delta);
  const double ratio = f * f * static_cast<double>(n) / log_term;
  if (n < 1 || !(ratio - 1.0 > 1.0)) {
    const int64_t min_n =
        static_cast<int64_t>(std::floor(2.0 * log_term / (f * f))) + 1;
    return MakeError(
        ErrorKind::kInsufficientSamples,
        absl::StrCat("ShuRR needs f(eps)^2 n / ln(4/delta) > 2; got n = ", n,
                     "; minimum n = ", min_n));
  }
  return std::log(ratio - 1.0);
}

double FmtEps1(double eps0, double delta, int64_t n, int k) {
  const double kk = k;
  const double nn = static_cast<double>(n);
  const double e0 = std::exp(eps0);
  const double root =
      std::sqrt((kk + 1.0) / kk * std::log(4.0 / delta) / nn / (e0 + kk - 1.0));
  return std::log1p(8.0 * (e0 + 1.0) * (root + (kk + 1.0) / (kk * nn)));
}

absl::StatusOr<ShurrConfig> ShurrConfig::Create(double eps, double delta,
                                                int64_t m, int64_t n) {
  if (m < 1) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("m must be >= 1, got ", m));
  }
  if (m > n) {
    return MakeError(
        ErrorKind::kTooManyOutputs,
        absl::StrCat("requested ", m, " outputs from ", n, " records"));
  }
  ShurrConfig config;
  DPSAMPLE_ASSIGN_OR_RETURN(config.eps0, ShurrEps0(eps, delta, n));
  config.eps = eps;
  config.delta = delta;
  config.m = m;
  config.n = n;
  config.f_value = ShurrF(eps);
  return config;
}

absl::StatusOr<std::vector<Element>> ShuffledRandomizedResponse(
    const KaryDataset& data, const RrParams& params, int64_t m,
    RandomSource& rng) {
  if (data.k() != params.k()) {
    return MakeError(ErrorKind::kDomainMismatch,
                     absl::StrCat("dataset domain ", data.k(),
                                  " differs from RR domain ", params.k()));
  }
  const int64_t n = data.size();
  if (m > n) {
    return MakeError(
        ErrorKind::kTooManyOutputs,
        absl::StrCat("requested ", m, " outputs from ", n, " records"));
  }
  if (m < 0) {
    return MakeError(ErrorKind::kInvalidParameter, "m must be >= 0");
  }
  // Records get independent RR coins, so randomizing only the m records
  // the permutation moves into the first m slots has the same law.
  std::vector<Element> out(m);
  if (m <= n / 8) {
    // Sparse Fisher-Yates over record indices.
    std::unordered_map<int64_t, int64_t> moved;
    moved.reserve(2 * m);
    const auto at = [&moved](int64_t i) {
      auto it = moved.find(i);
      return it == moved.end() ? i : it->second;
    };
    for (int64_t i = 0; i < m; ++i) {
      const int64_t j = i + static_cast<int64_t>(
                                rng.UniformInt(static_cast<uint64_t>(n - i)));
      const int64_t pick = at(j);
      moved[j] = at(i);
      out[i] = RrSampleUnchecked(data[pick], params, rng);
    }
    return out;
  }
  std::vector<int64_t> order(n);
  for (int64_t i = 0; i < n; ++i) order[i] = i;
  for (int64_t i = 0; i < m; ++i) {
    const int64_t j =
        i + static_cast<int64_t>(rng.UniformInt(static_cast<uint64_t>(n - i)));
    std::swap(order[i], order[j]);
    out[i] = RrSampleUnchecked(data[order[i]], params, rng);
  }
  return out;
}

absl::StatusOr<std::vector<Element>> ShurrRun(const KaryDataset& data,
                                              double eps, double delta,
                                              int64_t m, RandomSource& rng) {
  DPSAMPLE_ASSIGN_OR_RETURN(ShurrConfig config,
                            ShurrConfig::Create(eps, delta, m, data.size()));
  DPSAMPLE_ASSIGN_OR_RETURN(RrParams params,
                            RrParams::Create(config.eps0, data.k()));
  return ShuffledRandomizedResponse(data, params, m, rng);
}

absl::StatusOr<ComplexityReport> ShurrWeakComplexity(int k, double alpha,
                                                     double eps, double delta,
                                                     int64_t m) {
  DPSAMPLE_RETURN_IF_ERROR(CheckDomain(k));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckAlpha(alpha));
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckPositive(eps, "eps"));
  DPSAMPLE_RETURN_IF_ERROR(CheckDelta(delta));
  if (m < 1) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("m must be >= 1, got ", m));
  }
  const double f = ShurrF(eps);
  const double bound = k * std::log(4.0 / delta) / (alpha * f * f);
  ComplexityReport report;
  report.formula_name = "shurr_weak";
  report.inputs = {{"k", k},
                   {"alpha", alpha},
                   {"eps", eps},
                   {"delta", delta},
                   {"m", static_cast<double>(m)}};
  report.derived = {{"f", f}, {"real_bound", bound}};
  DPSAMPLE_ASSIGN_OR_RETURN(int64_t n,
                            internal::CeilSampleBound(bound, "ShuRR"));
  report.n_required = std::max(m, n);
  return report;
}

absl::StatusOr<ComplexityReport> ShurrStrongComplexity(int k, double alpha,
                                                       double eps, double delta,
                                                       int64_t m) {
  DPSAMPLE_RETURN_IF_ERROR(internal::CheckAlpha(alpha));
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
  DPSAMPLE_ASSIGN_OR_RETURN(ComplexityReport report,
                            ShurrWeakComplexity(k, per_output, eps, delta, m));
  report.formula_name = "shurr_strong";
  report.inputs["alpha"] = alpha;
  report.derived["alpha_per_output"] = per_output;
  return report;
}

}  // namespace dpsample
