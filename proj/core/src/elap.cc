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

#include "dpsample/elap.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "absl/strings/str_cat.h"
#include "dpsample/status.h"

namespace dpsample {
namespace {

constexpr double kMinDirectionNorm = 1e-300;

}  // namespace

ElapParams::ElapParams(int dim, double scale) : dim_(dim), scale_(scale) {
  const double d = dim;
  log_normalizer_ = std::lgamma(d / 2.0) - std::log(2.0) -
                    (d / 2.0) * std::log(std::numbers::pi) -
                    d * std::log(scale) - std::lgamma(d);
}

absl::StatusOr<ElapParams> ElapParams::Create(int dim, double scale) {
  if (dim < 1) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("dimension must be >= 1, got ", dim));
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("scale b must be positive, got ", scale));
  }
  return ElapParams(dim, scale);
}

GammaParams ElapParams::NormLaw() const {
  return *GammaParams::Create(dim_, 1.0 / scale_);
}

double ElapLogDensityAtRadius(double radius, const ElapParams& params) {
  return params.LogNormalizer() - radius / params.scale();
}

absl::StatusOr<double> ElapLogDensity(std::span<const double> eta,
                                      const ElapParams& params) {
  if (static_cast<int>(eta.size()) != params.dim()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrCat("point has dimension ", eta.size(),
                                  ", distribution has ", params.dim()));
  }
  double sq = 0.0;
  for (double v : eta) sq += v * v;
  return ElapLogDensityAtRadius(std::sqrt(sq), params);
}

absl::StatusOr<double> ElapDensity(std::span<const double> eta,
                                   const ElapParams& params) {
  DPSAMPLE_ASSIGN_OR_RETURN(double log_density, ElapLogDensity(eta, params));
  return std::exp(log_density);
}

void ElapSampleInto(const ElapParams& params, RandomSource& rng,
                    std::span<double> out) {
  const double radius = GammaSample(params.NormLaw(), rng);
  double norm = 0.0;
  do {
    double sq = 0.0;
    for (double& v : out) {
      v = rng.StandardNormal();
      sq += v * v;
    }
    norm = std::sqrt(sq);
  } while (!(norm >= kMinDirectionNorm));
  const double factor = radius / norm;
  for (double& v : out) v *= factor;
}

std::vector<double> ElapSample(const ElapParams& params, RandomSource& rng) {
  std::vector<double> out(params.dim());
  ElapSampleInto(params, rng, out);
  return out;
}

absl::StatusOr<double> ElapTailRadius(const ElapParams& params, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    return MakeError(ErrorKind::kInvalidAlpha,
                     absl::StrCat("alpha must lie in (0, 1), got ", alpha));
  }
  const double d = params.dim();
  double radius = d * params.scale() * std::log(d / alpha);
  // At d = 1 the tail equals alpha; round up past any ulp-level overshoot.
  for (int i = 0;
       i < 64 && RegularizedGammaQ(d, radius / params.scale()) > alpha; ++i) {
    radius = std::nextafter(radius, std::numeric_limits<double>::infinity());
  }
  return radius;
}

}  // namespace dpsample
