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

#include "dpsample/gamma.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "absl/strings/str_cat.h"
#include "dpsample/status.h"

namespace dpsample {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 100000;
// Integer shapes up to this size go through the Poisson sum.
constexpr double kPoissonSumMaxShape = 4096;

// Q(a, x) for integer a: e^-x * sum_{j < a} x^j / j!, summed in log space so
// neither e^-x nor x^j can under/overflow.
double PoissonSumQ(int a, double x) {
  const double log_x = std::log(x);
  std::vector<double> log_terms(a);
  double max_log = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < a; ++j) {
    log_terms[j] = -x + j * log_x - std::lgamma(j + 1.0);
    max_log = std::max(max_log, log_terms[j]);
  }
  double sum = 0.0;
  for (double lt : log_terms) sum += std::exp(lt - max_log);
  return std::min(1.0, sum * std::exp(max_log));
}

// P(a, x) by its power series; converges quickly for x < a + 1.
double SeriesP(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int i = 0; i < kMaxIterations; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by the Legendre continued fraction (modified Lentz); used for
// x >= a + 1.
double ContinuedFractionQ(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

bool IsInteger(double v) { return std::floor(v) == v; }

}  // namespace

absl::StatusOr<GammaParams> GammaParams::Create(double shape, double rate) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("gamma shape must be positive, got ", shape));
  }
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("gamma rate must be positive, got ", rate));
  }
  return GammaParams(shape, rate);
}

bool GammaParams::has_integer_shape() const { return IsInteger(shape_); }

double RegularizedGammaQ(double a, double x) {
  if (!(x > 0.0)) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (IsInteger(a) && a <= kPoissonSumMaxShape) {
    return PoissonSumQ(static_cast<int>(a), x);
  }
  if (x < a + 1.0) return std::max(0.0, 1.0 - SeriesP(a, x));
  return std::min(1.0, ContinuedFractionQ(a, x));
}

double RegularizedGammaP(double a, double x) {
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return std::min(1.0, SeriesP(a, x));
  return 1.0 - RegularizedGammaQ(a, x);
}

absl::StatusOr<double> GammaTailBound(const GammaParams& params, double t) {
  if (!params.has_integer_shape()) {
    return MakeError(ErrorKind::kNonIntegerShape,
                     absl::StrCat("tail bound needs an integer shape, got ",
                                  params.shape()));
  }
  if (!(t > 0.0)) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("threshold t must be positive, got ", t));
  }
  const double k = params.shape();
  return std::clamp(k * std::exp(-params.rate() * t / k), 0.0, 1.0);
}

double GammaExactTail(const GammaParams& params, double t) {
  return RegularizedGammaQ(params.shape(), params.rate() * t);
}

double GammaCdf(const GammaParams& params, double t) {
  return RegularizedGammaP(params.shape(), params.rate() * t);
}

double GammaSample(const GammaParams& params, RandomSource& rng) {
  double shape = params.shape();
  double boost = 1.0;
  if (shape < 1.0) {
    // X ~ Gamma(a + 1) times U^(1/a) is Gamma(a).
    boost = std::pow(rng.UniformOpen(), 1.0 / shape);
    shape += 1.0;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.StandardNormal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.UniformOpen();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2 ||
        std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return d * v * boost * params.scale();
    }
  }
}

}  // namespace dpsample
