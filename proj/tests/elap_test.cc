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
#include <numbers>
#include <vector>

#include "boost/math/quadrature/exp_sinh.hpp"
#include "dpsample/gamma.h"
#include "dpsample/random.h"
#include "dpsample/status.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace dpsample {
namespace {

constexpr double kKsSignificance = 1e-3;

GammaParams Gamma(double shape, double rate) {
  return *GammaParams::Create(shape, rate);
}

ElapParams Elap(int d, double b) { return *ElapParams::Create(d, b); }

TEST(GammaParamsTest, Validation) {
  EXPECT_FALSE(GammaParams::Create(0.0, 1.0).ok());
  EXPECT_FALSE(GammaParams::Create(1.0, -1.0).ok());
  EXPECT_TRUE(Gamma(3.0, 2.0).has_integer_shape());
  EXPECT_FALSE(Gamma(2.5, 2.0).has_integer_shape());
  EXPECT_DOUBLE_EQ(Gamma(3.0, 4.0).scale(), 0.25);
}

TEST(GammaTailBoundTest, ExponentialCaseIsTight) {
  auto bound = GammaTailBound(Gamma(1, 2), 1.0);
  ASSERT_TRUE(bound.ok());
  EXPECT_NEAR(*bound, std::exp(-2.0), 1e-15);
  EXPECT_NEAR(GammaExactTail(Gamma(1, 2), 1.0), std::exp(-2.0), 1e-15);
}

TEST(GammaTailBoundTest, DominatesExactTail) {
  auto bound = GammaTailBound(Gamma(3, 1), 9.0);
  ASSERT_TRUE(bound.ok());
  EXPECT_NEAR(*bound, 3.0 * std::exp(-3.0), 1e-12);
  const double exact = GammaExactTail(Gamma(3, 1), 9.0);
  EXPECT_NEAR(exact, testing::GammaTailOracle(3, 1, 9), 1e-14);
  EXPECT_NEAR(exact, 0.006232195, 1e-8);
  EXPECT_GE(*bound, exact);
}

TEST(GammaTailBoundTest, ClampsVacuousBound) {
  auto bound = GammaTailBound(Gamma(2, 1), 0.1);
  ASSERT_TRUE(bound.ok());
  EXPECT_EQ(*bound, 1.0);
}

TEST(GammaTailBoundTest, RejectsNonIntegerShape) {
  EXPECT_TRUE(IsErrorKind(GammaTailBound(Gamma(2.5, 1), 1.0).status(),
                          ErrorKind::kNonIntegerShape));
  EXPECT_FALSE(GammaTailBound(Gamma(2, 1), 0.0).ok());
}

TEST(GammaTailBoundTest, DominanceGrid) {
  for (int shape = 1; shape <= 16; ++shape) {
    for (double rate : {0.5, 1.0, 2.0}) {
      for (double t = 1e-3; t < 1e3; t *= 1.25) {
        auto bound = GammaTailBound(Gamma(shape, rate), t);
        ASSERT_TRUE(bound.ok());
        ASSERT_GE(*bound, GammaExactTail(Gamma(shape, rate), t))
            << shape << " " << rate << " " << t;
      }
    }
  }
}

TEST(GammaExactTailTest, ClosedForms) {
  EXPECT_EQ(GammaExactTail(Gamma(1, 1), 0.0), 1.0);
  EXPECT_NEAR(GammaExactTail(Gamma(3, 1), 3.0), std::exp(-3.0) * (1 + 3 + 4.5),
              1e-15);
  EXPECT_NEAR(GammaExactTail(Gamma(3, 1), 3.0), 0.42319008, 1e-8);
}

TEST(GammaExactTailTest, MatchesOracleToRelative1e10) {
  for (double shape : {1.0, 1.5, 2.0, 3.7, 8.0, 17.25, 33.0, 64.0}) {
    for (double rate : {0.5, 1.0, 3.0}) {
      for (double t : {0.01, 0.5, 1.0, 5.0, 20.0, 60.0, 150.0}) {
        const double oracle = testing::GammaTailOracle(shape, rate, t);
        const double got = GammaExactTail(Gamma(shape, rate), t);
        if (oracle < 1e-300) continue;
        EXPECT_NEAR(got / oracle, 1.0, 1e-10)
            << shape << " " << rate << " " << t;
        EXPECT_NEAR(GammaCdf(Gamma(shape, rate), t),
                    testing::GammaCdfOracle(shape, rate, t), 1e-12);
      }
    }
  }
}

TEST(GammaSampleTest, ShapeOneIsExponential) {
  RandomSource rng(101);
  std::vector<double> xs(1000000);
  for (double& x : xs) x = GammaSample(Gamma(1, 2), rng);
  const double d = testing::KsStatistic(
      xs, [](double t) { return testing::GammaCdfOracle(1, 2, t); });
  EXPECT_LT(d, testing::KsCriticalValue(xs.size(), kKsSignificance));
}

TEST(GammaSampleTest, IntegerShapeMatchesSumOfExponentials) {
  RandomSource rng(103), other(104);
  constexpr int kShape = 4;
  std::vector<double> gamma(1000000), sums(1000000);
  for (double& x : gamma) x = GammaSample(Gamma(kShape, 1.5), rng);
  for (double& x : sums) {
    x = 0.0;
    for (int i = 0; i < kShape; ++i) x += other.StandardExponential() / 1.5;
  }
  const double d = testing::KsTwoSampleStatistic(gamma, sums);
  EXPECT_LT(d, testing::KsTwoSampleCriticalValue(gamma.size(), sums.size(),
                                                 kKsSignificance));
}

TEST(GammaSampleTest, NonIntegerAndSmallShapes) {
  for (double shape : {0.3, 2.5, 7.9}) {
    RandomSource rng(107);
    std::vector<double> xs(200000);
    for (double& x : xs) {
      x = GammaSample(Gamma(shape, 0.7), rng);
      ASSERT_GT(x, 0.0);
    }
    const double d = testing::KsStatistic(xs, [shape](double t) {
      return testing::GammaCdfOracle(shape, 0.7, t);
    });
    EXPECT_LT(d, testing::KsCriticalValue(xs.size(), kKsSignificance)) << shape;
  }
}

TEST(GammaSampleTest, MeanMatches) {
  RandomSource rng(109);
  std::vector<double> xs(200000);
  for (double& x : xs) x = GammaSample(Gamma(5, 2), rng);
  const auto m = testing::Mean(xs);
  EXPECT_NEAR(m.mean, 2.5, 5 * m.standard_error);
}

TEST(ElapLogDensityTest, ClosedFormOrigins) {
  const std::vector<double> zero1 = {0.0};
  auto one = ElapLogDensity(zero1, Elap(1, 1));
  ASSERT_TRUE(one.ok());
  EXPECT_NEAR(*one, std::log(0.5), 1e-14);
  const std::vector<double> zero2 = {0.0, 0.0};
  auto two = ElapLogDensity(zero2, Elap(2, 1));
  ASSERT_TRUE(two.ok());
  EXPECT_NEAR(*two, -std::log(2 * std::numbers::pi), 1e-14);
}

TEST(ElapLogDensityTest, OneDimensionIsLaplace) {
  for (double x : {-3.0, -0.5, 0.25, 4.0}) {
    const std::vector<double> eta = {x};
    auto got = ElapDensity(eta, Elap(1, 2.0));
    ASSERT_TRUE(got.ok());
    EXPECT_NEAR(*got, std::exp(-std::abs(x) / 2.0) / 4.0, 1e-15);
  }
}

TEST(ElapLogDensityTest, DimensionMismatch) {
  const std::vector<double> eta = {1.0, 2.0};
  EXPECT_TRUE(IsErrorKind(ElapLogDensity(eta, Elap(3, 1)).status(),
                          ErrorKind::kDimensionMismatch));
}

TEST(ElapLogDensityTest, LargeDimensionStaysFinite) {
  const ElapParams p = Elap(500, 0.01);
  EXPECT_TRUE(std::isfinite(p.LogNormalizer()));
  EXPECT_TRUE(std::isfinite(ElapLogDensityAtRadius(10.0, p)));
}

double RadialMass(const ElapParams& p) {
  const int d = p.dim();
  const double log_surface = std::log(2.0) +
                             0.5 * d * std::log(std::numbers::pi) -
                             std::lgamma(0.5 * d);
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate([&](double r) {
    if (r == 0.0)
      return d == 1 ? std::exp(log_surface + p.LogNormalizer()) : 0.0;
    return std::exp(log_surface + (d - 1) * std::log(r) +
                    ElapLogDensityAtRadius(r, p));
  });
}

TEST(ElapLogDensityTest, IntegratesToOne) {
  for (int d : {1, 2, 3}) {
    for (double b : {0.5, 1.0, 2.0}) {
      EXPECT_NEAR(RadialMass(Elap(d, b)), 1.0, 1e-10) << d << " " << b;
    }
  }
}

TEST(ElapSampleTest, NormLawInOneDimension) {
  RandomSource rng(201);
  std::vector<double> norms(1000000);
  for (double& r : norms) r = std::abs(ElapSample(Elap(1, 1), rng)[0]);
  const double d = testing::KsStatistic(
      norms, [](double t) { return testing::GammaCdfOracle(1, 1, t); });
  EXPECT_LT(d, testing::KsCriticalValue(norms.size(), kKsSignificance));
}

TEST(ElapSampleTest, NormLawInThreeDimensions) {
  RandomSource rng(203);
  std::vector<double> norms(1000000);
  for (double& r : norms) {
    const std::vector<double> v = ElapSample(Elap(3, 2), rng);
    r = std::hypot(v[0], v[1], v[2]);
  }
  const double d = testing::KsStatistic(
      norms, [](double t) { return testing::GammaCdfOracle(3, 0.5, t); });
  EXPECT_LT(d, testing::KsCriticalValue(norms.size(), kKsSignificance));
}

TEST(ElapSampleTest, ZeroMeanInTwoDimensions) {
  RandomSource rng(205);
  constexpr int kN = 1000000;
  std::vector<double> xs(kN), ys(kN);
  for (int i = 0; i < kN; ++i) {
    const std::vector<double> v = ElapSample(Elap(2, 1), rng);
    xs[i] = v[0];
    ys[i] = v[1];
  }
  const auto mx = testing::Mean(xs);
  const auto my = testing::Mean(ys);
  EXPECT_LT(std::abs(mx.mean), 4 * mx.standard_error);
  EXPECT_LT(std::abs(my.mean), 4 * my.standard_error);
}

TEST(ElapSampleTest, AngleIsUniformInTwoDimensions) {
  RandomSource rng(207);
  constexpr int kBins = 36;
  std::vector<int64_t> counts(kBins, 0);
  for (int i = 0; i < 360000; ++i) {
    const std::vector<double> v = ElapSample(Elap(2, 0.5), rng);
    double angle = std::atan2(v[1], v[0]);
    if (angle < 0) angle += 2 * std::numbers::pi;
    int bin = static_cast<int>(angle / (2 * std::numbers::pi) * kBins);
    ++counts[std::min(bin, kBins - 1)];
  }
  const std::vector<double> probs(kBins, 1.0 / kBins);
  const auto chi = testing::ChiSquareGof(counts, probs, 1e-3);
  EXPECT_TRUE(chi.pass()) << chi.statistic << " > " << chi.critical;
}

TEST(ElapSampleTest, DeterministicAndFinite) {
  RandomSource a(1), b(1);
  for (int i = 0; i < 1000; ++i) {
    const std::vector<double> x = ElapSample(Elap(4, 3), a);
    EXPECT_EQ(x, ElapSample(Elap(4, 3), b));
    for (double v : x) ASSERT_TRUE(std::isfinite(v));
  }
}

TEST(ElapTailRadiusTest, ClosedForm) {
  auto unit = ElapTailRadius(Elap(1, 1), 1.0 / std::numbers::e);
  ASSERT_TRUE(unit.ok());
  EXPECT_NEAR(*unit, 1.0, 1e-15);
  auto three = ElapTailRadius(Elap(3, 1), 0.1);
  ASSERT_TRUE(three.ok());
  const testing::HighPrecision oracle = 3 * log(testing::HighPrecision(30));
  EXPECT_NEAR(*three, oracle.convert_to<double>(), 1e-13);
  EXPECT_NEAR(*three, 10.2036, 1e-4);
  EXPECT_TRUE(IsErrorKind(ElapTailRadius(Elap(3, 1), 0.0).status(),
                          ErrorKind::kInvalidAlpha));
  EXPECT_TRUE(IsErrorKind(ElapTailRadius(Elap(3, 1), 1.0).status(),
                          ErrorKind::kInvalidAlpha));
}

TEST(ElapTailRadiusTest, EmpiricalTailBelowAlpha) {
  const ElapParams p = Elap(3, 1);
  const double radius = *ElapTailRadius(p, 0.1);
  RandomSource rng(209);
  int64_t above = 0;
  constexpr int kN = 1000000;
  for (int i = 0; i < kN; ++i) {
    const std::vector<double> v = ElapSample(p, rng);
    if (std::hypot(v[0], v[1], v[2]) > radius) ++above;
  }
  EXPECT_LE(static_cast<double>(above) / kN, 0.1);
}

TEST(ElapTailRadiusTest, ExactTailAtRadiusBelowAlpha) {
  for (int d = 1; d <= 16; ++d) {
    for (double b : {0.5, 1.0, 2.0}) {
      for (double alpha : {0.5, 0.1, 0.01, 1e-4, 1e-8}) {
        const ElapParams p = Elap(d, b);
        const double radius = *ElapTailRadius(p, alpha);
        EXPECT_LE(GammaExactTail(p.NormLaw(), radius), alpha);
      }
    }
  }
}

}  // namespace
}  // namespace dpsample
