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

#include "dpsample/audit.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dpsample/gaussian.h"
#include "dpsample/kary.h"
#include "dpsample/status.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace dpsample {
namespace {

using ::testing::HasSubstr;

const AuditCheck* FindCheck(const AuditReport& report,
                            const std::string& label) {
  for (const AuditCheck& c : report.checks) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

// Enumerates every ordered dataset in [k]^n and every single-position change.
double BruteForceSubrrMaxLogRatio(int k, int n, double eps0) {
  const double e = std::exp(eps0);
  const double keep = e / (e + k - 1);
  const double flip = 1.0 / (e + k - 1);
  int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  std::vector<int> a(n);
  double worst = 0.0;
  for (int64_t code = 0; code < total; ++code) {
    int64_t c = code;
    for (int i = 0; i < n; ++i) {
      a[i] = static_cast<int>(c % k) + 1;
      c /= k;
    }
    for (int pos = 0; pos < n; ++pos) {
      for (int v = 1; v <= k; ++v) {
        if (v == a[pos]) continue;
        std::vector<int> b = a;
        b[pos] = v;
        for (int y = 1; y <= k; ++y) {
          double pa = 0.0;
          double pb = 0.0;
          for (int i = 0; i < n; ++i) {
            pa += (a[i] == y ? keep : flip) / n;
            pb += (b[i] == y ? keep : flip) / n;
          }
          worst = std::max(worst, std::log(pa) - std::log(pb));
        }
      }
    }
  }
  return worst;
}

TEST(AuditRrLocal, BinaryAtOneMeasuresOne) {
  auto report = AuditRrLocal(2, 1.0, 1.0);
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_NEAR(report->measured_max_log_ratio, 1.0, 1e-12);
  EXPECT_EQ(report->verdict, Verdict::kPass);
  EXPECT_FALSE(report->advisory);
}

TEST(AuditRrLocal, UnderstatedClaimFailsWithWitness) {
  auto report = AuditRrLocal(2, 1.0, 0.99);
  ASSERT_TRUE(report.ok());
  EXPECT_EQ(report->verdict, Verdict::kFail);
  ASSERT_EQ(report->witness.input_a.size(), 1u);
  ASSERT_EQ(report->witness.outcome.size(), 1u);
  EXPECT_NE(report->witness.input_a[0], report->witness.input_b[0]);
  // The worst outcome is the kept input.
  EXPECT_EQ(report->witness.outcome[0], report->witness.input_a[0]);
}

TEST(AuditRrLocal, ZeroEpsIsUniform) {
  auto report = AuditRrLocal(4, 0.0, 0.0);
  ASSERT_TRUE(report.ok());
  EXPECT_NEAR(report->measured_max_log_ratio, 0.0, 1e-15);
  EXPECT_EQ(report->verdict, Verdict::kPass);
}

TEST(AuditRrLocal, MeasuresEps0ForManyK) {
  for (int k : {2, 3, 7, 20}) {
    for (double eps0 : {0.1, 1.0, 5.0}) {
      auto report = AuditRrLocal(k, eps0, eps0);
      ASSERT_TRUE(report.ok());
      EXPECT_NEAR(report->measured_max_log_ratio, eps0, 1e-12);
      EXPECT_EQ(report->verdict, Verdict::kPass);
    }
  }
}

TEST(AuditRrLocal, RejectsBadParameters) {
  EXPECT_FALSE(AuditRrLocal(1, 1.0, 1.0).ok());
  EXPECT_FALSE(AuditRrLocal(2, 1.0, -1.0).ok());
}

TEST(AuditSubrrPure, TwoByTwoPasses) {
  auto report = AuditSubrrPure(2, 2, 1.0, 1.0);
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_EQ(report->verdict, Verdict::kPass);
  EXPECT_LE(report->measured_max_log_ratio, std::log(2.0) + 1e-12);
}

TEST(AuditSubrrPure, ThreeByThreePasses) {
  auto report = AuditSubrrPure(3, 3, 0.5, 0.5);
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_EQ(report->verdict, Verdict::kPass);
  for (const AuditCheck& c : report->checks) EXPECT_TRUE(c.pass) << c.label;
}

TEST(AuditSubrrPure, UnderstatedClaimsFail) {
  for (double factor : {0.1, 0.5}) {
    auto report = AuditSubrrPure(3, 4, 1.0, factor * 1.0);
    ASSERT_TRUE(report.ok());
    EXPECT_EQ(report->verdict, Verdict::kFail) << factor;
    const AuditCheck* c = FindCheck(*report, "max_log_ratio <= claimed eps");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->pass);
    EXPECT_EQ(report->witness.input_a.size(), 4u);
  }
}

TEST(AuditSubrrPure, MatchesIndependentEnumeration) {
  for (int k : {2, 3, 4}) {
    for (int n : {2, 3, 5}) {
      for (double eps : {0.5, 1.0, 2.0}) {
        if (eps * n <= 1.0) continue;
        auto report = AuditSubrrPure(k, n, eps, eps);
        ASSERT_TRUE(report.ok()) << report.status();
        const double eps0 = report->parameters.at("eps0");
        EXPECT_NEAR(report->measured_max_log_ratio,
                    BruteForceSubrrMaxLogRatio(k, n, eps0), 1e-12)
            << k << " " << n << " " << eps;
        EXPECT_LE(report->measured_max_log_ratio,
                  std::log1p(std::exp(eps0) / n) + 1e-12);
      }
    }
  }
}

TEST(AuditSubrrPure, EnumerationLimit) {
  auto report = AuditSubrrPure(5, 9, 1.0, 1.0);
  ASSERT_FALSE(report.ok());
  EXPECT_TRUE(IsErrorKind(report.status(), ErrorKind::kEnumerationTooLarge));
}

TEST(AuditSubrrPure, TooFewRecordsForEps) {
  auto report = AuditSubrrPure(2, 2, 0.25, 0.25);
  EXPECT_FALSE(report.ok());
}

TEST(AuditReportJson, RoundTripIsExact) {
  auto report = AuditSubrrPure(3, 3, 0.5, 0.5);
  ASSERT_TRUE(report.ok());
  report->seed = 42;
  report->claimed_rho = 0.125;
  const std::string json = AuditReportToJson(*report);
  auto back = AuditReportFromJson(json);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, *report);
  EXPECT_EQ(AuditReportToJson(*back), json);
}

TEST(AuditReportJson, NonFiniteValuesSurvive) {
  AuditReport report;
  report.mechanism = "x";
  report.measured_max_log_ratio = std::numeric_limits<double>::infinity();
  report.checks.push_back(
      {"c", std::numeric_limits<double>::infinity(), 1.0, false, true});
  report.verdict = Verdict::kFail;
  auto back = AuditReportFromJson(AuditReportToJson(report));
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_TRUE(std::isinf(back->measured_max_log_ratio));
  EXPECT_TRUE(std::isinf(back->checks[0].measured));
  EXPECT_EQ(back->verdict, Verdict::kFail);
}

TEST(AuditReportJson, MalformedIsConfigInvalid) {
  for (const char* text : {"", "{", "[1, 2]", "{\"mechanism\": 3}"}) {
    auto back = AuditReportFromJson(text);
    ASSERT_FALSE(back.ok()) << text;
    EXPECT_TRUE(IsErrorKind(back.status(), ErrorKind::kConfigInvalid)) << text;
  }
}

TEST(FinalizeVerdict, NonBindingFailureIsAdvisory) {
  AuditReport report;
  report.checks = {{"a", 1.0, 2.0, true, true}, {"b", 3.0, 2.0, true, false}};
  FinalizeVerdict(report);
  EXPECT_EQ(report.verdict, Verdict::kAdvisoryFail);
  report.checks[0].measured = 5.0;
  FinalizeVerdict(report);
  EXPECT_EQ(report.verdict, Verdict::kFail);
  report.checks = {{"a", 2.0 + 0.5 * kAuditSlack, 2.0, false, true}};
  FinalizeVerdict(report);
  EXPECT_EQ(report.verdict, Verdict::kPass);
  EXPECT_TRUE(report.checks[0].pass);
}

TEST(AuditShurrMarginal, IdenticalPairEstimatesZero) {
  ShurrAuditOptions o;
  o.k = 3;
  o.n = 20000;
  o.eps = 1.0;
  o.delta = 1e-6;
  o.runs = 20000;
  o.seed = 3;
  o.pair = ShurrAuditPair::kIdentical;
  auto report = AuditShurrMarginal(o);
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_TRUE(report->advisory);
  EXPECT_EQ(report->measured_delta, 0.0);
  EXPECT_EQ(report->measured_max_log_ratio, 0.0);
  EXPECT_EQ(report->verdict, Verdict::kPass);
}

TEST(AuditShurrMarginal, WorstPairAtValidSizePasses) {
  ShurrAuditOptions o;
  o.k = 2;
  o.n = 20000;
  o.eps = 1.0;
  o.delta = 1e-6;
  o.runs = 20000;
  o.seed = 11;
  auto report = AuditShurrMarginal(o);
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_TRUE(report->advisory);
  EXPECT_TRUE(report->parameters.count("halfwidth"));
  EXPECT_EQ(report->verdict, Verdict::kPass);
}

TEST(AuditShurrMarginal, PlantedViolationIsAdvisoryFail) {
  ShurrAuditOptions o;
  o.k = 2;
  o.n = 10;
  o.eps = 0.5;
  o.delta = 1e-6;
  o.runs = 20000;
  o.seed = 5;
  o.eps0_override = 10.0;
  auto report = AuditShurrMarginal(o);
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_EQ(report->verdict, Verdict::kAdvisoryFail);
  EXPECT_GT(report->measured_delta, 0.05);
}

TEST(AuditShurrMarginal, Deterministic) {
  ShurrAuditOptions o;
  o.k = 2;
  o.n = 10;
  o.eps = 0.5;
  o.runs = 2000;
  o.seed = 9;
  o.eps0_override = 2.0;
  auto a = AuditShurrMarginal(o);
  auto b = AuditShurrMarginal(o);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(AuditReportToJson(*a), AuditReportToJson(*b));
}

TEST(AuditShurrMarginal, RejectsBadOptions) {
  ShurrAuditOptions o;
  o.n = 20000;
  o.runs = 0;
  EXPECT_FALSE(AuditShurrMarginal(o).ok());
}

ElapAuditOptions ElapOptions(ElapAuditPair pair) {
  ElapAuditOptions o;
  o.dim = 3;
  o.bound = 2.0;
  o.eps = 0.7;
  o.probes = 20000;
  o.seed = 17;
  o.pair = pair;
  return o;
}

TEST(AuditElapMechanism, IdenticalPairIsZero) {
  auto report = AuditElapMechanism(ElapOptions(ElapAuditPair::kIdentical));
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_NEAR(report->measured_max_log_ratio, 0.0, 1e-12);
  EXPECT_EQ(report->verdict, Verdict::kPass);
}

TEST(AuditElapMechanism, UnitPairReachesEps) {
  auto report = AuditElapMechanism(ElapOptions(ElapAuditPair::kUnit));
  ASSERT_TRUE(report.ok());
  EXPECT_NEAR(report->measured_max_log_ratio, 0.7, 1e-9);
  EXPECT_EQ(report->verdict, Verdict::kPass);
}

TEST(AuditElapMechanism, AdversarialPairReachesTwiceEps) {
  auto report = AuditElapMechanism(ElapOptions(ElapAuditPair::kAdversarial));
  ASSERT_TRUE(report.ok());
  EXPECT_NEAR(report->measured_max_log_ratio, 1.4, 1e-9);
  EXPECT_EQ(report->verdict, Verdict::kAdvisoryFail);
  const AuditCheck* binding =
      FindCheck(*report, "max_log_ratio <= eps |S - S'| / (multiplier B)");
  ASSERT_NE(binding, nullptr);
  EXPECT_TRUE(binding->binding);
  EXPECT_TRUE(binding->pass);
  const AuditCheck* advisory = FindCheck(*report, "max_log_ratio <= eps");
  ASSERT_NE(advisory, nullptr);
  EXPECT_FALSE(advisory->binding);
  EXPECT_FALSE(advisory->pass);
}

TEST(AuditElapMechanism, DoubledMultiplierRestoresEps) {
  ElapAuditOptions o = ElapOptions(ElapAuditPair::kAdversarial);
  o.sensitivity_multiplier = 2.0;
  auto report = AuditElapMechanism(o);
  ASSERT_TRUE(report.ok());
  EXPECT_NEAR(report->measured_max_log_ratio, 0.7, 1e-9);
  EXPECT_EQ(report->verdict, Verdict::kPass);
}

TEST(AuditElapMechanism, RandomPairsPassBindingCheck) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    ElapAuditOptions o = ElapOptions(ElapAuditPair::kRandom);
    o.seed = seed;
    o.probes = 4000;
    auto report = AuditElapMechanism(o);
    ASSERT_TRUE(report.ok());
    EXPECT_NE(report->verdict, Verdict::kFail);
  }
}

TEST(AuditElapMechanism, Deterministic) {
  auto a = AuditElapMechanism(ElapOptions(ElapAuditPair::kRandom));
  auto b = AuditElapMechanism(ElapOptions(ElapAuditPair::kRandom));
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(*a, *b);
}

TEST(AuditElapMechanism, RejectsBadOptions) {
  ElapAuditOptions o = ElapOptions(ElapAuditPair::kUnit);
  o.probes = 1;
  EXPECT_FALSE(AuditElapMechanism(o).ok());
  o = ElapOptions(ElapAuditPair::kUnit);
  o.dim = 0;
  EXPECT_FALSE(AuditElapMechanism(o).ok());
}

ZcdpParams KnownCov(double sensitivity_target_sigma_ratio, double eps) {
  ZcdpParams p;
  p.variant = ZcdpVariant::kKnownCov;
  p.dim = 2;
  p.clip_bound = 3.0;
  p.n = 50;
  const double delta = p.Sensitivity();
  const double sigma = delta / (sensitivity_target_sigma_ratio * eps);
  p.sigma2 = sigma * sigma;
  return p;
}

TEST(AuditZcdpGaussian, CalibratedNoiseIsTight) {
  const double eps = 0.8;
  ZcdpParams p = KnownCov(1.0, eps);
  auto report = AuditZcdpGaussian(p, eps, {1.5, 2.0, 4.0, 16.0});
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_EQ(report->verdict, Verdict::kPass);
  ASSERT_EQ(report->checks.size(), 4u);
  for (const AuditCheck& c : report->checks) {
    EXPECT_NEAR(c.measured, c.bound, 1e-12) << c.label;
  }
  EXPECT_NEAR(*report->claimed_rho, eps * eps / 2, 1e-15);
}

TEST(AuditZcdpGaussian, HalvedNoiseFails) {
  const double eps = 0.8;
  auto report = AuditZcdpGaussian(KnownCov(2.0, eps), eps, {2.0});
  ASSERT_TRUE(report.ok());
  EXPECT_EQ(report->verdict, Verdict::kFail);
}

TEST(AuditZcdpGaussian, ZeroSensitivityPasses) {
  ZcdpParams p;
  p.dim = 1;
  p.clip_bound = 0.0;
  p.n = 10;
  p.sigma2 = 1.0;
  auto report = AuditZcdpGaussian(p, 1.0, {2.0, 8.0});
  ASSERT_TRUE(report.ok());
  EXPECT_EQ(report->verdict, Verdict::kPass);
  for (const AuditCheck& c : report->checks) EXPECT_EQ(c.measured, 0.0);
}

TEST(AuditZcdpGaussian, RejectsBadInputs) {
  ZcdpParams p = KnownCov(1.0, 1.0);
  EXPECT_TRUE(IsErrorKind(AuditZcdpGaussian(p, 1.0, {}).status(),
                          ErrorKind::kInvalidOrder));
  EXPECT_TRUE(IsErrorKind(AuditZcdpGaussian(p, 1.0, {1.0}).status(),
                          ErrorKind::kInvalidOrder));
  EXPECT_FALSE(AuditZcdpGaussian(p, 0.0, {2.0}).ok());
  p.sigma2 = 0.0;
  EXPECT_FALSE(AuditZcdpGaussian(p, 1.0, {2.0}).ok());
}

TEST(AuditZcdpGaussian, BoundedCovarianceParameters) {
  ZcdpParams p;
  p.variant = ZcdpVariant::kBoundedCov;
  p.dim = 2;
  p.clip_bound = 4.0;
  p.n = 30;
  p.n1 = 10;
  p.n2 = 20;
  p.sigma2 = 2.0;
  auto report = AuditZcdpGaussian(p, 1.0, {2.0});
  ASSERT_TRUE(report.ok());
  EXPECT_EQ(report->mechanism, "zcdp_bounded_cov");
  EXPECT_EQ(report->parameters.at("n1"), 10.0);
  EXPECT_NEAR(report->parameters.at("sensitivity"),
              BoundedCovSensitivity(4.0, 10, 20), 1e-15);
}

TEST(VerdictName, Names) {
  EXPECT_THAT(std::string(VerdictName(Verdict::kAdvisoryFail)),
              HasSubstr("advisory"));
}

}  // namespace
}  // namespace dpsample
