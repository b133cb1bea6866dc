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

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <set>
#include <vector>

#include "dpsample/dataset_io.h"
#include "dpsample/parallel.h"
#include "dpsample/random.h"
#include "dpsample/status.h"
#include "dpsample/types.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace dpsample {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

// gmock container matchers need an STL container, not a span.
template <typename Range>
auto Vec(const Range& r) {
  return std::vector(r.begin(), r.end());
}

TEST(StatusTest, KindRoundTripsThroughPayload) {
  const absl::Status s = MakeError(ErrorKind::kTooManyOutputs, "m > n");
  EXPECT_FALSE(s.ok());
  EXPECT_TRUE(IsErrorKind(s, ErrorKind::kTooManyOutputs));
  EXPECT_FALSE(IsErrorKind(s, ErrorKind::kBadSplit));
  EXPECT_THAT(std::string(s.message()), HasSubstr("TooManyOutputs"));
  EXPECT_THAT(std::string(s.message()), HasSubstr("m > n"));
  EXPECT_EQ(ErrorKindName(ErrorKind::kInsufficientSamples),
            "InsufficientSamples");
}

TEST(StatusTest, ForeignStatusHasNoKind) {
  EXPECT_FALSE(GetErrorKind(absl::InternalError("x")).has_value());
  EXPECT_FALSE(GetErrorKind(absl::OkStatus()).has_value());
}

TEST(CategoricalDistTest, AcceptsValidInputs) {
  auto half = CategoricalDist::Create({0.5, 0.5});
  ASSERT_TRUE(half.ok());
  EXPECT_EQ(half->k(), 2);
  auto point = CategoricalDist::Create({1.0, 0.0, 0.0});
  ASSERT_TRUE(point.ok());
  EXPECT_EQ(point->k(), 3);
  EXPECT_EQ(point->prob(1), 1.0);
}

TEST(CategoricalDistTest, RejectsInvalidInputs) {
  EXPECT_TRUE(IsErrorKind(CategoricalDist::Create({0.6, 0.5}).status(),
                          ErrorKind::kNotNormalized));
  EXPECT_TRUE(IsErrorKind(CategoricalDist::Create({1.2, -0.2}).status(),
                          ErrorKind::kNegativeMass));
  EXPECT_TRUE(IsErrorKind(CategoricalDist::Create({1.0}).status(),
                          ErrorKind::kDomainTooSmall));
  EXPECT_TRUE(IsErrorKind(CategoricalDist::Create({0.5, NAN}).status(),
                          ErrorKind::kNotNormalized));
}

TEST(CategoricalDistTest, NormalizationToleranceIsTight) {
  EXPECT_TRUE(CategoricalDist::Create({0.5 + 5e-13, 0.5}).ok());
  EXPECT_FALSE(CategoricalDist::Create({0.5 + 5e-12, 0.5}).ok());
}

TEST(EmpiricalDistTest, CountsValues) {
  auto a = KaryDataset::Create({1, 1, 2}, 2);
  ASSERT_TRUE(a.ok());
  EXPECT_THAT(
      Vec(EmpiricalDist(*a).probs()),
      ElementsAre(DoubleNear(2.0 / 3, 1e-15), DoubleNear(1.0 / 3, 1e-15)));
  auto b = KaryDataset::Create({3}, 3);
  ASSERT_TRUE(b.ok());
  EXPECT_THAT(Vec(EmpiricalDist(*b).probs()), ElementsAre(0.0, 0.0, 1.0));
  auto c = KaryDataset::Create({1, 2, 3, 4}, 4);
  ASSERT_TRUE(c.ok());
  EXPECT_THAT(Vec(EmpiricalDist(*c).probs()),
              ElementsAre(0.25, 0.25, 0.25, 0.25));
}

TEST(EmpiricalDistTest, AlwaysValidates) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(gen() % 11);
    const int n = 1 + static_cast<int>(gen() % 97);
    std::vector<Element> values(n);
    for (Element& v : values) v = 1 + static_cast<int>(gen() % k);
    auto data = KaryDataset::Create(values, k);
    ASSERT_TRUE(data.ok());
    const CategoricalDist dist = EmpiricalDist(*data);
    std::vector<double> copy(dist.probs().begin(), dist.probs().end());
    EXPECT_TRUE(CategoricalDist::Create(copy).ok());
  }
}

TEST(KaryDatasetTest, ValidatesDomain) {
  EXPECT_TRUE(IsErrorKind(KaryDataset::Create({1, 4}, 3).status(),
                          ErrorKind::kOutOfDomain));
  EXPECT_TRUE(IsErrorKind(KaryDataset::Create({0}, 3).status(),
                          ErrorKind::kOutOfDomain));
  EXPECT_TRUE(IsErrorKind(KaryDataset::Create({}, 3).status(),
                          ErrorKind::kEmptyDataset));
  EXPECT_TRUE(IsErrorKind(KaryDataset::Create({1}, 1).status(),
                          ErrorKind::kDomainTooSmall));
  auto data = KaryDataset::Create({1, 2, 3, 1}, 3);
  ASSERT_TRUE(data.ok());
  const KaryDataset slice = data->Slice(1, 2);
  EXPECT_THAT(Vec(slice.values()), ElementsAre(2, 3));
  EXPECT_EQ(slice.k(), 3);
}

TEST(VectorDatasetTest, RequiresUniformDimension) {
  EXPECT_TRUE(IsErrorKind(VectorDataset::Create({{1, 2}, {3}}).status(),
                          ErrorKind::kDimensionMismatch));
  EXPECT_TRUE(IsErrorKind(VectorDataset::Create({}).status(),
                          ErrorKind::kEmptyDataset));
  auto data = VectorDataset::Create({{1, 2}, {3, 4}, {5, 6}});
  ASSERT_TRUE(data.ok());
  EXPECT_EQ(data->dim(), 2);
  EXPECT_EQ(data->size(), 3);
  EXPECT_THAT(Vec(data->row(2)), ElementsAre(5, 6));
  EXPECT_THAT(Vec(data->Slice(1, 1).row(0)), ElementsAre(3, 4));
}

TEST(PrivacyBudgetTest, Invariants) {
  EXPECT_TRUE(PrivacyBudget::Create(1.0).ok());
  EXPECT_TRUE(PrivacyBudget::Create(1.0)->is_pure());
  EXPECT_FALSE(PrivacyBudget::Create(0.0).ok());
  EXPECT_FALSE(PrivacyBudget::Create(1.0, 1.0).ok());
  EXPECT_FALSE(PrivacyBudget::Create(1.0, -0.1).ok());
  EXPECT_FALSE(PrivacyBudget::Create(1.0, 0.0, 0.7).ok());
  auto z = PrivacyBudget::Zcdp(2.0);
  ASSERT_TRUE(z.ok());
  EXPECT_DOUBLE_EQ(*z->rho(), 2.0);
  EXPECT_FALSE(z->is_pure());
}

TEST(GaussianFamilySpecTest, KnownCovarianceForcesUnitBound) {
  EXPECT_TRUE(GaussianFamilySpec::Create(3, 1.0, 1.0, true).ok());
  EXPECT_FALSE(GaussianFamilySpec::Create(3, 1.0, 2.0, true).ok());
  EXPECT_FALSE(GaussianFamilySpec::Create(0, 1.0, 1.0, false).ok());
  EXPECT_FALSE(GaussianFamilySpec::Create(2, 1.0, 0.5, false).ok());
  EXPECT_TRUE(GaussianFamilySpec::Create(2, INFINITY, INFINITY, false).ok());
}

TEST(RandomSourceTest, SameSeedSameStream) {
  RandomSource a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const uint64_t x = a.NextU64();
    EXPECT_EQ(x, b.NextU64());
    differs |= (x != c.NextU64());
  }
  EXPECT_TRUE(differs);
}

TEST(RandomSourceTest, DerivedStreamsAreDistinctAndStable) {
  const RandomSource root(9);
  std::set<uint64_t> firsts;
  for (uint64_t s = 0; s < 1000; ++s) {
    RandomSource child = root.Derive(s);
    RandomSource again = root.Derive(s);
    const uint64_t x = child.NextU64();
    EXPECT_EQ(x, again.NextU64());
    firsts.insert(x);
  }
  EXPECT_EQ(firsts.size(), 1000u);
}

TEST(RandomSourceTest, DerivedStreamsAreUncorrelated) {
  const RandomSource root(11);
  RandomSource a = root.Derive(0), b = root.Derive(1);
  constexpr int kN = 200000;
  double sab = 0.0;
  for (int i = 0; i < kN; ++i) {
    sab += (a.Uniform() - 0.5) * (b.Uniform() - 0.5);
  }
  // Var of the product is 1/144 per term.
  EXPECT_LT(std::abs(sab / kN), 5.0 * std::sqrt(1.0 / 144.0 / kN));
}

TEST(RandomSourceTest, UniformIntIsUnbiased) {
  RandomSource rng(5);
  constexpr int kBound = 7;
  std::vector<int64_t> counts(kBound, 0);
  for (int i = 0; i < 700000; ++i) ++counts[rng.UniformInt(kBound)];
  const std::vector<double> probs(kBound, 1.0 / kBound);
  const auto chi = testing::ChiSquareGof(counts, probs, 1e-3);
  EXPECT_TRUE(chi.pass()) << chi.statistic << " > " << chi.critical;
}

TEST(RandomSourceTest, UniformOpenNeverHitsEndpoints) {
  RandomSource rng(3);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.UniformOpen();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RandomSourceTest, StandardNormalMatchesCdf) {
  RandomSource rng(17);
  std::vector<double> xs(1000000);
  for (double& x : xs) x = rng.StandardNormal();
  const double d = testing::KsStatistic(xs, testing::NormalCdf);
  EXPECT_LT(d, testing::KsCriticalValue(xs.size(), 1e-3));
}

TEST(RandomSourceTest, StandardExponentialMatchesCdf) {
  RandomSource rng(19);
  std::vector<double> xs(1000000);
  for (double& x : xs) x = rng.StandardExponential();
  const double d = testing::KsStatistic(
      xs, [](double t) { return t <= 0 ? 0.0 : -std::expm1(-t); });
  EXPECT_LT(d, testing::KsCriticalValue(xs.size(), 1e-3));
}

TEST(ParallelTest, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  ParallelFor(1000, [&](int64_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  ParallelFor(0, [](int64_t) { FAIL(); });
}

TEST(ParallelTest, ThreadCapFromEnvironment) {
  setenv("DP_SAMPLER_THREADS", "1", 1);
  EXPECT_EQ(MaxThreads(), 1);
  unsetenv("DP_SAMPLER_THREADS");
  EXPECT_GE(MaxThreads(), 1);
}

TEST(DatasetIoTest, ParsesKaryCsvWithHeader) {
  auto data = ParseKaryCsv("value\n1\n3\n2\n\n", std::nullopt);
  ASSERT_TRUE(data.ok()) << data.status();
  EXPECT_THAT(Vec(data->values()), ElementsAre(1, 3, 2));
  EXPECT_EQ(data->k(), 3);
  auto wide = ParseKaryCsv("1\n2\n", 5);
  ASSERT_TRUE(wide.ok());
  EXPECT_EQ(wide->k(), 5);
  EXPECT_TRUE(
      IsErrorKind(ParseKaryCsv("1\n6\n", 5).status(), ErrorKind::kOutOfDomain));
  EXPECT_TRUE(IsErrorKind(ParseKaryCsv("1\nx\n", 5).status(),
                          ErrorKind::kConfigInvalid));
}

TEST(DatasetIoTest, ParsesVectorCsv) {
  auto data = ParseVectorCsv("x,y\n1.5, -2\n0,3e-1\n");
  ASSERT_TRUE(data.ok()) << data.status();
  EXPECT_EQ(data->dim(), 2);
  EXPECT_THAT(Vec(data->flat()), ElementsAre(1.5, -2.0, 0.0, 0.3));
  EXPECT_TRUE(IsErrorKind(ParseVectorCsv("1,2\n3\n").status(),
                          ErrorKind::kDimensionMismatch));
  EXPECT_TRUE(
      IsErrorKind(ParseVectorCsv("").status(), ErrorKind::kEmptyDataset));
}

TEST(DatasetIoTest, FormatRoundTripsExactly) {
  const std::vector<double> rows = {0.1, -1.0 / 3.0, 1e-300, 12345.678};
  const std::string text = FormatVectorCsv(rows, 2);
  auto parsed = ParseVectorCsv(text);
  ASSERT_TRUE(parsed.ok());
  EXPECT_THAT(Vec(parsed->flat()),
              ElementsAre(rows[0], rows[1], rows[2], rows[3]));
  const std::vector<Element> values = {2, 1, 2};
  auto kary = ParseKaryCsv(FormatKaryCsv(values), 2);
  ASSERT_TRUE(kary.ok());
  EXPECT_THAT(Vec(kary->values()), ElementsAre(2, 1, 2));
}

TEST(DatasetIoTest, FileRoundTrip) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "dpsample_core_test.csv")
          .string();
  ASSERT_TRUE(WriteTextFile(path, "1\n2\n").ok());
  auto data = ReadKaryCsv(path);
  ASSERT_TRUE(data.ok());
  EXPECT_EQ(data->size(), 2);
  std::filesystem::remove(path);
  EXPECT_TRUE(IsErrorKind(ReadKaryCsv(path).status(), ErrorKind::kIoError));
}

}  // namespace
}  // namespace dpsample
