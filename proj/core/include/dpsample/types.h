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

#ifndef DPSAMPLE_TYPES_H_
#define DPSAMPLE_TYPES_H_

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace dpsample {

// Elements of the k-ary domain are the integers 1..k.
using Element = int;

inline constexpr double kNormalizationTolerance = 1e-12;

// A probability vector over [k], k >= 2. Immutable once built.
class CategoricalDist {
 public:
  // Validates `probs`. Errors: NegativeMass, NotNormalized, DomainTooSmall.
  static absl::StatusOr<CategoricalDist> Create(std::vector<double> probs);

  int k() const { return static_cast<int>(probs_.size()); }

  // Probability of element `x` in 1..k.
  double prob(Element x) const { return probs_[x - 1]; }

  // Zero-indexed view: probs()[j] is the mass on element j + 1.
  std::span<const double> probs() const { return probs_; }

  bool operator==(const CategoricalDist&) const = default;

 private:
  explicit CategoricalDist(std::vector<double> probs)
      : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

// n >= 1 values from [k].
class KaryDataset {
 public:
  static absl::StatusOr<KaryDataset> Create(std::vector<Element> values, int k);

  int k() const { return k_; }
  int64_t size() const { return static_cast<int64_t>(values_.size()); }
  std::span<const Element> values() const { return values_; }
  Element operator[](int64_t i) const { return values_[i]; }

  // Rows [begin, begin + count).
  KaryDataset Slice(int64_t begin, int64_t count) const;

 private:
  KaryDataset(std::vector<Element> values, int k)
      : values_(std::move(values)), k_(k) {}

  std::vector<Element> values_;
  int k_;
};

// n >= 1 rows of dimension d >= 1, stored row-major.
class VectorDataset {
 public:
  static absl::StatusOr<VectorDataset> Create(
      const std::vector<std::vector<double>>& rows);
  static absl::StatusOr<VectorDataset> FromFlat(std::vector<double> flat,
                                                int dim);

  int dim() const { return dim_; }
  int64_t size() const { return static_cast<int64_t>(flat_.size()) / dim_; }
  std::span<const double> row(int64_t i) const {
    return std::span<const double>(flat_).subspan(i * dim_, dim_);
  }
  std::span<const double> flat() const { return flat_; }

  VectorDataset Slice(int64_t begin, int64_t count) const;

 private:
  VectorDataset(std::vector<double> flat, int dim)
      : flat_(std::move(flat)), dim_(dim) {}

  std::vector<double> flat_;
  int dim_;
};

// (epsilon, delta) with an optional zCDP parameter rho = epsilon^2 / 2.
class PrivacyBudget {
 public:
  static absl::StatusOr<PrivacyBudget> Create(
      double epsilon, double delta = 0.0,
      std::optional<double> rho = std::nullopt);
  // epsilon^2/2-zCDP.
  static absl::StatusOr<PrivacyBudget> Zcdp(double epsilon);

  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }
  std::optional<double> rho() const { return rho_; }
  bool is_pure() const { return delta_ == 0.0 && !rho_.has_value(); }

 private:
  PrivacyBudget(double epsilon, double delta, std::optional<double> rho)
      : epsilon_(epsilon), delta_(delta), rho_(rho) {}

  double epsilon_;
  double delta_;
  std::optional<double> rho_;
};

// Describes N^d(<= R, <= kappa): Gaussians with ||mu|| <= R and
// I <= Sigma <= kappa * I. Infinite bounds mean "unbounded".
struct GaussianFamilySpec {
  int d = 1;
  double mean_bound = std::numeric_limits<double>::infinity();
  double cov_bound = std::numeric_limits<double>::infinity();
  bool known_identity_cov = false;

  static absl::StatusOr<GaussianFamilySpec> Create(int d, double mean_bound,
                                                   double cov_bound,
                                                   bool known_identity_cov);
};

// Output of every sample-complexity calculator.
struct ComplexityReport {
  int64_t n_required = 1;
  std::string formula_name;
  std::map<std::string, double> inputs;
  // Intermediate quantities (clip bound, noise variance, ...).
  std::map<std::string, double> derived;
};

// probs[j] = count(j) / n.
CategoricalDist EmpiricalDist(const KaryDataset& data);

// Empirical distribution of raw values in [1..k]; values outside the domain
// are an error.
absl::StatusOr<CategoricalDist> EmpiricalDist(std::span<const Element> values,
                                              int k);

}  // namespace dpsample

#endif  // DPSAMPLE_TYPES_H_
