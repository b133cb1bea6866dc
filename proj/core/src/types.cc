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

#include "dpsample/types.h"

#include <cmath>
#include <cstdlib>

#include "absl/strings/str_cat.h"
#include "dpsample/status.h"

namespace dpsample {

absl::StatusOr<CategoricalDist> CategoricalDist::Create(
    std::vector<double> probs) {
  if (probs.size() < 2) {
    return MakeError(ErrorKind::kDomainTooSmall,
                     absl::StrCat("need k >= 2 outcomes, got ", probs.size()));
  }
  double sum = 0.0;
  for (size_t j = 0; j < probs.size(); ++j) {
    if (std::isnan(probs[j])) {
      return MakeError(ErrorKind::kNotNormalized,
                       absl::StrCat("probability ", j + 1, " is NaN"));
    }
    if (probs[j] < 0.0) {
      return MakeError(
          ErrorKind::kNegativeMass,
          absl::StrCat("probability of element ", j + 1, " is ", probs[j]));
    }
    sum += probs[j];
  }
  if (!(std::fabs(sum - 1.0) <= kNormalizationTolerance)) {
    return MakeError(ErrorKind::kNotNormalized,
                     absl::StrCat("probabilities sum to ", sum));
  }
  return CategoricalDist(std::move(probs));
}

absl::StatusOr<KaryDataset> KaryDataset::Create(std::vector<Element> values,
                                                int k) {
  if (k < 2) {
    return MakeError(ErrorKind::kDomainTooSmall,
                     absl::StrCat("domain size k = ", k, " < 2"));
  }
  if (values.empty()) {
    return MakeError(ErrorKind::kEmptyDataset, "dataset has no records");
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1 || values[i] > k) {
      return MakeError(ErrorKind::kOutOfDomain,
                       absl::StrCat("record ", i + 1, " = ", values[i],
                                    " is outside [1..", k, "]"));
    }
  }
  return KaryDataset(std::move(values), k);
}

KaryDataset KaryDataset::Slice(int64_t begin, int64_t count) const {
  return KaryDataset(std::vector<Element>(values_.begin() + begin,
                                          values_.begin() + begin + count),
                     k_);
}

absl::StatusOr<VectorDataset> VectorDataset::Create(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    return MakeError(ErrorKind::kEmptyDataset, "dataset has no rows");
  }
  const size_t dim = rows.front().size();
  if (dim == 0) {
    return MakeError(ErrorKind::kDimensionMismatch, "rows have dimension 0");
  }
  std::vector<double> flat;
  flat.reserve(rows.size() * dim);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) {
      return MakeError(ErrorKind::kDimensionMismatch,
                       absl::StrCat("row ", i + 1, " has dimension ",
                                    rows[i].size(), ", expected ", dim));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return VectorDataset(std::move(flat), static_cast<int>(dim));
}

absl::StatusOr<VectorDataset> VectorDataset::FromFlat(std::vector<double> flat,
                                                      int dim) {
  if (dim < 1) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrCat("dimension ", dim, " < 1"));
  }
  if (flat.empty()) {
    return MakeError(ErrorKind::kEmptyDataset, "dataset has no rows");
  }
  if (flat.size() % static_cast<size_t>(dim) != 0) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrCat(flat.size(), " values do not form rows of ",
                                  "dimension ", dim));
  }
  return VectorDataset(std::move(flat), dim);
}

VectorDataset VectorDataset::Slice(int64_t begin, int64_t count) const {
  return VectorDataset(
      std::vector<double>(flat_.begin() + begin * dim_,
                          flat_.begin() + (begin + count) * dim_),
      dim_);
}

absl::StatusOr<PrivacyBudget> PrivacyBudget::Create(double epsilon,
                                                    double delta,
                                                    std::optional<double> rho) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return MakeError(
        ErrorKind::kInvalidParameter,
        absl::StrCat("epsilon must be positive and finite, got ", epsilon));
  }
  if (!(delta >= 0.0 && delta < 1.0)) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("delta must lie in [0, 1), got ", delta));
  }
  if (rho.has_value() && std::fabs(*rho - epsilon * epsilon / 2.0) > 1e-12) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("rho = ", *rho, " != epsilon^2/2 = ",
                                  epsilon * epsilon / 2.0));
  }
  return PrivacyBudget(epsilon, delta, rho);
}

absl::StatusOr<PrivacyBudget> PrivacyBudget::Zcdp(double epsilon) {
  return Create(epsilon, 0.0, epsilon * epsilon / 2.0);
}

absl::StatusOr<GaussianFamilySpec> GaussianFamilySpec::Create(
    int d, double mean_bound, double cov_bound, bool known_identity_cov) {
  if (d < 1) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("dimension d = ", d, " < 1"));
  }
  if (!(mean_bound > 0.0)) {
    return MakeError(
        ErrorKind::kInvalidParameter,
        absl::StrCat("mean bound R must be positive, got ", mean_bound));
  }
  if (!(cov_bound >= 1.0)) {
    return MakeError(
        ErrorKind::kInvalidParameter,
        absl::StrCat("covariance bound kappa must be >= 1, got ", cov_bound));
  }
  if (known_identity_cov && cov_bound != 1.0) {
    return MakeError(ErrorKind::kInvalidParameter,
                     "known identity covariance requires kappa = 1");
  }
  return GaussianFamilySpec{d, mean_bound, cov_bound, known_identity_cov};
}

CategoricalDist EmpiricalDist(const KaryDataset& data) {
  // Records are validated on construction, so this cannot fail.
  return *EmpiricalDist(data.values(), data.k());
}

absl::StatusOr<CategoricalDist> EmpiricalDist(std::span<const Element> values,
                                              int k) {
  if (values.empty()) {
    return MakeError(ErrorKind::kEmptyDataset, "no values");
  }
  std::vector<int64_t> counts(k, 0);
  for (Element v : values) {
    if (v < 1 || v > k) {
      return MakeError(ErrorKind::kOutOfDomain,
                       absl::StrCat("value ", v, " outside [1..", k, "]"));
    }
    ++counts[v - 1];
  }
  std::vector<double> probs(k);
  const double n = static_cast<double>(values.size());
  for (int j = 0; j < k; ++j) probs[j] = static_cast<double>(counts[j]) / n;
  return CategoricalDist::Create(std::move(probs));
}

}  // namespace dpsample
