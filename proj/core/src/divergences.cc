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

#include "dpsample/divergences.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "absl/strings/str_cat.h"
#include "dpsample/parallel.h"
#include "dpsample/random.h"
#include "dpsample/status.h"

namespace dpsample {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

absl::Status CheckSameDomain(const CategoricalDist& p,
                             const CategoricalDist& q) {
  if (p.k() != q.k()) {
    return MakeError(
        ErrorKind::kDomainMismatch,
        absl::StrCat("domain sizes differ: ", p.k(), " vs ", q.k()));
  }
  return absl::OkStatus();
}

// Linear-interpolated empirical quantile of sorted values.
double SortedQuantile(const std::vector<double>& sorted, double level) {
  if (sorted.size() == 1) return sorted.front();
  const double pos = level * static_cast<double>(sorted.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(pos));
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double HalfL1(const std::vector<int64_t>& counts_p, double np,
              const std::vector<int64_t>& counts_q, double nq) {
  double sum = 0.0;
  for (size_t c = 0; c < counts_p.size(); ++c) {
    sum += std::fabs(static_cast<double>(counts_p[c]) / np -
                     static_cast<double>(counts_q[c]) / nq);
  }
  return 0.5 * sum;
}

}  // namespace

absl::StatusOr<double> TvDistance(const CategoricalDist& p,
                                  const CategoricalDist& q) {
  DPSAMPLE_RETURN_IF_ERROR(CheckSameDomain(p, q));
  double sum = 0.0;
  for (int j = 0; j < p.k(); ++j) {
    sum += std::fabs(p.probs()[j] - q.probs()[j]);
  }
  return std::min(1.0, 0.5 * sum);
}

absl::StatusOr<double> HockeyStick(const CategoricalDist& p,
                                   const CategoricalDist& q, double beta) {
  DPSAMPLE_RETURN_IF_ERROR(CheckSameDomain(p, q));
  if (!(beta >= 1.0)) {
    return MakeError(
        ErrorKind::kInvalidOrder,
        absl::StrCat("hockey-stick order beta must be >= 1, got ", beta));
  }
  double sum = 0.0;
  for (int j = 0; j < p.k(); ++j) {
    sum += std::max(0.0, p.probs()[j] - beta * q.probs()[j]);
  }
  return sum;
}

absl::StatusOr<double> RenyiDivergence(const CategoricalDist& p,
                                       const CategoricalDist& q, double order) {
  DPSAMPLE_RETURN_IF_ERROR(CheckSameDomain(p, q));
  if (!(order > 1.0) || std::isinf(order)) {
    return MakeError(
        ErrorKind::kInvalidOrder,
        absl::StrCat("Renyi order must be > 1 and finite, got ", order));
  }
  // log sum exp(order log p + (1 - order) log q), over the support of p.
  std::vector<double> log_terms;
  log_terms.reserve(p.k());
  for (int j = 0; j < p.k(); ++j) {
    const double pj = p.probs()[j];
    const double qj = q.probs()[j];
    if (pj == 0.0) continue;
    if (qj == 0.0) return kInfinity;
    log_terms.push_back(order * std::log(pj) + (1.0 - order) * std::log(qj));
  }
  const double max_log = *std::max_element(log_terms.begin(), log_terms.end());
  double sum = 0.0;
  for (double lt : log_terms) sum += std::exp(lt - max_log);
  const double value = (max_log + std::log(sum)) / (order - 1.0);
  // Rounding can push identical distributions a hair below zero.
  return std::max(0.0, value);
}

absl::StatusOr<ClosenessResult> EpsDeltaCloseness(const CategoricalDist& p,
                                                  const CategoricalDist& q,
                                                  double eps) {
  if (!(eps >= 0.0)) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("eps must be >= 0, got ", eps));
  }
  const double beta = std::exp(eps);
  ClosenessResult result;
  DPSAMPLE_ASSIGN_OR_RETURN(result.hs_forward, HockeyStick(p, q, beta));
  DPSAMPLE_ASSIGN_OR_RETURN(result.hs_backward, HockeyStick(q, p, beta));
  result.delta_at_eps = std::max(result.hs_forward, result.hs_backward);
  return result;
}

double HockeyStickToTvBound(double eps, double delta) {
  const double e = std::exp(eps);
  return 2.0 * delta / (e + 1.0) + std::expm1(eps);
}

absl::StatusOr<BinnedTvEstimate> TvEstimateBinned(
    const VectorDataset& samples_p, const VectorDataset& samples_q,
    const BinnedTvOptions& options) {
  if (samples_p.dim() != samples_q.dim()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrCat("sample dimensions differ: ", samples_p.dim(),
                                  " vs ", samples_q.dim()));
  }
  if (samples_p.size() == 0 || samples_q.size() == 0) {
    return MakeError(ErrorKind::kEmptyDataset, "empty sample set");
  }
  const int bins = options.bins_per_axis;
  if (bins < 2) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat("bins_per_axis must be >= 2, got ", bins));
  }
  if (options.bootstrap_resamples < 1) {
    return MakeError(ErrorKind::kInvalidParameter,
                     "need at least one bootstrap resample");
  }
  const int dim = samples_p.dim();
  if (dim * std::log2(static_cast<double>(bins)) > 62.0) {
    return MakeError(ErrorKind::kInvalidParameter,
                     absl::StrCat(bins, "^", dim, " cells cannot be indexed"));
  }

  std::vector<double> lo(dim, kInfinity);
  std::vector<double> hi(dim, -kInfinity);
  for (const VectorDataset* set : {&samples_p, &samples_q}) {
    for (int64_t i = 0; i < set->size(); ++i) {
      const auto row = set->row(i);
      for (int a = 0; a < dim; ++a) {
        lo[a] = std::min(lo[a], row[a]);
        hi[a] = std::max(hi[a], row[a]);
      }
    }
  }
  std::vector<double> width(dim);
  for (int a = 0; a < dim; ++a) {
    double w = hi[a] - lo[a];
    if (!(w > 0.0)) w = 1.0;
    lo[a] -= 0.005 * w;
    width[a] = 1.01 * w / bins;
  }

  const auto cell_ids = [&](const VectorDataset& set) {
    std::vector<uint64_t> ids(set.size());
    for (int64_t i = 0; i < set.size(); ++i) {
      const auto row = set.row(i);
      uint64_t id = 0;
      for (int a = 0; a < dim; ++a) {
        int64_t b =
            static_cast<int64_t>(std::floor((row[a] - lo[a]) / width[a]));
        b = std::clamp<int64_t>(b, 0, bins - 1);
        id = id * static_cast<uint64_t>(bins) + static_cast<uint64_t>(b);
      }
      ids[i] = id;
    }
    return ids;
  };
  std::vector<uint64_t> ids_p = cell_ids(samples_p);
  std::vector<uint64_t> ids_q = cell_ids(samples_q);

  // Compress occupied cells to a dense index.
  std::vector<uint64_t> cells(ids_p);
  cells.insert(cells.end(), ids_q.begin(), ids_q.end());
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  const auto dense = [&cells](const std::vector<uint64_t>& ids) {
    std::vector<uint32_t> out(ids.size());
    for (size_t i = 0; i < ids.size(); ++i) {
      out[i] = static_cast<uint32_t>(
          std::lower_bound(cells.begin(), cells.end(), ids[i]) - cells.begin());
    }
    return out;
  };
  const std::vector<uint32_t> dense_p = dense(ids_p);
  const std::vector<uint32_t> dense_q = dense(ids_q);
  const double np = static_cast<double>(dense_p.size());
  const double nq = static_cast<double>(dense_q.size());

  std::vector<int64_t> counts_p(cells.size(), 0);
  std::vector<int64_t> counts_q(cells.size(), 0);
  for (uint32_t c : dense_p) ++counts_p[c];
  for (uint32_t c : dense_q) ++counts_q[c];

  BinnedTvEstimate result;
  result.bins_per_axis = bins;
  result.estimate = HalfL1(counts_p, np, counts_q, nq);

  const RandomSource root(options.seed);
  std::vector<double> replicates(options.bootstrap_resamples);
  ParallelFor(options.bootstrap_resamples, [&](int64_t r) {
    RandomSource rng = root.Derive(static_cast<uint64_t>(r));
    std::vector<int64_t> bp(cells.size(), 0);
    std::vector<int64_t> bq(cells.size(), 0);
    for (size_t i = 0; i < dense_p.size(); ++i) {
      ++bp[dense_p[rng.UniformInt(dense_p.size())]];
    }
    for (size_t i = 0; i < dense_q.size(); ++i) {
      ++bq[dense_q[rng.UniformInt(dense_q.size())]];
    }
    replicates[r] = HalfL1(bp, np, bq, nq);
  });
  std::sort(replicates.begin(), replicates.end());
  result.halfwidth = 0.5 * (SortedQuantile(replicates, 0.975) -
                            SortedQuantile(replicates, 0.025));
  return result;
}

}  // namespace dpsample
