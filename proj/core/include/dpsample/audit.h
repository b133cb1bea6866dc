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

// Privacy audits. Exhaustive and analytic audits give binding verdicts;
// Monte Carlo audits are advisory and report kAdvisoryFail instead of kFail.

#ifndef DPSAMPLE_AUDIT_H_
#define DPSAMPLE_AUDIT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "dpsample/gaussian.h"

namespace dpsample {

inline constexpr double kAuditSlack = 1e-9;

enum class Verdict { kPass, kFail, kAdvisoryFail };

std::string_view VerdictName(Verdict verdict);

struct AuditCheck {
  std::string label;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = true;
  // Non-binding checks can only produce kAdvisoryFail.
  bool binding = true;

  bool operator==(const AuditCheck&) const = default;
};

// Neighboring inputs and the outcome attaining the worst measured ratio.
// Finite-domain audits store elements; vector audits store flattened sums.
struct AuditWitness {
  std::string description;
  std::vector<double> input_a;
  std::vector<double> input_b;
  std::vector<double> outcome;

  bool operator==(const AuditWitness&) const = default;
};

struct AuditReport {
  std::string mechanism;
  double claimed_epsilon = 0.0;
  double claimed_delta = 0.0;
  std::optional<double> claimed_rho;
  double measured_max_log_ratio = 0.0;
  double measured_delta = 0.0;
  int64_t probe_count = 0;
  bool advisory = false;
  Verdict verdict = Verdict::kPass;
  std::optional<uint64_t> seed;
  std::map<std::string, double> parameters;
  std::vector<AuditCheck> checks;
  AuditWitness witness;

  bool operator==(const AuditReport&) const = default;
};

// Recomputes each check's pass flag (measured <= bound + kAuditSlack) and the
// verdict from the checks.
void FinalizeVerdict(AuditReport& report);

std::string AuditReportToJson(const AuditReport& report);
// Errors: ConfigInvalid.
absl::StatusOr<AuditReport> AuditReportFromJson(std::string_view json);

// Exhaustive max over (x, x', y) of log RR_x(y) / RR_x'(y).
absl::StatusOr<AuditReport> AuditRrLocal(int k, double eps0,
                                         double claimed_eps);

// Largest k^n the exhaustive SubRR audit will enumerate.
inline constexpr double kMaxEnumeration = 1e6;

// Exhaustive over neighboring datasets of size n (up to permutation) and
// outcomes. Also checks the ratio against 1 + e^eps0 / n and that bound
// against e^eps. Errors: EnumerationTooLarge, InsufficientSamples.
absl::StatusOr<AuditReport> AuditSubrrPure(int k, int64_t n, double eps,
                                           double claimed_eps);

enum class ShurrAuditPair {
  // A = [1, ..., 1], B = [1, ..., 1, 2].
  kWorstCase,
  kIdentical,
};

struct ShurrAuditOptions {
  int k = 2;
  int64_t n = 0;
  double eps = 1.0;
  double delta = 1e-6;
  int64_t runs = 10000;
  uint64_t seed = 0;
  ShurrAuditPair pair = ShurrAuditPair::kWorstCase;
  // Replaces the ShuRR local parameter, for planted violations.
  std::optional<double> eps0_override;
  int bootstrap_resamples = 200;
};

// Monte Carlo hockey-stick estimate at e^eps between the first-output laws on
// a neighboring pair. Advisory.
absl::StatusOr<AuditReport> AuditShurrMarginal(
    const ShurrAuditOptions& options);

enum class ElapAuditPair {
  // Random in-ball rows, one replaced by another random in-ball row.
  kRandom,
  kIdentical,
  // Differing rows +-(B/2)u: |S - S'| = B.
  kUnit,
  // Differing rows +-B u: |S - S'| = 2B.
  kAdversarial,
};

struct ElapAuditOptions {
  int dim = 2;
  double bound = 1.0;
  double eps = 1.0;
  int64_t probes = 10000;
  uint64_t seed = 0;
  ElapAuditPair pair = ElapAuditPair::kRandom;
  double sensitivity_multiplier = 1.0;
  int64_t rows = 5;
};

// Exact log-density ratio (|y - S'| - |y - S|) / b at probe points. Binding
// check: eps |S - S'| / (multiplier B). Advisory check: eps.
absl::StatusOr<AuditReport> AuditElapMechanism(const ElapAuditOptions& options);

// Analytic Renyi divergence at worst-case sensitivity against order eps^2 / 2
// for each order.
absl::StatusOr<AuditReport> AuditZcdpGaussian(
    const ZcdpParams& params, double eps, const std::vector<double>& orders);

}  // namespace dpsample

#endif  // DPSAMPLE_AUDIT_H_
