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
#include <functional>
#include <limits>
#include <utility>

#include "absl/strings/str_cat.h"
#include "dpsample/divergences.h"
#include "dpsample/elap.h"
#include "dpsample/kary.h"
#include "dpsample/parallel.h"
#include "dpsample/random.h"
#include "dpsample/status.h"
#include "nlohmann/json.hpp"

namespace dpsample {
namespace {

using nlohmann::json;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// JSON has no non-finite numbers; those are written as strings.
json EncodeDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

absl::StatusOr<double> DecodeDouble(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return kInfinity;
    if (s == "-inf") return -kInfinity;
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  return MakeError(ErrorKind::kConfigInvalid,
                   absl::StrCat("expected a number, got ", j.dump()));
}

json EncodeVector(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(EncodeDouble(x));
  return out;
}

absl::StatusOr<std::vector<double>> DecodeVector(const json& j) {
  if (!j.is_array()) {
    return MakeError(ErrorKind::kConfigInvalid, "expected an array");
  }
  std::vector<double> out;
  for (const json& e : j) {
    DPSAMPLE_ASSIGN_OR_RETURN(double v, DecodeDouble(e));
    out.push_back(v);
  }
  return out;
}

std::vector<double> ToDoubles(const std::vector<Element>& values) {
  return std::vector<double>(values.begin(), values.end());
}

// Deterministic: ties keep the earliest candidate.
struct MaxTracker {
  double value = -kInfinity;
  bool Offer(double candidate) {
    if (candidate > value) {
      value = candidate;
      return true;
    }
    return false;
  }
};

void ForEachComposition(
    int parts, int64_t total, std::vector<int64_t>& acc, int index,
    const std::function<void(const std::vector<int64_t>&)>& visit) {
  if (index == parts - 1) {
    acc[index] = total;
    visit(acc);
    return;
  }
  for (int64_t c = 0; c <= total; ++c) {
    acc[index] = c;
    ForEachComposition(parts, total - c, acc, index + 1, visit);
  }
}

std::vector<Element> ExpandCounts(const std::vector<int64_t>& counts,
                                  Element extra) {
  std::vector<Element> out;
  for (size_t j = 0; j < counts.size(); ++j) {
    for (int64_t c = 0; c < counts[j]; ++c) {
      out.push_back(static_cast<Element>(j + 1));
    }
  }
  out.push_back(extra);
  return out;
}

double SortedQuantile(std::vector<double> values, double level) {
  std::sort(values.begin(), values.end());
  const double pos = level * static_cast<double>(values.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(pos));
  const size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - lo) * (values[hi] - values[lo]);
}

// max(HS(p||q), HS(q||p)) at beta for count vectors over the same support.
double SymmetricHockeyStick(const std::vector<int64_t>& a,
                            const std::vector<int64_t>& b, double total,
                            double beta) {
  double forward = 0.0;
  double backward = 0.0;
  for (size_t j = 0; j < a.size(); ++j) {
    const double pa = static_cast<double>(a[j]) / total;
    const double pb = static_cast<double>(b[j]) / total;
    forward += std::max(0.0, pa - beta * pb);
    backward += std::max(0.0, pb - beta * pa);
  }
  return std::max(forward, backward);
}

std::vector<double> RandomUnitVector(int dim, RandomSource& rng) {
  std::vector<double> v(dim);
  double norm = 0.0;
  do {
    double sq = 0.0;
    for (double& x : v) {
      x = rng.StandardNormal();
      sq += x * x;
    }
    norm = std::sqrt(sq);
  } while (!(norm > 1e-300));
  for (double& x : v) x /= norm;
  return v;
}

std::vector<double> RandomInBall(int dim, double radius, RandomSource& rng) {
  std::vector<double> v = RandomUnitVector(dim, rng);
  const double r = radius * std::pow(rng.Uniform(), 1.0 / dim);
  for (double& x : v) x *= r;
  return v;
}

double Distance(std::span<const double> a, std::span<const double> b) {
  double sq = 0.0;
  for (size_t i = 0; i < a.size(); ++i) sq += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sq);
}

}  // namespace

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kAdvisoryFail:
      return "advisory-fail";
  }
  return "unknown";
}

void FinalizeVerdict(AuditReport& report) {
  bool binding_fail = false;
  bool advisory_fail = false;
  for (AuditCheck& check : report.checks) {
    check.pass = check.measured <= check.bound + kAuditSlack;
    if (check.pass) continue;
    if (check.binding && !report.advisory) {
      binding_fail = true;
    } else {
      advisory_fail = true;
    }
  }
  if (binding_fail) {
    report.verdict = Verdict::kFail;
  } else if (advisory_fail) {
    report.verdict = Verdict::kAdvisoryFail;
  } else {
    report.verdict = Verdict::kPass;
  }
}

std::string AuditReportToJson(const AuditReport& r) {
  json j;
  j["mechanism"] = r.mechanism;
  j["claimed"] = {{"epsilon", EncodeDouble(r.claimed_epsilon)},
                  {"delta", EncodeDouble(r.claimed_delta)}};
  if (r.claimed_rho) j["claimed"]["rho"] = EncodeDouble(*r.claimed_rho);
  j["measured_max_log_ratio"] = EncodeDouble(r.measured_max_log_ratio);
  j["measured_delta"] = EncodeDouble(r.measured_delta);
  j["probe_count"] = r.probe_count;
  j["advisory"] = r.advisory;
  j["verdict"] = std::string(VerdictName(r.verdict));
  if (r.seed) j["seed"] = *r.seed;
  j["parameters"] = json::object();
  for (const auto& [key, value] : r.parameters) {
    j["parameters"][key] = EncodeDouble(value);
  }
  j["checks"] = json::array();
  for (const AuditCheck& c : r.checks) {
    j["checks"].push_back({{"label", c.label},
                           {"measured", EncodeDouble(c.measured)},
                           {"bound", EncodeDouble(c.bound)},
                           {"pass", c.pass},
                           {"binding", c.binding}});
  }
  j["witness"] = {{"description", r.witness.description},
                  {"input_a", EncodeVector(r.witness.input_a)},
                  {"input_b", EncodeVector(r.witness.input_b)},
                  {"outcome", EncodeVector(r.witness.outcome)}};
  return j.dump(2) + "\n";
}

absl::StatusOr<AuditReport> AuditReportFromJson(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "audit report is not a JSON "
                     "object");
  }
  AuditReport r;
  try {
    r.mechanism = j.at("mechanism").get<std::string>();
    const json& claimed = j.at("claimed");
    DPSAMPLE_ASSIGN_OR_RETURN(r.claimed_epsilon,
                              DecodeDouble(claimed.at("epsilon")));
    DPSAMPLE_ASSIGN_OR_RETURN(r.claimed_delta,
                              DecodeDouble(claimed.at("delta")));
    if (claimed.contains("rho")) {
      DPSAMPLE_ASSIGN_OR_RETURN(double rho, DecodeDouble(claimed.at("rho")));
      r.claimed_rho = rho;
    }
    DPSAMPLE_ASSIGN_OR_RETURN(r.measured_max_log_ratio,
                              DecodeDouble(j.at("measured_max_log_ratio")));
    DPSAMPLE_ASSIGN_OR_RETURN(r.measured_delta,
                              DecodeDouble(j.at("measured_delta")));
    r.probe_count = j.at("probe_count").get<int64_t>();
    r.advisory = j.at("advisory").get<bool>();
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "pass") {
      r.verdict = Verdict::kPass;
    } else if (verdict == "fail") {
      r.verdict = Verdict::kFail;
    } else if (verdict == "advisory-fail") {
      r.verdict = Verdict::kAdvisoryFail;
    } else {
      return MakeError(ErrorKind::kConfigInvalid,
                       absl::StrCat("unknown verdict '", verdict, "'"));
    }
    if (j.contains("seed")) r.seed = j.at("seed").get<uint64_t>();
    for (const auto& [key, value] : j.at("parameters").items()) {
      DPSAMPLE_ASSIGN_OR_RETURN(r.parameters[key], DecodeDouble(value));
    }
    for (const json& c : j.at("checks")) {
      AuditCheck check;
      check.label = c.at("label").get<std::string>();
      DPSAMPLE_ASSIGN_OR_RETURN(check.measured, DecodeDouble(c.at("measured")));
      DPSAMPLE_ASSIGN_OR_RETURN(check.bound, DecodeDouble(c.at("bound")));
      check.pass = c.at("pass").get<bool>();
      check.binding = c.at("binding").get<bool>();
      r.checks.push_back(std::move(check));
    }
    const json& w = j.at("witness");
    r.witness.description = w.at("description").get<std::string>();
    DPSAMPLE_ASSIGN_OR_RETURN(r.witness.input_a, DecodeVector(w.at("input_a")));
    DPSAMPLE_ASSIGN_OR_RETURN(r.witness.input_b, DecodeVector(w.at("input_b")));
    DPSAMPLE_ASSIGN_OR_RETURN(r.witness.outcome, DecodeVector(w.at("outcome")));
  } catch (const json::exception& e) {
    return MakeError(ErrorKind::kConfigInvalid,
                     absl::StrCat("malformed audit report: ", e.what()));
  }
  return r;
}

absl::StatusOr<AuditReport> AuditRrLocal(int k, double eps0,
                                         double claimed_eps) {
  DPSAMPLE_ASSIGN_OR_RETURN(RrParams params, RrParams::Create(eps0, k));
  if (!(claimed_eps >= 0.0)) {
    return MakeError(
        ErrorKind::kInvalidParameter,
        absl::StrCat("claimed eps must be >= 0, got ", claimed_eps));
  }
  AuditReport report;
  report.mechanism = "rr";
  report.claimed_epsilon = claimed_eps;
  report.parameters = {{"k", k}, {"eps0", eps0}};
  const double beta = std::exp(claimed_eps);
  MaxTracker worst;
  double worst_delta = 0.0;
  for (Element x = 1; x <= k; ++x) {
    for (Element xp = 1; xp <= k; ++xp) {
      if (x == xp) continue;
      double hs = 0.0;
      for (Element y = 1; y <= k; ++y) {
        const double p = *RrPmf(x, y, params);
        const double q = *RrPmf(xp, y, params);
        ++report.probe_count;
        hs += std::max(0.0, p - beta * q);
        if (worst.Offer(std::log(p) - std::log(q))) {
          report.witness = {absl::StrCat("inputs x, x'; outcome y"),
                            {static_cast<double>(x)},
                            {static_cast<double>(xp)},
                            {static_cast<double>(y)}};
        }
      }
      worst_delta = std::max(worst_delta, hs);
    }
  }
  report.measured_max_log_ratio = std::max(0.0, worst.value);
  report.measured_delta = worst_delta;
  report.checks.push_back({"max_log_ratio <= claimed eps",
                           report.measured_max_log_ratio, claimed_eps});
  FinalizeVerdict(report);
  return report;
}

absl::StatusOr<AuditReport> AuditSubrrPure(int k, int64_t n, double eps,
                                           double claimed_eps) {
  if (k < 2 || n < 1) {
    return MakeError(
        ErrorKind::kInvalidParameter,
        absl::StrCat("need k >= 2 and n >= 1, got k = ", k, ", n = ", n));
  }
  if (std::pow(static_cast<double>(k), static_cast<double>(n)) >
      kMaxEnumeration) {
    return MakeError(ErrorKind::kEnumerationTooLarge,
                     absl::StrCat(k, "^", n, " datasets exceed the limit ",
                                  kMaxEnumeration));
  }
  DPSAMPLE_ASSIGN_OR_RETURN(double eps0, SubrrEps0(eps, n));
  DPSAMPLE_ASSIGN_OR_RETURN(RrParams params, RrParams::Create(eps0, k));
  const double keep = params.KeepProbability();
  const double flip = params.FlipProbability();
  const double nn = static_cast<double>(n);
  const double beta = std::exp(claimed_eps);

  AuditReport report;
  report.mechanism = "subrr";
  report.claimed_epsilon = claimed_eps;
  report.parameters = {{"k", k}, {"n", nn}, {"eps", eps}, {"eps0", eps0}};

  MaxTracker worst;
  double worst_delta = 0.0;
  std::vector<int64_t> acc(k);
  std::vector<double> pa(k);
  std::vector<double> pb(k);
  ForEachComposition(k, n - 1, acc, 0, [&](const std::vector<int64_t>& shared) {
    for (Element x = 1; x <= k; ++x) {
      for (Element xp = 1; xp <= k; ++xp) {
        if (x == xp) continue;
        for (int y = 0; y < k; ++y) {
          const double ca = static_cast<double>(shared[y]) + (y + 1 == x);
          const double cb = static_cast<double>(shared[y]) + (y + 1 == xp);
          pa[y] = (ca * keep + (nn - ca) * flip) / nn;
          pb[y] = (cb * keep + (nn - cb) * flip) / nn;
        }
        double hs = 0.0;
        for (int y = 0; y < k; ++y) {
          ++report.probe_count;
          hs += std::max(0.0, pa[y] - beta * pb[y]);
          if (worst.Offer(std::log(pa[y]) - std::log(pb[y]))) {
            report.witness = {
                "datasets A, B differing in one record; "
                "outcome y",
                ToDoubles(ExpandCounts(shared, x)),
                ToDoubles(ExpandCounts(shared, xp)),
                {static_cast<double>(y + 1)}};
          }
        }
        worst_delta = std::max(worst_delta, hs);
      }
    }
  });
  report.measured_max_log_ratio = std::max(0.0, worst.value);
  report.measured_delta = worst_delta;
  const double proof_bound = std::log1p(std::exp(eps0) / nn);
  report.checks.push_back({"max_log_ratio <= claimed eps",
                           report.measured_max_log_ratio, claimed_eps});
  report.checks.push_back({"max_log_ratio <= log(1 + e^eps0 / n)",
                           report.measured_max_log_ratio, proof_bound});
  report.checks.push_back(
      {"1 + e^eps0 / n <= e^eps", 1.0 + std::exp(eps0) / nn, std::exp(eps)});
  FinalizeVerdict(report);
  return report;
}

absl::StatusOr<AuditReport> AuditShurrMarginal(const ShurrAuditOptions& o) {
  if (o.runs < 1 || o.bootstrap_resamples < 1) {
    return MakeError(ErrorKind::kInvalidParameter,
                     "runs and bootstrap_resamples must be positive");
  }
  double eps0 = 0.0;
  if (o.eps0_override) {
    eps0 = *o.eps0_override;
  } else {
    DPSAMPLE_ASSIGN_OR_RETURN(eps0, ShurrEps0(o.eps, o.delta, o.n));
  }
  DPSAMPLE_ASSIGN_OR_RETURN(RrParams params, RrParams::Create(eps0, o.k));
  std::vector<Element> values_a(o.n, 1);
  std::vector<Element> values_b(o.n, 1);
  if (o.pair == ShurrAuditPair::kWorstCase) values_b.back() = 2;
  DPSAMPLE_ASSIGN_OR_RETURN(KaryDataset data_a,
                            KaryDataset::Create(values_a, o.k));
  DPSAMPLE_ASSIGN_OR_RETURN(KaryDataset data_b,
                            KaryDataset::Create(values_b, o.k));

  const RandomSource root(o.seed);
  std::vector<Element> out_a(o.runs);
  std::vector<Element> out_b(o.runs);
  ParallelFor(o.runs, [&](int64_t r) {
    RandomSource rng_a = root.Derive(2 * static_cast<uint64_t>(r));
    RandomSource rng_b = root.Derive(2 * static_cast<uint64_t>(r) + 1);
    out_a[r] = (*ShuffledRandomizedResponse(data_a, params, 1, rng_a))[0];
    out_b[r] = (*ShuffledRandomizedResponse(data_b, params, 1, rng_b))[0];
  });

  const auto count = [k = o.k](const std::vector<Element>& outs) {
    std::vector<int64_t> c(k, 0);
    for (Element e : outs) ++c[e - 1];
    return c;
  };
  const double total = static_cast<double>(o.runs);
  const double beta = std::exp(o.eps);
  const double estimate =
      SymmetricHockeyStick(count(out_a), count(out_b), total, beta);

  RandomSource boot = root.Derive(~uint64_t{0});
  std::vector<double> replicates(o.bootstrap_resamples);
  for (int b = 0; b < o.bootstrap_resamples; ++b) {
    std::vector<int64_t> ca(o.k, 0);
    std::vector<int64_t> cb(o.k, 0);
    for (int64_t i = 0; i < o.runs; ++i) {
      ++ca[out_a[boot.UniformInt(o.runs)] - 1];
      ++cb[out_b[boot.UniformInt(o.runs)] - 1];
    }
    replicates[b] = SymmetricHockeyStick(ca, cb, total, beta);
  }
  const double halfwidth = 0.5 * (SortedQuantile(replicates, 0.975) -
                                  SortedQuantile(replicates, 0.025));

  // Exact first-output laws for comparison.
  std::vector<double> exact_a(o.k);
  std::vector<double> exact_b(o.k);
  const double nn = static_cast<double>(o.n);
  for (int y = 0; y < o.k; ++y) {
    const double ca = (y == 0) ? nn : 0.0;
    const double cb = static_cast<double>(
        std::count(values_b.begin(), values_b.end(), y + 1));
    exact_a[y] =
        (ca * params.KeepProbability() + (nn - ca) * params.FlipProbability()) /
        nn;
    exact_b[y] =
        (cb * params.KeepProbability() + (nn - cb) * params.FlipProbability()) /
        nn;
  }
  double exact_fwd = 0.0;
  double exact_bwd = 0.0;
  double max_log = 0.0;
  for (int y = 0; y < o.k; ++y) {
    exact_fwd += std::max(0.0, exact_a[y] - beta * exact_b[y]);
    exact_bwd += std::max(0.0, exact_b[y] - beta * exact_a[y]);
    max_log = std::max(max_log,
                       std::fabs(std::log(exact_a[y]) - std::log(exact_b[y])));
  }

  AuditReport report;
  report.mechanism = "shurr";
  report.advisory = true;
  report.claimed_epsilon = o.eps;
  report.claimed_delta = o.delta;
  report.seed = o.seed;
  report.probe_count = 2 * o.runs;
  report.measured_delta = estimate;
  report.measured_max_log_ratio = max_log;
  report.parameters = {{"k", o.k},
                       {"n", nn},
                       {"eps", o.eps},
                       {"delta", o.delta},
                       {"eps0", eps0},
                       {"runs", total},
                       {"halfwidth", halfwidth}};
  report.checks.push_back({"estimated first-output delta <= delta + halfwidth",
                           estimate, o.delta + halfwidth, true, false});
  report.checks.push_back({"exact first-output delta <= delta",
                           std::max(exact_fwd, exact_bwd), o.delta, true,
                           false});
  report.witness = {o.pair == ShurrAuditPair::kWorstCase
                        ? "A = all ones, B = A with last record set to 2"
                        : "A = B = all ones",
                    ToDoubles(values_a),
                    ToDoubles(values_b),
                    {}};
  FinalizeVerdict(report);
  return report;
}

absl::StatusOr<AuditReport> AuditElapMechanism(const ElapAuditOptions& o) {
  if (o.dim < 1 || o.rows < 1 || o.probes < 2) {
    return MakeError(ErrorKind::kInvalidParameter,
                     "need dim >= 1, rows >= 1 and probes >= 2");
  }
  DPSAMPLE_ASSIGN_OR_RETURN(
      ElapMechanismParams mech,
      ElapMechanismParams::Create(o.bound, o.eps, o.sensitivity_multiplier));
  const double b = mech.scale();
  DPSAMPLE_ASSIGN_OR_RETURN(ElapParams noise, ElapParams::Create(o.dim, b));

  RandomSource rng(o.seed);
  std::vector<double> rows_a;
  for (int64_t i = 0; i < o.rows; ++i) {
    const std::vector<double> row = RandomInBall(o.dim, o.bound, rng);
    rows_a.insert(rows_a.end(), row.begin(), row.end());
  }
  std::vector<double> rows_b = rows_a;
  const auto set_first_rows = [&](double scale) {
    const std::vector<double> u = RandomUnitVector(o.dim, rng);
    for (int a = 0; a < o.dim; ++a) {
      rows_a[a] = scale * u[a];
      rows_b[a] = -scale * u[a];
    }
  };
  std::string description;
  switch (o.pair) {
    case ElapAuditPair::kRandom: {
      const std::vector<double> row = RandomInBall(o.dim, o.bound, rng);
      std::copy(row.begin(), row.end(), rows_b.begin());
      description = "random neighbors; first row replaced";
      break;
    }
    case ElapAuditPair::kIdentical:
      description = "identical datasets";
      break;
    case ElapAuditPair::kUnit:
      set_first_rows(0.5 * o.bound);
      description = "first rows +-(B/2)u, |S - S'| = B";
      break;
    case ElapAuditPair::kAdversarial:
      set_first_rows(o.bound);
      description = "first rows +-B u, |S - S'| = 2B";
      break;
  }
  DPSAMPLE_ASSIGN_OR_RETURN(VectorDataset data_a,
                            VectorDataset::FromFlat(rows_a, o.dim));
  DPSAMPLE_ASSIGN_OR_RETURN(VectorDataset data_b,
                            VectorDataset::FromFlat(rows_b, o.dim));
  const std::vector<double> sum_a = RowSum(data_a);
  const std::vector<double> sum_b = RowSum(data_b);
  const double gap = Distance(sum_a, sum_b);

  std::vector<double> direction(o.dim);
  if (gap > 0.0) {
    for (int a = 0; a < o.dim; ++a) direction[a] = (sum_b[a] - sum_a[a]) / gap;
  } else {
    direction = RandomUnitVector(o.dim, rng);
  }

  MaxTracker worst;
  std::vector<double> worst_point;
  std::vector<double> y(o.dim);
  const int64_t from_law = o.probes / 2;
  for (int64_t i = 0; i < o.probes; ++i) {
    if (i < from_law) {
      ElapSampleInto(noise, rng, y);
      for (int a = 0; a < o.dim; ++a) y[a] += sum_a[a];
    } else {
      const double t = -3.0 * b + rng.Uniform() * (gap + 6.0 * b);
      for (int a = 0; a < o.dim; ++a) y[a] = sum_a[a] + t * direction[a];
    }
    const double ratio = std::fabs(Distance(y, sum_b) - Distance(y, sum_a)) / b;
    if (worst.Offer(ratio)) worst_point = y;
  }

  AuditReport report;
  report.mechanism = "elap";
  report.claimed_epsilon = o.eps;
  report.seed = o.seed;
  report.probe_count = o.probes;
  report.measured_max_log_ratio = worst.value;
  report.parameters = {{"d", o.dim},
                       {"B", o.bound},
                       {"eps", o.eps},
                       {"b", b},
                       {"multiplier", o.sensitivity_multiplier},
                       {"sum_gap", gap}};
  report.checks.push_back({"max_log_ratio <= eps |S - S'| / (multiplier B)",
                           worst.value, gap / b, true, true});
  report.checks.push_back(
      {"max_log_ratio <= eps", worst.value, o.eps, true, false});
  report.witness = {description, sum_a, sum_b, worst_point};
  FinalizeVerdict(report);
  return report;
}

absl::StatusOr<AuditReport> AuditZcdpGaussian(
    const ZcdpParams& params, double eps, const std::vector<double>& orders) {
  if (!(params.sigma2 > 0.0)) {
    return MakeError(ErrorKind::kInvalidParameter, "sigma2 must be positive");
  }
  if (!(eps > 0.0)) {
    return MakeError(ErrorKind::kInvalidParameter, "eps must be positive");
  }
  if (orders.empty()) {
    return MakeError(ErrorKind::kInvalidOrder, "no Renyi orders given");
  }
  const double sensitivity = params.Sensitivity();
  const double sigma = std::sqrt(params.sigma2);
  AuditReport report;
  report.mechanism = params.variant == ZcdpVariant::kKnownCov
                         ? "zcdp_known_cov"
                         : "zcdp_bounded_cov";
  report.claimed_epsilon = eps;
  report.claimed_rho = eps * eps / 2.0;
  report.measured_max_log_ratio = sensitivity / sigma;
  report.parameters = {{"d", params.dim},
                       {"B", params.clip_bound},
                       {"sigma2", params.sigma2},
                       {"n", static_cast<double>(params.n)},
                       {"sensitivity", sensitivity}};
  if (params.variant == ZcdpVariant::kBoundedCov) {
    report.parameters["n1"] = static_cast<double>(params.n1);
    report.parameters["n2"] = static_cast<double>(params.n2);
  }
  for (double order : orders) {
    if (!(order > 1.0) || std::isinf(order)) {
      return MakeError(ErrorKind::kInvalidOrder,
                       absl::StrCat("Renyi order must be > 1, got ", order));
    }
    ++report.probe_count;
    report.checks.push_back(
        {absl::StrCat("D_", order, " <= ", order, " eps^2 / 2"),
         GaussianMechRenyi(sensitivity, sigma, order),
         order * eps * eps / 2.0});
  }
  report.witness = {"worst-case neighbor shift", {0.0}, {sensitivity}, {}};
  FinalizeVerdict(report);
  return report;
}

}  // namespace dpsample
