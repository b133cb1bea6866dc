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

#include "cli/cli.h"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "dpsample/audit.h"
#include "dpsample/dataset_io.h"
#include "dpsample/divergences.h"
#include "dpsample/elap.h"
#include "dpsample/gamma.h"
#include "dpsample/gaussian.h"
#include "dpsample/kary.h"
#include "dpsample/multisampling.h"
#include "dpsample/random.h"
#include "dpsample/samplers.h"
#include "dpsample/status.h"
#include "dpsample/version.h"

namespace dpsample::cli {
namespace {

using nlohmann::json;

// Typed read access to ExperimentConfig::params.
class Params {
 public:
  explicit Params(const json& j) : j_(j) {}

  bool Has(const std::string& key) const {
    return j_.contains(key) && !j_.at(key).is_null();
  }

  absl::StatusOr<double> Double(const std::string& key) const {
    if (!Has(key)) return Missing(key);
    const json& v = j_.at(key);
    if (!v.is_number()) return WrongType(key, "a number");
    return v.get<double>();
  }
  absl::StatusOr<double> Double(const std::string& key, double def) const {
    if (!Has(key)) return def;
    return Double(key);
  }

  absl::StatusOr<int64_t> Int(const std::string& key) const {
    if (!Has(key)) return Missing(key);
    const json& v = j_.at(key);
    if (!v.is_number_integer()) return WrongType(key, "an integer");
    return v.get<int64_t>();
  }
  absl::StatusOr<int64_t> Int(const std::string& key, int64_t def) const {
    if (!Has(key)) return def;
    return Int(key);
  }

  absl::StatusOr<std::string> String(const std::string& key) const {
    if (!Has(key)) return Missing(key);
    const json& v = j_.at(key);
    if (!v.is_string()) return WrongType(key, "a string");
    return v.get<std::string>();
  }
  absl::StatusOr<std::string> String(const std::string& key,
                                     const std::string& def) const {
    if (!Has(key)) return def;
    return String(key);
  }

  bool Flag(const std::string& key) const {
    return Has(key) && j_.at(key).is_boolean() && j_.at(key).get<bool>();
  }

 private:
  static absl::Status Missing(const std::string& key) {
    return MakeError(ErrorKind::kConfigInvalid,
                     absl::StrCat("missing required parameter --", key));
  }
  static absl::Status WrongType(const std::string& key, const char* what) {
    return MakeError(ErrorKind::kConfigInvalid,
                     absl::StrCat("parameter --", key, " must be ", what));
  }

  const json& j_;
};

absl::StatusOr<std::vector<double>> ParseDoubleList(const std::string& text) {
  std::vector<double> out;
  for (absl::string_view part : absl::StrSplit(text, ',')) {
    const std::string field(part);
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size()) {
      return MakeError(ErrorKind::kConfigInvalid,
                       absl::StrCat("'", field, "' is not a number"));
    }
    out.push_back(v);
  }
  return out;
}

// Accumulates what a command produced.
struct Run {
  const ExperimentConfig& config;
  Params params;
  json derived = json::object();
  json outputs = json::object();
  // Primary output: CSV text for sample commands, JSON for the rest.
  std::string primary;
  bool primary_is_json = false;
  int exit_code = kExitOk;

  explicit Run(const ExperimentConfig& c) : config(c), params(c.params) {}

  absl::StatusOr<RandomSource> Rng() const {
    if (!config.seed.has_value()) {
      return MakeError(
          ErrorKind::kConfigInvalid,
          absl::StrCat(config.command, " is randomized and requires --seed"));
    }
    return RandomSource(*config.seed);
  }
};

json ReportJson(const ComplexityReport& r) {
  json j;
  j["n_required"] = r.n_required;
  j["formula"] = r.formula_name;
  j["inputs"] = r.inputs;
  j["derived"] = r.derived;
  return j;
}

std::string ElementsCsv(const std::vector<Element>& values) {
  return FormatKaryCsv(values);
}

std::string VectorsCsv(const std::vector<std::vector<double>>& rows, int dim) {
  std::vector<double> flat;
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return FormatVectorCsv(flat, dim);
}

// ---- sample-kary ----------------------------------------------------------

absl::Status SampleKary(Run& run) {
  const Params& p = run.params;
  DPSAMPLE_ASSIGN_OR_RETURN(std::string mode, p.String("mode", "sub"));
  DPSAMPLE_ASSIGN_OR_RETURN(std::string in, p.String("in"));
  std::optional<int> k;
  if (p.Has("k")) {
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t kk, p.Int("k"));
    k = static_cast<int>(kk);
  }
  DPSAMPLE_ASSIGN_OR_RETURN(KaryDataset data, ReadKaryCsv(in, k));
  DPSAMPLE_ASSIGN_OR_RETURN(double eps, p.Double("eps"));
  DPSAMPLE_ASSIGN_OR_RETURN(RandomSource rng, run.Rng());
  run.derived["k"] = data.k();
  run.derived["n"] = data.size();
  std::vector<Element> outputs;

  if (mode == "sub") {
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t count, p.Int("count", 1));
    DPSAMPLE_ASSIGN_OR_RETURN(double eps0, SubrrEps0(eps, data.size()));
    run.derived["eps0"] = eps0;
    for (int64_t r = 0; r < count; ++r) {
      RandomSource call_rng = rng.Derive(static_cast<uint64_t>(r));
      DPSAMPLE_ASSIGN_OR_RETURN(Element y, SubrrSample(data, eps, call_rng));
      outputs.push_back(y);
    }
  } else if (mode == "shuffle") {
    DPSAMPLE_ASSIGN_OR_RETURN(double delta, p.Double("delta"));
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t m, p.Int("m"));
    DPSAMPLE_ASSIGN_OR_RETURN(ShurrConfig config,
                              ShurrConfig::Create(eps, delta, m, data.size()));
    run.derived["eps0"] = config.eps0;
    run.derived["f"] = config.f_value;
    DPSAMPLE_ASSIGN_OR_RETURN(outputs, ShurrRun(data, eps, delta, m, rng));
  } else if (mode == "repeat" || mode == "both" || mode == "precision") {
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t m, p.Int("m"));
    DPSAMPLE_ASSIGN_OR_RETURN(double alpha, p.Double("alpha"));
    if (mode == "precision") {
      DPSAMPLE_ASSIGN_OR_RETURN(double delta, p.Double("delta"));
      DPSAMPLE_ASSIGN_OR_RETURN(KaryWeakSampler weak,
                                MakeShurrSampler(data.k(), eps, delta));
      DPSAMPLE_ASSIGN_OR_RETURN(int64_t needed,
                                StrongViaPrecisionComplexity(weak, m, alpha));
      run.derived["alpha_per_output"] = alpha / static_cast<double>(m);
      run.derived["n_required"] = needed;
      DPSAMPLE_ASSIGN_OR_RETURN(
          double eps0, ShurrEps0(eps, delta, std::min(needed, data.size())));
      run.derived["eps0"] = eps0;
      DPSAMPLE_ASSIGN_OR_RETURN(outputs,
                                StrongViaPrecision(weak, m, alpha, data, rng));
    } else {
      DPSAMPLE_ASSIGN_OR_RETURN(KarySingleSampler single,
                                MakeSubrrSampler(data.k(), eps));
      const double call_alpha =
          mode == "both" ? alpha / static_cast<double>(m) : alpha;
      DPSAMPLE_ASSIGN_OR_RETURN(int64_t block, single.n_per_call(call_alpha));
      DPSAMPLE_ASSIGN_OR_RETURN(double eps0, SubrrEps0(eps, block));
      run.derived["alpha_per_call"] = call_alpha;
      run.derived["block_size"] = block;
      run.derived["n_required"] = m * block;
      run.derived["eps0"] = eps0;
      if (mode == "both") {
        DPSAMPLE_ASSIGN_OR_RETURN(outputs,
                                  StrongViaBoth(single, m, alpha, data, rng));
      } else {
        DPSAMPLE_ASSIGN_OR_RETURN(
            outputs, WeakViaRepetition(single, m, alpha, data, rng));
      }
    }
  } else {
    return MakeError(ErrorKind::kConfigInvalid,
                     absl::StrCat("unknown --mode '", mode,
                                  "' (sub|shuffle|repeat|precision|both)"));
  }
  run.outputs["count"] = outputs.size();
  run.primary = ElementsCsv(outputs);
  return absl::OkStatus();
}

// ---- sample-gaussian ------------------------------------------------------

absl::Status SampleGaussian(Run& run) {
  const Params& p = run.params;
  DPSAMPLE_ASSIGN_OR_RETURN(std::string variant, p.String("variant"));
  DPSAMPLE_ASSIGN_OR_RETURN(std::string mode, p.String("mode", "single"));
  DPSAMPLE_ASSIGN_OR_RETURN(std::string in, p.String("in"));
  DPSAMPLE_ASSIGN_OR_RETURN(VectorDataset data, ReadVectorCsv(in));
  if (p.Has("dim")) {
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t dim, p.Int("dim"));
    if (dim != data.dim()) {
      return MakeError(ErrorKind::kDimensionMismatch,
                       absl::StrCat("--dim ", dim, " but data has ", data.dim(),
                                    " columns"));
    }
  }
  GaussianSamplerOptions options;
  options.dim = data.dim();
  DPSAMPLE_ASSIGN_OR_RETURN(options.mean_bound, p.Double("R"));
  DPSAMPLE_ASSIGN_OR_RETURN(options.eps, p.Double("eps"));
  DPSAMPLE_ASSIGN_OR_RETURN(options.clip_constant,
                            p.Double("clip_constant", 2.0));
  DPSAMPLE_ASSIGN_OR_RETURN(options.complexity_constant,
                            p.Double("complexity_constant", 1.0));
  DPSAMPLE_ASSIGN_OR_RETURN(options.sensitivity_multiplier,
                            p.Double("multiplier", 1.0));
  DPSAMPLE_ASSIGN_OR_RETURN(double alpha, p.Double("alpha"));
  DPSAMPLE_ASSIGN_OR_RETURN(RandomSource rng, run.Rng());

  absl::StatusOr<GaussianSingleSampler> made;
  if (variant == "pure") {
    made = MakePureGaussianSampler(options);
  } else if (variant == "zcdp-known") {
    made = MakeZcdpKnownCovSampler(options);
  } else if (variant == "zcdp-bounded") {
    made = MakeZcdpBoundedCovSampler(options);
  } else {
    return MakeError(ErrorKind::kConfigInvalid,
                     absl::StrCat("unknown --variant '", variant,
                                  "' (pure|zcdp-known|zcdp-bounded)"));
  }
  DPSAMPLE_RETURN_IF_ERROR(made.status());
  const GaussianSingleSampler& single = *made;

  int64_t m = 1;
  if (mode != "single") {
    DPSAMPLE_ASSIGN_OR_RETURN(m, p.Int("m"));
  }
  const double call_alpha = (mode == "precision" || mode == "both")
                                ? alpha / static_cast<double>(m)
                                : alpha;
  run.derived["alpha_per_call"] = call_alpha;
  run.derived["n"] = data.size();
  run.derived["d"] = data.dim();
  if (variant == "pure") {
    DPSAMPLE_ASSIGN_OR_RETURN(
        PureGaussianSamplerParams params,
        PureGaussianSamplerParams::Create(
            options.mean_bound, options.dim, call_alpha, options.eps,
            options.clip_constant, options.sensitivity_multiplier));
    run.derived["B"] = params.clip_bound();
    run.derived["b"] =
        params.sensitivity_multiplier() * params.clip_bound() / params.eps();
  } else if (variant == "zcdp-known") {
    DPSAMPLE_ASSIGN_OR_RETURN(
        double bound,
        ZcdpKnownCovClipBound(options.mean_bound, options.dim, call_alpha));
    run.derived["B"] = bound;
  } else {
    DPSAMPLE_ASSIGN_OR_RETURN(
        double bound,
        ZcdpBoundedCovClipBound(options.mean_bound, options.dim, call_alpha));
    run.derived["B"] = bound;
    run.derived["sigma2"] = ZcdpBoundedCovSigma2(options.dim, call_alpha);
  }
  if (auto n_call = single.n_per_call(call_alpha); n_call.ok()) {
    run.derived["n_per_call"] = *n_call;
  }

  std::vector<std::vector<double>> outputs;
  if (mode == "single") {
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t count, p.Int("count", 1));
    for (int64_t r = 0; r < count; ++r) {
      RandomSource call_rng = rng.Derive(static_cast<uint64_t>(r));
      DPSAMPLE_ASSIGN_OR_RETURN(std::vector<double> y,
                                single.sample(data, alpha, call_rng));
      outputs.push_back(std::move(y));
    }
    if (variant == "zcdp-known") {
      const double nn = static_cast<double>(data.size());
      run.derived["sigma2"] = (nn - 1.0) / nn;
    }
  } else if (mode == "repeat") {
    DPSAMPLE_ASSIGN_OR_RETURN(outputs,
                              WeakViaRepetition(single, m, alpha, data, rng));
  } else if (mode == "precision" || mode == "both") {
    DPSAMPLE_ASSIGN_OR_RETURN(outputs,
                              StrongViaBoth(single, m, alpha, data, rng));
  } else {
    return MakeError(ErrorKind::kConfigInvalid,
                     absl::StrCat("unknown --mode '", mode,
                                  "' (single|repeat|precision|both)"));
  }
  run.outputs["count"] = outputs.size();
  run.primary = VectorsCsv(outputs, data.dim());
  return absl::OkStatus();
}

// ---- elap -----------------------------------------------------------------

absl::Status Elap(Run& run) {
  const Params& p = run.params;
  DPSAMPLE_ASSIGN_OR_RETURN(int64_t dim, p.Int("dim"));
  DPSAMPLE_ASSIGN_OR_RETURN(double b, p.Double("b"));
  DPSAMPLE_ASSIGN_OR_RETURN(ElapParams params,
                            ElapParams::Create(static_cast<int>(dim), b));
  if (p.Flag("tail")) {
    DPSAMPLE_ASSIGN_OR_RETURN(double alpha, p.Double("alpha"));
    DPSAMPLE_ASSIGN_OR_RETURN(double radius, ElapTailRadius(params, alpha));
    const GammaParams law = params.NormLaw();
    DPSAMPLE_ASSIGN_OR_RETURN(double bound, GammaTailBound(law, radius));
    json j;
    j["d"] = dim;
    j["b"] = b;
    j["alpha"] = alpha;
    j["tail_radius"] = radius;
    j["exact_tail"] = GammaExactTail(law, radius);
    j["gamma_tail_bound"] = bound;
    run.derived["tail_radius"] = radius;
    run.primary = j.dump(2) + "\n";
    run.primary_is_json = true;
    return absl::OkStatus();
  }
  DPSAMPLE_ASSIGN_OR_RETURN(int64_t count, p.Int("count", 1));
  DPSAMPLE_ASSIGN_OR_RETURN(RandomSource rng, run.Rng());
  std::vector<double> flat(static_cast<size_t>(count * dim));
  for (int64_t i = 0; i < count; ++i) {
    ElapSampleInto(params, rng, std::span<double>(flat).subspan(i * dim, dim));
  }
  run.derived["log_normalizer"] = params.LogNormalizer();
  run.outputs["count"] = count;
  run.primary = FormatVectorCsv(flat, static_cast<int>(dim));
  return absl::OkStatus();
}

// ---- complexity -----------------------------------------------------------

absl::StatusOr<GaussianSingleSampler> GaussianSamplerFor(
    const std::string& variant, const GaussianSamplerOptions& options) {
  if (variant == "pure") return MakePureGaussianSampler(options);
  if (variant == "zcdp-known") return MakeZcdpKnownCovSampler(options);
  if (variant == "zcdp-bounded") return MakeZcdpBoundedCovSampler(options);
  return MakeError(ErrorKind::kConfigInvalid,
                   absl::StrCat("unknown --variant '", variant,
                                "' (pure|zcdp-known|zcdp-bounded)"));
}

absl::StatusOr<ComplexityReport> KaryComplexity(const Params& p,
                                                const std::string& task) {
  DPSAMPLE_ASSIGN_OR_RETURN(int64_t k, p.Int("k"));
  DPSAMPLE_ASSIGN_OR_RETURN(double alpha, p.Double("alpha"));
  DPSAMPLE_ASSIGN_OR_RETURN(double eps, p.Double("eps"));
  if (task == "single") {
    return SubrrSampleComplexity(static_cast<int>(k), alpha, eps);
  }
  DPSAMPLE_ASSIGN_OR_RETURN(int64_t m, p.Int("m"));
  DPSAMPLE_ASSIGN_OR_RETURN(std::string method, p.String("method", "shurr"));
  if (method == "shurr") {
    DPSAMPLE_ASSIGN_OR_RETURN(double delta, p.Double("delta"));
    if (task == "weak") {
      return ShurrWeakComplexity(static_cast<int>(k), alpha, eps, delta, m);
    }
    if (task == "strong") {
      return ShurrStrongComplexity(static_cast<int>(k), alpha, eps, delta, m);
    }
  } else if (method == "repeat" || method == "both") {
    DPSAMPLE_ASSIGN_OR_RETURN(KarySingleSampler single,
                              MakeSubrrSampler(static_cast<int>(k), eps));
    ComplexityReport report;
    report.inputs = {{"k", static_cast<double>(k)},
                     {"alpha", alpha},
                     {"eps", eps},
                     {"m", static_cast<double>(m)}};
    if (task == "weak") {
      report.formula_name = "repeat(subrr_single)";
      DPSAMPLE_ASSIGN_OR_RETURN(int64_t n, single.n_per_call(alpha));
      report.derived["n_per_call"] = static_cast<double>(n);
      report.n_required = m * n;
      return report;
    }
    if (task == "strong") {
      report.formula_name = "both(subrr_single)";
      DPSAMPLE_ASSIGN_OR_RETURN(report.n_required,
                                StrongViaBothComplexity(single, m, alpha));
      report.derived["alpha_per_output"] = alpha / static_cast<double>(m);
      return report;
    }
  } else {
    return MakeError(
        ErrorKind::kConfigInvalid,
        absl::StrCat("unknown --method '", method, "' (shurr|repeat|both)"));
  }
  return MakeError(
      ErrorKind::kConfigInvalid,
      absl::StrCat("unknown --task '", task, "' (single|weak|strong)"));
}

absl::StatusOr<ComplexityReport> GaussianComplexity(const Params& p,
                                                    const std::string& task) {
  DPSAMPLE_ASSIGN_OR_RETURN(std::string variant, p.String("variant"));
  GaussianSamplerOptions o;
  DPSAMPLE_ASSIGN_OR_RETURN(int64_t dim, p.Int("dim"));
  o.dim = static_cast<int>(dim);
  DPSAMPLE_ASSIGN_OR_RETURN(o.mean_bound, p.Double("R"));
  DPSAMPLE_ASSIGN_OR_RETURN(o.eps, p.Double("eps"));
  DPSAMPLE_ASSIGN_OR_RETURN(o.clip_constant, p.Double("clip_constant", 2.0));
  DPSAMPLE_ASSIGN_OR_RETURN(o.complexity_constant,
                            p.Double("complexity_constant", 1.0));
  DPSAMPLE_ASSIGN_OR_RETURN(double alpha, p.Double("alpha"));
  if (task == "single") {
    if (variant == "pure") {
      return PureSampleComplexity(o.dim, o.mean_bound, alpha, o.eps,
                                  o.complexity_constant, o.clip_constant);
    }
    if (variant == "zcdp-known") {
      return ZcdpKnownCovComplexity(o.dim, o.mean_bound, alpha, o.eps);
    }
    if (variant == "zcdp-bounded") {
      return ZcdpBoundedCovComplexity(o.dim, o.mean_bound, alpha, o.eps);
    }
  }
  DPSAMPLE_ASSIGN_OR_RETURN(GaussianSingleSampler single,
                            GaussianSamplerFor(variant, o));
  if (task != "weak" && task != "strong") {
    return MakeError(
        ErrorKind::kConfigInvalid,
        absl::StrCat("unknown --task '", task, "' (single|weak|strong)"));
  }
  DPSAMPLE_ASSIGN_OR_RETURN(int64_t m, p.Int("m"));
  ComplexityReport report;
  report.inputs = {{"d", static_cast<double>(o.dim)},
                   {"R", o.mean_bound},
                   {"alpha", alpha},
                   {"eps", o.eps},
                   {"m", static_cast<double>(m)}};
  if (task == "weak") {
    report.formula_name = absl::StrCat("repeat(", single.name, ")");
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t n, single.n_per_call(alpha));
    report.derived["n_per_call"] = static_cast<double>(n);
    report.n_required = m * n;
  } else {
    report.formula_name = absl::StrCat("both(", single.name, ")");
    DPSAMPLE_ASSIGN_OR_RETURN(report.n_required,
                              StrongViaBothComplexity(single, m, alpha));
    report.derived["alpha_per_output"] = alpha / static_cast<double>(m);
  }
  return report;
}

absl::Status Complexity(Run& run) {
  const Params& p = run.params;
  DPSAMPLE_ASSIGN_OR_RETURN(std::string family, p.String("family"));
  DPSAMPLE_ASSIGN_OR_RETURN(std::string task, p.String("task", "single"));
  absl::StatusOr<ComplexityReport> report;
  if (family == "kary") {
    report = KaryComplexity(p, task);
  } else if (family == "gaussian") {
    report = GaussianComplexity(p, task);
  } else {
    return MakeError(
        ErrorKind::kConfigInvalid,
        absl::StrCat("unknown --family '", family, "' (kary|gaussian)"));
  }
  DPSAMPLE_RETURN_IF_ERROR(report.status());
  run.derived["n_required"] = report->n_required;
  run.primary = ReportJson(*report).dump(2) + "\n";
  run.primary_is_json = true;
  return absl::OkStatus();
}

// ---- tvdist ---------------------------------------------------------------

absl::Status TvDist(Run& run) {
  const Params& p = run.params;
  json j;
  if (p.Has("p") || p.Has("q")) {
    DPSAMPLE_ASSIGN_OR_RETURN(std::string p_text, p.String("p"));
    DPSAMPLE_ASSIGN_OR_RETURN(std::string q_text, p.String("q"));
    DPSAMPLE_ASSIGN_OR_RETURN(std::vector<double> pv, ParseDoubleList(p_text));
    DPSAMPLE_ASSIGN_OR_RETURN(std::vector<double> qv, ParseDoubleList(q_text));
    DPSAMPLE_ASSIGN_OR_RETURN(CategoricalDist pd,
                              CategoricalDist::Create(std::move(pv)));
    DPSAMPLE_ASSIGN_OR_RETURN(CategoricalDist qd,
                              CategoricalDist::Create(std::move(qv)));
    DPSAMPLE_ASSIGN_OR_RETURN(double tv, TvDistance(pd, qd));
    j["tv"] = tv;
    if (p.Has("eps")) {
      DPSAMPLE_ASSIGN_OR_RETURN(double eps, p.Double("eps"));
      DPSAMPLE_ASSIGN_OR_RETURN(ClosenessResult c,
                                EpsDeltaCloseness(pd, qd, eps));
      j["eps"] = eps;
      j["hs_forward"] = c.hs_forward;
      j["hs_backward"] = c.hs_backward;
      j["delta_at_eps"] = c.delta_at_eps;
      j["tv_bound_from_closeness"] = HockeyStickToTvBound(eps, c.delta_at_eps);
    }
    if (p.Has("order")) {
      DPSAMPLE_ASSIGN_OR_RETURN(double order, p.Double("order"));
      DPSAMPLE_ASSIGN_OR_RETURN(double renyi, RenyiDivergence(pd, qd, order));
      j["order"] = order;
      // JSON cannot carry infinity.
      if (std::isinf(renyi)) {
        j["renyi"] = "inf";
      } else {
        j["renyi"] = renyi;
      }
    }
  } else {
    DPSAMPLE_ASSIGN_OR_RETURN(std::string path_p, p.String("samples_p"));
    DPSAMPLE_ASSIGN_OR_RETURN(std::string path_q, p.String("samples_q"));
    DPSAMPLE_ASSIGN_OR_RETURN(VectorDataset sp, ReadVectorCsv(path_p));
    DPSAMPLE_ASSIGN_OR_RETURN(VectorDataset sq, ReadVectorCsv(path_q));
    BinnedTvOptions options;
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t bins, p.Int("bins", 100));
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t boot, p.Int("bootstrap", 200));
    options.bins_per_axis = static_cast<int>(bins);
    options.bootstrap_resamples = static_cast<int>(boot);
    DPSAMPLE_ASSIGN_OR_RETURN(RandomSource rng, run.Rng());
    options.seed = rng.seed();
    DPSAMPLE_ASSIGN_OR_RETURN(BinnedTvEstimate est,
                              TvEstimateBinned(sp, sq, options));
    j["estimate"] = est.estimate;
    j["halfwidth"] = est.halfwidth;
    j["bins_per_axis"] = est.bins_per_axis;
    j["samples_p"] = sp.size();
    j["samples_q"] = sq.size();
  }
  run.primary = j.dump(2) + "\n";
  run.primary_is_json = true;
  return absl::OkStatus();
}

// ---- audit ----------------------------------------------------------------

absl::StatusOr<AuditReport> AuditDispatch(Run& run) {
  const Params& p = run.params;
  DPSAMPLE_ASSIGN_OR_RETURN(std::string mechanism, p.String("mechanism"));
  if (mechanism == "rr") {
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t k, p.Int("k"));
    DPSAMPLE_ASSIGN_OR_RETURN(double eps0, p.Double("eps0"));
    DPSAMPLE_ASSIGN_OR_RETURN(double claimed, p.Double("claimed", eps0));
    return AuditRrLocal(static_cast<int>(k), eps0, claimed);
  }
  if (mechanism == "subrr") {
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t k, p.Int("k"));
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t n, p.Int("n"));
    DPSAMPLE_ASSIGN_OR_RETURN(double eps, p.Double("eps"));
    DPSAMPLE_ASSIGN_OR_RETURN(double claimed, p.Double("claimed", eps));
    return AuditSubrrPure(static_cast<int>(k), n, eps, claimed);
  }
  if (mechanism == "shurr") {
    ShurrAuditOptions o;
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t k, p.Int("k"));
    o.k = static_cast<int>(k);
    DPSAMPLE_ASSIGN_OR_RETURN(o.n, p.Int("n"));
    DPSAMPLE_ASSIGN_OR_RETURN(o.eps, p.Double("eps"));
    DPSAMPLE_ASSIGN_OR_RETURN(o.delta, p.Double("delta"));
    DPSAMPLE_ASSIGN_OR_RETURN(o.runs, p.Int("runs", 10000));
    DPSAMPLE_ASSIGN_OR_RETURN(RandomSource rng, run.Rng());
    o.seed = rng.seed();
    if (p.Has("eps0")) {
      DPSAMPLE_ASSIGN_OR_RETURN(double eps0, p.Double("eps0"));
      o.eps0_override = eps0;
    }
    DPSAMPLE_ASSIGN_OR_RETURN(std::string pair, p.String("pair", "worst"));
    if (pair == "identical") {
      o.pair = ShurrAuditPair::kIdentical;
    } else if (pair != "worst") {
      return MakeError(ErrorKind::kConfigInvalid,
                       absl::StrCat("unknown --pair '", pair,
                                    "' for shurr (worst|identical)"));
    }
    return AuditShurrMarginal(o);
  }
  if (mechanism == "elap") {
    ElapAuditOptions o;
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t dim, p.Int("dim"));
    o.dim = static_cast<int>(dim);
    DPSAMPLE_ASSIGN_OR_RETURN(o.bound, p.Double("B"));
    DPSAMPLE_ASSIGN_OR_RETURN(o.eps, p.Double("eps"));
    DPSAMPLE_ASSIGN_OR_RETURN(o.probes, p.Int("probes", 10000));
    DPSAMPLE_ASSIGN_OR_RETURN(o.sensitivity_multiplier,
                              p.Double("multiplier", 1.0));
    DPSAMPLE_ASSIGN_OR_RETURN(o.rows, p.Int("rows", 5));
    DPSAMPLE_ASSIGN_OR_RETURN(RandomSource rng, run.Rng());
    o.seed = rng.seed();
    DPSAMPLE_ASSIGN_OR_RETURN(std::string pair, p.String("pair", "random"));
    static const std::map<std::string, ElapAuditPair> kPairs = {
        {"random", ElapAuditPair::kRandom},
        {"identical", ElapAuditPair::kIdentical},
        {"unit", ElapAuditPair::kUnit},
        {"adversarial", ElapAuditPair::kAdversarial}};
    const auto it = kPairs.find(pair);
    if (it == kPairs.end()) {
      return MakeError(ErrorKind::kConfigInvalid,
                       absl::StrCat("unknown --pair '", pair,
                                    "' for elap "
                                    "(random|identical|unit|adversarial)"));
    }
    o.pair = it->second;
    return AuditElapMechanism(o);
  }
  if (mechanism == "zcdp") {
    DPSAMPLE_ASSIGN_OR_RETURN(std::string variant,
                              p.String("variant", "zcdp-known"));
    DPSAMPLE_ASSIGN_OR_RETURN(int64_t dim, p.Int("dim"));
    DPSAMPLE_ASSIGN_OR_RETURN(double r, p.Double("R"));
    DPSAMPLE_ASSIGN_OR_RETURN(double alpha, p.Double("alpha"));
    DPSAMPLE_ASSIGN_OR_RETURN(double eps, p.Double("eps"));
    std::vector<double> orders = {1.5, 2.0, 4.0, 16.0};
    if (p.Has("orders")) {
      DPSAMPLE_ASSIGN_OR_RETURN(std::string text, p.String("orders"));
      DPSAMPLE_ASSIGN_OR_RETURN(orders, ParseDoubleList(text));
    }
    ZcdpParams params;
    if (variant == "zcdp-known") {
      int64_t n = 0;
      if (p.Has("n")) {
        DPSAMPLE_ASSIGN_OR_RETURN(n, p.Int("n"));
      } else {
        DPSAMPLE_ASSIGN_OR_RETURN(
            ComplexityReport c,
            ZcdpKnownCovComplexity(static_cast<int>(dim), r, alpha, eps));
        n = c.n_required;
      }
      DPSAMPLE_ASSIGN_OR_RETURN(
          params, ZcdpKnownCovParams(static_cast<int>(dim), r, eps, alpha, n));
    } else if (variant == "zcdp-bounded") {
      int64_t n = 0;
      if (p.Has("n")) {
        DPSAMPLE_ASSIGN_OR_RETURN(n, p.Int("n"));
      } else {
        DPSAMPLE_ASSIGN_OR_RETURN(
            ComplexityReport c,
            ZcdpBoundedCovComplexity(static_cast<int>(dim), r, alpha, eps));
        n = (c.n_required + 2) / 3 * 3;
      }
      if (n < 3 || n % 3 != 0) {
        return MakeError(
            ErrorKind::kBadSplit,
            absl::StrCat("--n ", n, " must be a positive multiple of 3"));
      }
      params.variant = ZcdpVariant::kBoundedCov;
      params.dim = static_cast<int>(dim);
      DPSAMPLE_ASSIGN_OR_RETURN(
          params.clip_bound,
          ZcdpBoundedCovClipBound(r, static_cast<int>(dim), alpha));
      params.sigma2 = ZcdpBoundedCovSigma2(static_cast<int>(dim), alpha);
      params.n = n;
      params.n1 = n / 3;
      params.n2 = n / 3;
    } else {
      return MakeError(ErrorKind::kConfigInvalid,
                       absl::StrCat("unknown --variant '", variant,
                                    "' for zcdp (zcdp-known|zcdp-bounded)"));
    }
    if (p.Has("sigma2")) {
      DPSAMPLE_ASSIGN_OR_RETURN(params.sigma2, p.Double("sigma2"));
    }
    return AuditZcdpGaussian(params, eps, orders);
  }
  return MakeError(ErrorKind::kConfigInvalid,
                   absl::StrCat("unknown --mechanism '", mechanism,
                                "' (rr|subrr|shurr|elap|zcdp)"));
}

absl::Status Audit(Run& run) {
  DPSAMPLE_ASSIGN_OR_RETURN(AuditReport report, AuditDispatch(run));
  run.derived["verdict"] = std::string(VerdictName(report.verdict));
  run.derived["measured_max_log_ratio"] = report.measured_max_log_ratio;
  for (const auto& [key, value] : report.parameters) {
    run.derived[key] = value;
  }
  run.primary = AuditReportToJson(report);
  run.primary_is_json = true;
  switch (report.verdict) {
    case Verdict::kPass:
      run.exit_code = kExitOk;
      break;
    case Verdict::kFail:
      run.exit_code = kExitAuditFail;
      break;
    case Verdict::kAdvisoryFail:
      run.exit_code = kExitAdvisoryFail;
      break;
  }
  return absl::OkStatus();
}

// ---- sweep ----------------------------------------------------------------

absl::Status Sweep(Run& run) {
  const Params& p = run.params;
  json grid_json = json::object();
  if (p.Has("grid")) {
    DPSAMPLE_ASSIGN_OR_RETURN(std::string path, p.String("grid"));
    DPSAMPLE_ASSIGN_OR_RETURN(std::string text, ReadTextFile(path));
    grid_json = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (grid_json.is_discarded()) {
      return MakeError(ErrorKind::kConfigInvalid,
                       absl::StrCat("'", path, "' is not valid JSON"));
    }
  }
  for (const char* key : {"k", "alpha", "eps", "delta", "m", "d", "R"}) {
    if (!p.Has(key)) continue;
    DPSAMPLE_ASSIGN_OR_RETURN(std::string text, p.String(key));
    DPSAMPLE_ASSIGN_OR_RETURN(std::vector<double> values,
                              ParseDoubleList(text));
    json list = json::array();
    const bool integral = std::string(key) == "k" || std::string(key) == "m" ||
                          std::string(key) == "d";
    for (double v : values) {
      if (integral) {
        if (v != std::floor(v)) {
          return MakeError(ErrorKind::kConfigInvalid,
                           absl::StrCat("--", key, " takes integers"));
        }
        list.push_back(static_cast<int64_t>(v));
      } else {
        list.push_back(v);
      }
    }
    grid_json[key] = list;
  }
  for (const char* key : {"clip_constant", "complexity_constant"}) {
    if (!p.Has(key)) continue;
    DPSAMPLE_ASSIGN_OR_RETURN(grid_json[key], p.Double(key));
  }
  DPSAMPLE_ASSIGN_OR_RETURN(SweepGrid grid, ParseSweepGrid(grid_json));
  DPSAMPLE_ASSIGN_OR_RETURN(run.primary, TableSweep(grid));
  run.outputs["grid"] = grid_json;
  return absl::OkStatus();
}

const std::map<std::string, std::function<absl::Status(Run&)>>& Handlers() {
  static const auto* handlers =
      new std::map<std::string, std::function<absl::Status(Run&)>>{
          {"sample-kary", SampleKary},
          {"sample-gaussian", SampleGaussian},
          {"elap", Elap},
          {"complexity", Complexity},
          {"tvdist", TvDist},
          {"audit", Audit},
          {"sweep", Sweep},
  };
  return *handlers;
}

}  // namespace

json ExperimentConfig::ToJson() const {
  json j;
  j["command"] = command;
  j["params"] = params;
  if (seed) j["seed"] = *seed;
  return j;
}

absl::StatusOr<ExperimentConfig> ParseExperimentConfig(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    return MakeError(ErrorKind::kConfigInvalid, "config is not a JSON object");
  }
  if (j.contains("config")) j = j.at("config");
  ExperimentConfig config;
  if (!j.contains("command") || !j.at("command").is_string()) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "config needs a string 'command'");
  }
  config.command = j.at("command").get<std::string>();
  if (j.contains("params")) {
    if (!j.at("params").is_object()) {
      return MakeError(ErrorKind::kConfigInvalid, "'params' must be an object");
    }
    config.params = j.at("params");
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) {
      return MakeError(ErrorKind::kConfigInvalid,
                       "'seed' must be a non-negative integer");
    }
    config.seed = j.at("seed").get<uint64_t>();
  }
  return config;
}

int Execute(const ExperimentConfig& config, std::ostream& out,
            std::ostream& err) {
  const auto it = Handlers().find(config.command);
  if (it == Handlers().end()) {
    err << "error: unknown command '" << config.command << "'\n";
    return kExitError;
  }
  const auto start = std::chrono::steady_clock::now();
  Run run(config);
  if (absl::Status status = it->second(run); !status.ok()) {
    err << "error: " << status.message() << "\n";
    return kExitError;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  const Params& p = run.params;
  const bool has_out = p.Has("out");
  if (has_out) {
    const std::string path = *p.String("out", "");
    if (absl::Status s = WriteTextFile(path, run.primary); !s.ok()) {
      err << "error: " << s.message() << "\n";
      return kExitError;
    }
    run.outputs["path"] = path;
  }

  json report;
  report["tool"] = "dpsample";
  report["version"] = LibraryVersion();
  report["config"] = config.ToJson();
  report["derived"] = run.derived;
  report["outputs"] = run.outputs;
  report["wall_clock_seconds"] = seconds;
  const std::string report_text = report.dump(2) + "\n";

  if (run.primary_is_json || !has_out) out << run.primary;
  if (p.Has("json")) {
    const std::string path = *p.String("json", "");
    if (absl::Status s = WriteTextFile(path, report_text); !s.ok()) {
      err << "error: " << s.message() << "\n";
      return kExitError;
    }
  } else if (has_out && !run.primary_is_json) {
    out << report_text;
  }
  return run.exit_code;
}

}  // namespace dpsample::cli
