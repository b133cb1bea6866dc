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

#include <charconv>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/cli.h"
#include "dpsample/dataset_io.h"
#include "dpsample/version.h"

namespace dpsample::cli {
namespace {

using nlohmann::json;

enum class FlagType { kDouble, kInt, kString, kBool };

struct FlagSpec {
  const char* name;
  FlagType type;
  const char* help;
};

struct CommandSpec {
  const char* name;
  const char* help;
  std::vector<FlagSpec> flags;
};

constexpr FlagType D = FlagType::kDouble;
constexpr FlagType I = FlagType::kInt;
constexpr FlagType S = FlagType::kString;
constexpr FlagType B = FlagType::kBool;

const std::vector<CommandSpec>& Commands() {
  static const auto* commands = new std::vector<CommandSpec>{
      {"sample-kary",
       "Sample from the distribution behind a k-ary dataset",
       {{"mode", S, "sub|shuffle|repeat|precision|both (default sub)"},
        {"in", S, "input CSV, one element of [k] per line"},
        {"k", I, "domain size (default: max value in the data, at least 2)"},
        {"eps", D, "privacy parameter"},
        {"delta", D, "approximate-DP parameter (shuffle, precision)"},
        {"m", I, "number of outputs (shuffle, repeat, precision, both)"},
        {"alpha", D, "accuracy target (repeat, precision, both)"},
        {"count", I, "independent single-sample runs (sub, default 1)"}}},
      {"sample-gaussian",
       "Sample from the Gaussian behind a vector dataset",
       {{"variant", S, "pure|zcdp-known|zcdp-bounded"},
        {"mode", S, "single|repeat|precision|both (default single)"},
        {"in", S, "input CSV, one row per record"},
        {"dim", I, "expected dimension (checked against the data)"},
        {"R", D, "mean norm bound"},
        {"alpha", D, "accuracy target"},
        {"eps", D, "privacy parameter"},
        {"clip_constant", D, "c in B = R + c sqrt(d ln(1/alpha)) (pure)"},
        {"complexity_constant", D, "C in the pure sample complexity"},
        {"multiplier", D, "Euclidean-Laplace sensitivity multiplier (pure)"},
        {"m", I, "number of outputs (repeat, precision, both)"},
        {"count", I, "independent single-sample runs (single, default 1)"}}},
      {"elap",
       "Sample the Euclidean-Laplace distribution or evaluate its tail",
       {{"dim", I, "dimension d"},
        {"b", D, "scale b"},
        {"count", I, "number of samples (default 1)"},
        {"tail", B, "print tail radius d b ln(d/alpha) and tail masses"},
        {"alpha", D, "tail level (with --tail)"}}},
      {"complexity",
       "Evaluate a sample-complexity calculator",
       {{"family", S, "kary|gaussian"},
        {"task", S, "single|weak|strong (default single)"},
        {"method", S, "kary multi-sampling route: shurr|repeat|both"},
        {"variant", S, "gaussian: pure|zcdp-known|zcdp-bounded"},
        {"k", I, "domain size"},
        {"alpha", D, "accuracy target"},
        {"eps", D, "privacy parameter"},
        {"delta", D, "approximate-DP parameter"},
        {"m", I, "number of outputs"},
        {"dim", I, "dimension d"},
        {"R", D, "mean norm bound"},
        {"clip_constant", D, "c for the pure sampler (default 2)"},
        {"complexity_constant", D, "C for the pure sampler (default 1)"}}},
      {"tvdist",
       "Distances between two distributions or two sample sets",
       {{"p", S, "comma-separated probabilities"},
        {"q", S, "comma-separated probabilities"},
        {"eps", D, "report hockey-stick divergences at e^eps"},
        {"order", D, "report the Renyi divergence of this order"},
        {"samples_p", S, "CSV of vector samples from p"},
        {"samples_q", S, "CSV of vector samples from q"},
        {"bins", I, "histogram bins per axis (default 100)"},
        {"bootstrap", I, "bootstrap resamples (default 200)"}}},
      {"audit",
       "Audit a mechanism's privacy claim",
       {{"mechanism", S, "rr|subrr|shurr|elap|zcdp"},
        {"k", I, "domain size (rr, subrr, shurr)"},
        {"n", I, "dataset size (subrr, shurr, zcdp)"},
        {"eps", D, "privacy parameter"},
        {"eps0", D, "local parameter (rr); planted override (shurr)"},
        {"claimed", D, "claimed epsilon (rr, subrr; default: the true one)"},
        {"delta", D, "approximate-DP parameter (shurr)"},
        {"runs", I, "Monte Carlo runs (shurr, default 10000)"},
        {"pair", S,
         "shurr: worst|identical; elap: "
         "random|identical|unit|adversarial"},
        {"dim", I, "dimension (elap, zcdp)"},
        {"B", D, "clip bound (elap)"},
        {"probes", I, "probe points (elap, default 10000)"},
        {"multiplier", D, "sensitivity multiplier (elap, default 1)"},
        {"rows", I, "rows per dataset (elap, default 5)"},
        {"variant", S, "zcdp: zcdp-known|zcdp-bounded"},
        {"R", D, "mean norm bound (zcdp)"},
        {"alpha", D, "accuracy target (zcdp)"},
        {"sigma2", D, "noise variance override (zcdp)"},
        {"orders", S, "comma-separated Renyi orders (zcdp)"}}},
      {"sweep",
       "Evaluate every complexity calculator over a parameter grid",
       {{"grid", S, "JSON grid file"},
        {"k", S, "comma-separated domain sizes"},
        {"alpha", S, "comma-separated accuracy targets"},
        {"eps", S, "comma-separated privacy parameters"},
        {"delta", S, "comma-separated delta values"},
        {"m", S, "comma-separated output counts"},
        {"d", S, "comma-separated dimensions"},
        {"R", S, "comma-separated mean bounds"},
        {"clip_constant", D, "c for the pure sampler"},
        {"complexity_constant", D, "C for the pure sampler"}}},
  };
  return *commands;
}

bool ParseU64(const std::string& text, uint64_t& out) {
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Differentially private sampling from distributions",
               "dpsample");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(LibraryVersion()));

  struct Bound {
    std::string value;
    bool flag = false;
    FlagType type;
  };
  // Keyed by subcommand, then flag name.
  std::map<std::string, std::map<std::string, std::unique_ptr<Bound>>> values;
  std::map<std::string, std::string> seeds;
  std::map<std::string, std::string> outs;
  std::map<std::string, std::string> jsons;
  std::vector<std::pair<std::string, CLI::App*>> subs;

  for (const CommandSpec& spec : Commands()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    subs.emplace_back(spec.name, sub);
    auto& bound = values[spec.name];
    for (const FlagSpec& f : spec.flags) {
      auto slot = std::make_unique<Bound>();
      slot->type = f.type;
      const std::string opt = std::string("--") + f.name;
      if (f.type == FlagType::kBool) {
        sub->add_flag(opt, slot->flag, f.help);
      } else {
        CLI::Option* o = sub->add_option(opt, slot->value, f.help);
        if (f.type == FlagType::kDouble) o->check(CLI::Number);
        if (f.type == FlagType::kInt) o->check(CLI::Number);
      }
      bound[f.name] = std::move(slot);
    }
    sub->add_option("--seed", seeds[spec.name], "64-bit random seed");
    sub->add_option("--out", outs[spec.name], "write primary output here");
    sub->add_option("--json", jsons[spec.name], "write the run report here");
  }
  std::string config_path;
  CLI::App* run_cmd =
      app.add_subcommand("run", "Execute a JSON experiment config or report");
  run_cmd->add_option("--config", config_path, "config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << LibraryVersion() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  if (run_cmd->parsed()) {
    absl::StatusOr<std::string> text = ReadTextFile(config_path);
    if (!text.ok()) {
      err << "error: " << text.status().message() << "\n";
      return kExitError;
    }
    absl::StatusOr<ExperimentConfig> config = ParseExperimentConfig(*text);
    if (!config.ok()) {
      err << "error: " << config.status().message() << "\n";
      return kExitError;
    }
    return Execute(*config, out, err);
  }

  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    ExperimentConfig config;
    config.command = name;
    for (const auto& [flag, slot] : values[name]) {
      const std::string opt = "--" + flag;
      if (slot->type == FlagType::kBool) {
        if (slot->flag) config.params[flag] = true;
        continue;
      }
      if (sub->count(opt) == 0) continue;
      try {
        switch (slot->type) {
          case FlagType::kDouble:
            config.params[flag] = std::stod(slot->value);
            break;
          case FlagType::kInt: {
            size_t used = 0;
            const long long v = std::stoll(slot->value, &used);
            if (used != slot->value.size()) throw std::invalid_argument("");
            config.params[flag] = static_cast<int64_t>(v);
            break;
          }
          default:
            config.params[flag] = slot->value;
        }
      } catch (const std::exception&) {
        err << "error: " << opt << " has invalid value '" << slot->value
            << "'\n";
        return kExitError;
      }
    }
    if (sub->count("--seed") > 0) {
      uint64_t seed = 0;
      if (!ParseU64(seeds[name], seed)) {
        err << "error: --seed must be an unsigned 64-bit integer\n";
        return kExitError;
      }
      config.seed = seed;
    }
    if (sub->count("--out") > 0) config.params["out"] = outs[name];
    if (sub->count("--json") > 0) config.params["json"] = jsons[name];
    return Execute(config, out, err);
  }
  err << "error: no subcommand\n";
  return kExitError;
}

}  // namespace dpsample::cli
