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

#ifndef DPSAMPLE_TOOLS_CLI_CLI_H_
#define DPSAMPLE_TOOLS_CLI_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"

namespace dpsample::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitAuditFail = 2;
inline constexpr int kExitAdvisoryFail = 3;

// One invocation of a subcommand. `params` holds every flag except --seed,
// keyed by flag name without dashes (e.g. "eps", "in", "clip_constant").
struct ExperimentConfig {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::optional<uint64_t> seed;

  nlohmann::json ToJson() const;
};

// Accepts either a config object or a RunReport (whose "config" member is
// used). Errors: ConfigInvalid.
absl::StatusOr<ExperimentConfig> ParseExperimentConfig(std::string_view text);

// Runs the config. Primary output (CSV or JSON) goes to `out` unless the
// config names an --out file; diagnostics go to `err`. Returns an exit code.
int Execute(const ExperimentConfig& config, std::ostream& out,
            std::ostream& err);

// Parses argv with CLI11 and calls Execute.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

struct SweepGrid {
  std::vector<int> k = {2};
  std::vector<double> alpha = {0.1};
  std::vector<double> eps = {1.0};
  std::vector<double> delta = {1e-6};
  std::vector<int64_t> m = {1};
  std::vector<int> d = {1};
  std::vector<double> mean_bound = {1.0};
  double clip_constant = 2.0;
  double complexity_constant = 1.0;
};

// Keys: k, alpha, eps, delta, m, d, R (arrays) and clip_constant,
// complexity_constant (numbers). Errors: ConfigInvalid.
absl::StatusOr<SweepGrid> ParseSweepGrid(const nlohmann::json& j);

// One CSV row per grid cell, one column per calculator. Cells a calculator
// rejects are written as NA. Errors: ConfigInvalid (empty grid).
absl::StatusOr<std::string> TableSweep(const SweepGrid& grid);

}  // namespace dpsample::cli

#endif  // DPSAMPLE_TOOLS_CLI_CLI_H_
