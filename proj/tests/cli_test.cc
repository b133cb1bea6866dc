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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "dpsample/dataset_io.h"
#include "dpsample/elap.h"
#include "dpsample/kary.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

namespace dpsample::cli {
namespace {

using nlohmann::json;
using ::testing::HasSubstr;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dpsample");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string TempPath(const std::string& name) {
  return ::testing::TempDir() + "/dpsample_cli_" + name;
}

std::string WriteKary(const std::string& name, int n, int k) {
  std::string text = "value\n";
  for (int i = 0; i < n; ++i) text += std::to_string(1 + i % k) + "\n";
  const std::string path = TempPath(name);
  EXPECT_TRUE(WriteTextFile(path, text).ok());
  return path;
}

TEST(CliComplexity, KarySingle) {
  Result r = Invoke({"complexity", "--family", "kary", "--k", "10", "--alpha",
                     "0.1", "--eps", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("n_required").get<int64_t>(), 81);
}

TEST(CliComplexity, UnknownFamily) {
  Result r = Invoke({"complexity", "--family", "poisson"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_THAT(r.err, HasSubstr("family"));
}

TEST(CliSampleKary, TooManyOutputs) {
  const std::string in = WriteKary("small.csv", 10, 3);
  Result r = Invoke({"sample-kary", "--mode", "shuffle", "--in", in, "--eps",
                     "1", "--delta", "1e-6", "--m", "11", "--seed", "1"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_THAT(r.err, HasSubstr("11 outputs"));
}

TEST(CliSampleKary, SeedIsRequired) {
  const std::string in = WriteKary("seedless.csv", 50, 3);
  Result r = Invoke({"sample-kary", "--in", in, "--eps", "1"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_THAT(r.err, HasSubstr("--seed"));
}

TEST(CliSampleKary, BadSeedRejected) {
  const std::string in = WriteKary("badseed.csv", 50, 3);
  Result r = Invoke({"sample-kary", "--in", in, "--eps", "1", "--seed", "-4"});
  EXPECT_EQ(r.code, kExitError);
}

TEST(CliSampleKary, SameSeedSameOutput) {
  const std::string in = WriteKary("repeat.csv", 200, 4);
  const std::vector<std::string> args = {
      "sample-kary", "--in", in, "--eps", "1", "--count", "50", "--seed", "77"};
  Result a = Invoke(args);
  Result b = Invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> other = args;
  other.back() = "78";
  EXPECT_NE(Invoke(other).out, a.out);
}

TEST(CliSampleKary, OutFileAndReport) {
  const std::string in = WriteKary("outfile.csv", 200, 4);
  const std::string out = TempPath("outfile_result.csv");
  const std::string report = TempPath("outfile_report.json");
  Result r = Invoke({"sample-kary", "--in", in, "--eps", "1", "--count", "20",
                     "--seed", "3", "--out", out, "--json", report});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto csv = ReadKaryCsv(out, 4);
  ASSERT_TRUE(csv.ok()) << csv.status();
  EXPECT_EQ(csv->size(), 20);
  auto text = ReadTextFile(report);
  ASSERT_TRUE(text.ok());
  const json j = json::parse(*text);
  EXPECT_EQ(j.at("config").at("command"), "sample-kary");
  EXPECT_EQ(j.at("config").at("seed").get<uint64_t>(), 3u);
}

TEST(CliRun, ReplaysReport) {
  const std::string in = WriteKary("replay.csv", 100, 3);
  const std::string report = TempPath("replay_report.json");
  Result first = Invoke({"sample-kary", "--in", in, "--eps", "2", "--count",
                         "30", "--seed", "12", "--json", report});
  ASSERT_EQ(first.code, kExitOk) << first.err;
  Result again = Invoke({"run", "--config", report});
  ASSERT_EQ(again.code, kExitOk) << again.err;
  EXPECT_EQ(again.out, first.out);
}

TEST(CliRun, ConfigObject) {
  ExperimentConfig config;
  config.command = "complexity";
  config.params = {{"family", "kary"}, {"k", 10}, {"alpha", 0.1}, {"eps", 1}};
  auto parsed = ParseExperimentConfig(config.ToJson().dump());
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(parsed->command, "complexity");
  EXPECT_FALSE(parsed->seed.has_value());
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(Execute(*parsed, out, err), kExitOk) << err.str();
  EXPECT_EQ(json::parse(out.str()).at("n_required").get<int64_t>(), 81);
}

TEST(CliRun, MalformedConfig) {
  EXPECT_FALSE(ParseExperimentConfig("[1]").ok());
  EXPECT_FALSE(ParseExperimentConfig("{\"params\": {}}").ok());
  EXPECT_FALSE(
      ParseExperimentConfig("{\"command\": \"x\", \"seed\": -1}").ok());
  const std::string path = TempPath("missing_config.json");
  EXPECT_EQ(Invoke({"run", "--config", path}).code, kExitError);
}

TEST(CliSweep, CellMatchesCalculators) {
  Result r = Invoke({"sweep", "--k", "10", "--alpha", "0.1", "--eps", "1",
                     "--delta", "1e-6", "--m", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::string row;
  std::getline(lines, header);
  std::getline(lines, row);
  std::vector<std::string> names;
  std::vector<std::string> cells;
  std::stringstream hs(header);
  std::stringstream rs(row);
  for (std::string c; std::getline(hs, c, ',');) names.push_back(c);
  for (std::string c; std::getline(rs, c, ',');) cells.push_back(c);
  ASSERT_EQ(names.size(), cells.size());
  const auto cell = [&](const std::string& name) {
    for (size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return cells[i];
    }
    return std::string("missing");
  };
  EXPECT_EQ(cell("subrr_single"), "81");
  EXPECT_EQ(cell("subrr_weak_repeat"), "324");
  auto weak = ShurrWeakComplexity(10, 0.1, 1.0, 1e-6, 4);
  ASSERT_TRUE(weak.ok());
  EXPECT_EQ(cell("shurr_weak"), std::to_string(weak->n_required));
  auto strong = ShurrStrongComplexity(10, 0.1, 1.0, 1e-6, 4);
  ASSERT_TRUE(strong.ok());
  EXPECT_EQ(cell("shurr_strong"), std::to_string(strong->n_required));
}

TEST(CliSweep, GridRejectsBadKeys) {
  EXPECT_FALSE(ParseSweepGrid(json{{"k", "ten"}}).ok());
  SweepGrid empty;
  empty.eps.clear();
  EXPECT_FALSE(TableSweep(empty).ok());
}

TEST(CliAudit, ExitCodes) {
  EXPECT_EQ(
      Invoke({"audit", "--mechanism", "rr", "--k", "2", "--eps0", "1"}).code,
      kExitOk);
  EXPECT_EQ(Invoke({"audit", "--mechanism", "rr", "--k", "2", "--eps0", "1",
                    "--claimed", "0.5"})
                .code,
            kExitAuditFail);
  EXPECT_EQ(
      Invoke({"audit", "--mechanism", "elap", "--dim", "2", "--B", "1", "--eps",
              "1", "--pair", "adversarial", "--probes", "2000", "--seed", "4"})
          .code,
      kExitAdvisoryFail);
  EXPECT_EQ(Invoke({"audit", "--mechanism", "subrr", "--k", "3", "--n", "3",
                    "--eps", "1"})
                .code,
            kExitOk);
}

TEST(CliAudit, ReportIsJson) {
  Result r = Invoke({"audit", "--mechanism", "zcdp", "--dim", "2", "--R", "1",
                     "--alpha", "0.1", "--eps", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "pass");
}

TEST(CliElap, Tail) {
  Result r =
      Invoke({"elap", "--dim", "3", "--b", "1", "--tail", "--alpha", "0.1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j.at("tail_radius").get<double>(), 3.0 * std::log(30.0), 1e-9);
  EXPECT_LE(j.at("exact_tail").get<double>(), 0.1);
}

TEST(CliElap, SamplesCsv) {
  Result r =
      Invoke({"elap", "--dim", "2", "--b", "1", "--count", "5", "--seed", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto rows = ParseVectorCsv(r.out);
  ASSERT_TRUE(rows.ok()) << rows.status() << "\n" << r.out;
  EXPECT_EQ(rows->size(), 5);
  EXPECT_EQ(rows->dim(), 2);
}

TEST(CliTvdist, Categorical) {
  Result r =
      Invoke({"tvdist", "--p", "0.5,0.5", "--q", "0.25,0.75", "--eps", "0.1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j.at("tv").get<double>(), 0.25, 1e-12);
  EXPECT_GE(j.at("tv_bound_from_closeness").get<double>(),
            j.at("tv").get<double>() - 1e-12);
}

TEST(CliTvdist, InfiniteRenyiIsString) {
  Result r = Invoke({"tvdist", "--p", "0.5,0.5", "--q", "1,0", "--order", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out).at("renyi"), "inf");
}

TEST(CliTvdist, SampleFiles) {
  const std::string p = TempPath("tv_p.csv");
  const std::string q = TempPath("tv_q.csv");
  std::string text = "x\n";
  for (int i = 0; i < 400; ++i) text += std::to_string(i / 400.0) + "\n";
  ASSERT_TRUE(WriteTextFile(p, text).ok());
  ASSERT_TRUE(WriteTextFile(q, text).ok());
  Result r = Invoke({"tvdist", "--samples_p", p, "--samples_q", q, "--bins",
                     "10", "--bootstrap", "20", "--seed", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(json::parse(r.out).at("estimate").get<double>(), 0.0, 1e-12);
}

TEST(CliParse, UnknownFlagAndSubcommand) {
  EXPECT_EQ(Invoke({"complexity", "--bogus", "1"}).code, kExitError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitError);
  EXPECT_EQ(Invoke({"complexity", "--k", "ten"}).code, kExitError);
}

TEST(CliParse, Help) {
  Result r = Invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("sample-kary"));
}

}  // namespace
}  // namespace dpsample::cli
