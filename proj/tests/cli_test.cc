// Copyright 2026 The vContact Authors
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

#include "cli.h"

#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "testing/exchange_fakes.h"

namespace vcontact::cli {
namespace {

namespace fs = std::filesystem;
using ::vcontact::testing::TempDir;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;

  // The last stdout line, parsed.
  nlohmann::json Summary() const {
    std::string body = out;
    if (!body.empty() && body.back() == '\n') body.pop_back();
    return nlohmann::json::parse(body.substr(body.rfind('\n') + 1));
  }
};

Outcome Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "vcontact");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

fs::path WriteConfig(const fs::path& dir, const std::string& text) {
  const fs::path path = dir / "scenario.ini";
  std::ofstream(path) << text;
  return path;
}

const char* kSmall = R"([environment]
site = office
[study]
seeds = 1
distances = 1 3 5
proximities = 2 4
duration = 120
methods = vcontact jaccard
[inout]
test_scans = 10
[robustness]
filter_rates = 0
noise_stds = 0
sampling_periods = 10
device_pairs = false
)";

TEST(CliTest, CalibrateEmitsCurveAndSummary) {
  const fs::path dir = TempDir("cli-calibrate");
  const Outcome o = Cli({"calibrate", WriteConfig(dir, kSmall).string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "seed,alpha,precision,recall,f1");
  EXPECT_NE(o.out.find("\n1,0.010000,"), std::string::npos);
  const auto summary = o.Summary();
  EXPECT_EQ(summary["command"], "calibrate");
  ASSERT_EQ(summary["intersections"].size(), 1u);
  EXPECT_EQ(summary["intersections"][0]["seed"], 1);
}

TEST(CliTest, CsvCanGoToAFile) {
  const fs::path dir = TempDir("cli-csv");
  const fs::path csv = dir / "rows.csv";
  const Outcome o = Cli({"proximity-study", WriteConfig(dir, kSmall).string(),
                         "--csv", csv.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out.find("site,"), std::string::npos);
  const auto summary = o.Summary();
  EXPECT_EQ(summary["rows"], 4);  // 2 proximities x 2 methods x 1 seed
  EXPECT_TRUE(summary["mean_f1"].contains("jaccard"));
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "site,seed,proximity,method,threshold,precision,recall,f1");
}

TEST(CliTest, InOutAndRobustness) {
  const fs::path dir = TempDir("cli-studies");
  const fs::path config = WriteConfig(dir, kSmall);
  const Outcome inout = Cli({"inout-study", config.string()});
  ASSERT_EQ(inout.code, kExitOk) << inout.err;
  EXPECT_EQ(inout.out.substr(0, inout.out.find('\n')),
            "site,seed,alpha,inside,outside,precision,recall");
  EXPECT_EQ(inout.Summary()["command"], "inout-study");

  const Outcome robust = Cli({"robustness", config.string()});
  ASSERT_EQ(robust.code, kExitOk) << robust.err;
  EXPECT_EQ(robust.Summary()["tables"]["filter"], 1);
  EXPECT_FALSE(robust.Summary()["tables"].contains("devices"));
}

TEST(CliTest, ConfigErrorsExitTwo) {
  const fs::path dir = TempDir("cli-errors");
  for (const char* cmd : {"calibrate", "proximity-study", "inout-study", "robustness"}) {
    const Outcome missing = Cli({cmd, (dir / "absent.ini").string()});
    EXPECT_EQ(missing.code, kExitConfigError) << cmd;
    const Outcome bad =
        Cli({cmd, WriteConfig(dir, "[environment]\nsite = office\ntypo = 1\n").string()});
    EXPECT_EQ(bad.code, kExitConfigError) << cmd;
    EXPECT_NE(bad.err.find("environment.typo"), std::string::npos) << bad.err;
  }
  EXPECT_EQ(Cli({}).code, kExitConfigError);
  EXPECT_EQ(Cli({"calibrate"}).code, kExitConfigError);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitConfigError);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(CliTest, SimulateProcessMatch) {
  const fs::path dir = TempDir("cli-pipeline");
  const fs::path config = WriteConfig(dir, R"([environment]
site = office
[trajectory.case]
waypoints = 1000:5:6 2200:5:6
sampling_period = 60
stream = 1
[trajectory.visitor]
waypoints = 2800:6:6 3400:6:6
sampling_period = 60
stream = 2
)");
  const Outcome sim = Cli({"simulate", config.string(), "--out", (dir / "sim").string()});
  ASSERT_EQ(sim.code, kExitOk) << sim.err;
  EXPECT_EQ(sim.Summary()["profiles"][0]["scans"], 20);
  EXPECT_EQ(sim.Summary()["profiles"][1]["scans"], 10);

  std::ifstream truth(dir / "sim" / "ground_truth.csv");
  std::string line;
  std::getline(truth, line);
  EXPECT_EQ(line, "device,other,timestamp,distance");
  std::getline(truth, line);
  EXPECT_EQ(line, "case,visitor,1000,1.000000");

  const Outcome proc = Cli({"process", (dir / "sim" / "case.vsp").string(), "--out",
                            (dir / "case.vcp").string(), "--label", "c1"});
  ASSERT_EQ(proc.code, kExitOk) << proc.err;
  EXPECT_EQ(proc.Summary()["segments"], 19);

  const Outcome match = Cli({"match", (dir / "sim" / "visitor.vsp").string(),
                             (dir / "case.vcp").string()});
  ASSERT_EQ(match.code, kExitOk) << match.err;
  EXPECT_EQ(match.Summary()["episodes"], 1);
  EXPECT_NE(match.out.find("case=c1"), std::string::npos);

  // A lifespan of zero ends coverage when the case leaves.
  ASSERT_EQ(Cli({"process", (dir / "sim" / "case.vsp").string(), "--out",
                 (dir / "short.vcp").string(), "--lifespan", "0"})
                .code,
            kExitOk);
  const Outcome none = Cli({"match", (dir / "sim" / "visitor.vsp").string(),
                            (dir / "short.vcp").string()});
  EXPECT_EQ(none.Summary()["episodes"], 0);

  const Outcome area = Cli({"process", (dir / "sim" / "case.vsp").string(), "--out",
                            (dir / "area.vcp").string(), "--area-stay", "1000", "2200"});
  ASSERT_EQ(area.code, kExitOk) << area.err;
  EXPECT_EQ(area.Summary()["segments"], 1);
}

TEST(CliTest, MissingInputFileIsAFailureNotAConfigError) {
  const fs::path dir = TempDir("cli-missing");
  const Outcome o = Cli({"process", (dir / "absent.vsp").string(), "--out",
                         (dir / "x.vcp").string()});
  EXPECT_EQ(o.code, kExitFailure);
}

TEST(CliTest, SimulateNeedsTrajectories) {
  const fs::path dir = TempDir("cli-notraj");
  const Outcome o = Cli({"simulate", WriteConfig(dir, kSmall).string(), "--out",
                         (dir / "sim").string()});
  EXPECT_EQ(o.code, kExitConfigError);
}

}  // namespace
}  // namespace vcontact::cli
