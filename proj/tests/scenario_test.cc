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

#include "vcontact/scenario.h"

#include <gtest/gtest.h>

namespace vcontact::eval {
namespace {

TEST(ScenarioTest, SiteAloneTakesDefaults) {
  const Scenario s = ParseScenario("[environment]\nsite = mall\n");
  EXPECT_EQ(s.site.name, "mall");
  EXPECT_EQ(s.site.env.aps.size(), 301u);
  EXPECT_EQ(s.study.seeds, (std::vector<std::uint64_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(s.study.distances.size(), 10u);
  EXPECT_EQ(s.proximities, (std::vector<double>{1, 2, 3, 4, 5}));
  EXPECT_EQ(s.methods, std::vector<Method>{Method::kVcontact});
  EXPECT_DOUBLE_EQ(s.inout_alpha, 0.2);
  EXPECT_TRUE(s.trajectories.empty());
}

TEST(ScenarioTest, OverridesEverySection) {
  const Scenario s = ParseScenario(R"(
; comment
[environment]
site = office
layout_seed = 7
path_loss_exponent = 2.2
shadowing_std = 1.5
detection_floor = -80

[study]
seeds = 3, 4
distances = 0.5 1.5
proximities = 2
duration = 120
sampling_period = 10
lifespan = 0
alpha_step = 0.05
methods = vcontact, jaccard amd aed
calibrate_proximity = 3

[inout]
alpha = 0.3
test_scans = 10
outside_margin = 5
outside_extent = 6

[robustness]
filter_rates = 0 0.5
noise_stds = 2
sampling_periods = 15 30
device_pairs = false
proximity = 4
)");
  EXPECT_EQ(s.site.env.aps.size(), 32u);
  EXPECT_DOUBLE_EQ(s.site.env.path_loss_exponent, 2.2);
  EXPECT_DOUBLE_EQ(s.site.env.shadowing_std, 1.5);
  EXPECT_DOUBLE_EQ(s.site.env.detection_floor, -80);
  EXPECT_NE(s.site.env.aps[0].position, sim::MakeSitePreset("office", 1).env.aps[0].position);
  EXPECT_EQ(s.study.seeds, (std::vector<std::uint64_t>{3, 4}));
  EXPECT_EQ(s.study.distances, (std::vector<double>{0.5, 1.5}));
  EXPECT_EQ(s.proximities, std::vector<double>{2});
  EXPECT_EQ(s.study.duration, 120);
  EXPECT_EQ(s.study.sampling_period, 10);
  EXPECT_EQ(s.study.lifespan, 0);
  EXPECT_DOUBLE_EQ(s.study.alpha_step, 0.05);
  EXPECT_EQ(s.methods.size(), 4u);
  EXPECT_EQ(s.methods[2], Method::kAverageManhattan);
  EXPECT_DOUBLE_EQ(s.calibrate_proximity, 3);
  EXPECT_DOUBLE_EQ(s.inout_alpha, 0.3);
  EXPECT_EQ(s.inout.test_scans, 10);
  EXPECT_DOUBLE_EQ(s.inout.outside_margin, 5);
  EXPECT_EQ(s.robustness.filter_rates, (std::vector<double>{0, 0.5}));
  EXPECT_EQ(s.robustness.sampling_periods, (std::vector<Seconds>{15, 30}));
  EXPECT_FALSE(s.robustness.device_pairs);
  EXPECT_DOUBLE_EQ(s.robustness.proximity, 4);
}

TEST(ScenarioTest, Trajectories) {
  const Scenario s = ParseScenario(R"(
[environment]
site = office
[trajectory.walker]
waypoints = 100:0:0 160:6:8
sampling_period = 20
stream = 9
bias_db = -2
detect_rate = 0.5
)");
  ASSERT_EQ(s.trajectories.size(), 1u);
  const TrajectorySpec& t = s.trajectories[0];
  EXPECT_EQ(t.name, "walker");
  EXPECT_EQ(t.sampling_period, 20);
  EXPECT_EQ(t.stream, 9u);
  EXPECT_DOUBLE_EQ(t.trajectory.device.bias_db, -2);
  EXPECT_DOUBLE_EQ(t.trajectory.device.detect_rate, 0.5);
  const sim::Point mid = t.trajectory.PositionAt(130);
  EXPECT_DOUBLE_EQ(mid.x, 3);
  EXPECT_DOUBLE_EQ(mid.y, 4);
}

std::string KeyOf(const std::string& text) {
  try {
    ParseScenario(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<accepted>";
}

TEST(ScenarioTest, RejectsWithTheOffendingKey) {
  const std::string env = "[environment]\nsite = office\n";
  EXPECT_EQ(KeyOf(""), "environment.site");
  EXPECT_EQ(KeyOf("[environment]\nsite = airport\n"), "environment.site");
  EXPECT_EQ(KeyOf(env + "[study]\nsede = 1\n"), "study.sede");
  EXPECT_EQ(KeyOf(env + "[weather]\nrain = 1\n"), "weather");
  EXPECT_EQ(KeyOf(env + "[study]\nseeds = 1 x\n"), "study.seeds");
  EXPECT_EQ(KeyOf(env + "[study]\nduration = 10s\n"), "study.duration");
  EXPECT_EQ(KeyOf(env + "[study]\nseeds =\n"), "study.seeds");
  EXPECT_EQ(KeyOf(env + "[study]\nmethods = cosine\n"), "study.methods");
  EXPECT_EQ(KeyOf(env + "[study]\nalpha_step = 0\n"), "study.alpha_step");
  EXPECT_EQ(KeyOf(env + "[inout]\nalpha = 1.5\n"), "inout.alpha");
  EXPECT_EQ(KeyOf(env + "[robustness]\nfilter_rates = 1.2\n"),
            "robustness.filter_rates");
  EXPECT_EQ(KeyOf(env + "[robustness]\ndevice_pairs = maybe\n"),
            "robustness.device_pairs");
  EXPECT_EQ(KeyOf("[environment]\nsite = office\nshadowing_std = -1\n"),
            "environment");
  EXPECT_EQ(KeyOf(env + "[trajectory.a]\nstream = 1\n"),
            "trajectory.a.waypoints");
  EXPECT_EQ(KeyOf(env + "[trajectory.a]\nwaypoints = 5:0:0 5:1:1\n"),
            "trajectory.a.waypoints");
  EXPECT_EQ(KeyOf(env + "[trajectory.a]\nwaypoints = 5-0-0\n"),
            "trajectory.a.waypoints");
  EXPECT_EQ(KeyOf("[environment\nsite = office\n"), "");
  EXPECT_EQ(KeyOf(env + "[study]\nseeds = 1\nseeds = 2\n"), "");
}

TEST(ScenarioTest, ConfigErrorIsInvalidInput) {
  EXPECT_THROW(ParseScenario("[environment]\n"), InvalidInputError);
  EXPECT_THROW(LoadScenario("/nonexistent/scenario.ini"), ConfigError);
}

TEST(ScenarioTest, MethodNamesRoundTrip) {
  for (const Method m : {Method::kVcontact, Method::kJaccard,
                         Method::kAverageManhattan, Method::kAverageEuclidean}) {
    EXPECT_EQ(ParseMethod(MethodName(m)), m);
  }
  EXPECT_THROW(ParseMethod("VCONTACT"), ConfigError);
}

}  // namespace
}  // namespace vcontact::eval
