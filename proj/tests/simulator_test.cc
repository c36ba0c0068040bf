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

#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "testing/generators.h"
#include "vcontact/errors.h"
#include "vcontact/presets.h"
#include "vcontact/simulator.h"
#include "vcontact/similarity.h"

namespace vcontact::sim {
namespace {

using ::vcontact::testing::TestId;

Environment OneAp(double n, double shadowing) {
  Environment env;
  env.aps = {{TestId(1), {0, 0}, -40}};
  env.path_loss_exponent = n;
  env.shadowing_std = shadowing;
  env.detection_floor = -100;
  env.seed = 7;
  return env;
}

TEST(SampleScanTest, ZeroDistanceZeroNoise) {
  const SignalVector v = SampleScan(OneAp(2.5, 0), {0, 0}, {}, {1, 0}, 5);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.readings()[0].rssi, -40);
  EXPECT_EQ(v.timestamp(), 5);
}

TEST(SampleScanTest, NoGainInsideOneMeter) {
  const SignalVector v = SampleScan(OneAp(2.5, 0), {0.3, 0.4}, {}, {1, 0}, 0);
  EXPECT_EQ(v.readings()[0].rssi, -40);
}

TEST(SampleScanTest, TenMetersSquareLaw) {
  const SignalVector v = SampleScan(OneAp(2.0, 0), {6, 8}, {}, {1, 0}, 0);
  EXPECT_EQ(v.readings()[0].rssi, -60);
}

TEST(SampleScanTest, DeviceBiasShifts) {
  const SignalVector v =
      SampleScan(OneAp(2.0, 0), {10, 0}, {.bias_db = -3}, {1, 0}, 0);
  EXPECT_EQ(v.readings()[0].rssi, -63);
}

TEST(SampleScanTest, FloorDropsWeakReadings) {
  Environment env = OneAp(2.0, 0);
  env.detection_floor = -59;
  EXPECT_EQ(SampleScan(env, {10, 0}, {}, {1, 0}, 0).size(), 0u);
  env.detection_floor = -60;
  EXPECT_EQ(SampleScan(env, {10, 0}, {}, {1, 0}, 0).size(), 1u);
}

TEST(SampleScanTest, ClampsToWeakFloor) {
  const SignalVector v = SampleScan(OneAp(6.0, 0), {1000, 0}, {}, {1, 0}, 0);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.readings()[0].rssi, kWeakSignalFloor);
}

TEST(SampleScanTest, DeterministicPerKey) {
  const Environment env = MakeSitePreset("office").env;
  const SignalVector a = SampleScan(env, {3, 4}, {}, {9, 2}, 0);
  const SignalVector b = SampleScan(env, {3, 4}, {}, {9, 2}, 0);
  const SignalVector c = SampleScan(env, {3, 4}, {}, {9, 3}, 0);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(SampleScanTest, ShadowingMatchesGaussianMoments) {
  const Environment env = OneAp(2.0, 4.0);
  double sum = 0;
  double sq = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double r = SampleScan(env, {10, 0}, {}, {1, static_cast<std::uint64_t>(i)}, 0)
                         .readings()[0]
                         .rssi;
    sum += r;
    sq += r * r;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  EXPECT_NEAR(mean, -60, 0.1);
  // Rounding adds 1/12 dB^2.
  EXPECT_NEAR(var, 16 + 1.0 / 12, 0.5);
}

TEST(SampleScanTest, DetectRateThinsReadings) {
  Environment env = OneAp(2.0, 0);
  int seen = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    seen += static_cast<int>(
        SampleScan(env, {2, 0}, {.detect_rate = 0.3}, {1, i}, 0).size());
  }
  EXPECT_NEAR(seen / 10000.0, 0.3, 0.02);
}

TEST(SampleScanTest, EqualPositionsNoShadowingGiveEqualVectors) {
  Environment env = MakeSitePreset("mall").env;
  env.shadowing_std = 0;
  EXPECT_EQ(SampleScan(env, {5, 5}, {}, {1, 0}, 0),
            SampleScan(env, {5, 5}, {}, {2, 7}, 0));
}

TEST(EnvironmentTest, Validation) {
  Environment env = OneAp(1.4, 0);
  EXPECT_THROW(env.Validate(), InvalidInputError);
  env.path_loss_exponent = 6.1;
  EXPECT_THROW(env.Validate(), InvalidInputError);
  env.path_loss_exponent = 2;
  env.shadowing_std = -1;
  EXPECT_THROW(env.Validate(), InvalidInputError);
  env.shadowing_std = 0;
  env.aps[0].position.x = NAN;
  EXPECT_THROW(env.Validate(), InvalidInputError);
}

TEST(TrajectoryTest, InterpolatesAndClamps) {
  Trajectory t;
  t.waypoints = {{0, {0, 0}}, {10, {10, 20}}};
  EXPECT_EQ(t.PositionAt(-5), (Point{0, 0}));
  EXPECT_EQ(t.PositionAt(5), (Point{5, 10}));
  EXPECT_EQ(t.PositionAt(50), (Point{10, 20}));
  t.waypoints.push_back({10, {0, 0}});
  EXPECT_THROW(t.Validate(), InvalidInputError);
}

TEST(SimulateProfileTest, ScanCountAndSpacing) {
  Trajectory t;
  t.waypoints = {{100, {0, 0}}, {700, {0, 0}}};
  const SignalProfile p = SimulateProfile(OneAp(2, 3), t, 5, 1);
  ASSERT_EQ(p.size(), 120u);
  EXPECT_EQ(p.vectors().front().timestamp(), 100);
  EXPECT_EQ(p.vectors().back().timestamp(), 695);
}

TEST(SimulateProfileTest, SingleWaypointGivesOneScan) {
  Trajectory t;
  t.waypoints = {{100, {0, 0}}};
  EXPECT_EQ(SimulateProfile(OneAp(2, 3), t, 5, 1).size(), 1u);
  EXPECT_THROW(SimulateProfile(OneAp(2, 3), t, 0, 1), InvalidInputError);
}

TEST(PairedScenarioTest, ZeroSeparationNoNoiseIdentical) {
  Environment env = MakeSitePreset("office").env;
  env.shadowing_std = 0;
  PairedScenarioOptions options;
  options.anchor = {5, 6};
  const PairedScenario s = MakePairedScenario(env, 0, options);
  EXPECT_EQ(s.reference.size(), 120u);
  for (std::size_t i = 0; i < s.reference.size(); ++i) {
    EXPECT_EQ(s.reference.vectors()[i], s.other.vectors()[i]);
  }
}

TEST(PairedScenarioTest, MeanSimilarityFallsWithSeparation) {
  Environment env = MakeSitePreset("office").env;
  env.shadowing_std = 0;
  PairedScenarioOptions options;
  options.anchor = {5, 6};
  options.duration = 20;
  const ProcessedVector reference = [&] {
    const PairedScenario s = MakePairedScenario(env, 0, options);
    std::vector<RangeEntry> entries;
    for (const Reading& r : s.reference.vectors()[0].readings()) {
      entries.push_back({r.id, {r.rssi, r.rssi}});
    }
    return ProcessedVector(entries);
  }();
  double previous = 2;
  for (double d : {0.0, 1.0, 2.0, 4.0, 8.0}) {
    const PairedScenario s = MakePairedScenario(env, d, options);
    const double p = VcontactSimilarity(s.other.vectors()[0], reference);
    EXPECT_LE(p, previous) << d;
    previous = p;
  }
}

TEST(FilterAccessPointsTest, RemovesRoundedShareOfIds) {
  Environment env;
  env.detection_floor = -100;
  env.shadowing_std = 0;
  for (int i = 0; i < 40; ++i) env.aps.push_back({TestId(i), {1.0 * i, 0}, -40});
  Trajectory t;
  t.waypoints = {{0, {0, 0}}, {50, {0, 0}}};
  const SignalProfile p = SimulateProfile(env, t, 5, 1);
  auto ids = [](const SignalProfile& profile) {
    std::set<SignalId> out;
    for (const SignalVector& v : profile.vectors()) {
      for (const Reading& r : v.readings()) out.insert(r.id);
    }
    return out;
  };
  const SignalProfile half = FilterAccessPoints(p, 0.5, 3);
  EXPECT_EQ(ids(half).size(), 20u);
  EXPECT_EQ(FilterAccessPoints(p, 0.5, 3), half);
  EXPECT_EQ(FilterAccessPoints(p, 0, 3), p);
  EXPECT_EQ(ids(FilterAccessPoints(p, 1, 3)).size(), 0u);
  // Every scan loses the same ids.
  const std::set<SignalId> kept = ids(half);
  for (const SignalVector& v : half.vectors()) EXPECT_EQ(v.size(), kept.size());
  EXPECT_THROW(FilterAccessPoints(p, 1.5, 3), InvalidInputError);
}

TEST(AddRssiNoiseTest, MeanAbsoluteChange) {
  Environment env;
  env.detection_floor = -100;
  env.shadowing_std = 0;
  for (int i = 0; i < 20; ++i) env.aps.push_back({TestId(i), {2.0 + i, 0}, -40});
  Trajectory t;
  t.waypoints = {{0, {0, 0}}, {5000, {0, 0}}};
  const SignalProfile p = SimulateProfile(env, t, 5, 1);
  const double sigma = 4;
  const SignalProfile noisy = AddRssiNoise(p, sigma, 11);
  double total = 0;
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto a = p.vectors()[i].readings();
    const auto b = noisy.vectors()[i].readings();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      total += std::abs(a[j].rssi - b[j].rssi);
      ++count;
    }
  }
  EXPECT_NEAR(total / count, sigma * std::sqrt(2 / std::numbers::pi), 0.1);
  EXPECT_EQ(AddRssiNoise(p, 0, 11), p);
}

TEST(PresetsTest, KnownSites) {
  for (const std::string& name : SitePresetNames()) {
    const SitePreset site = MakeSitePreset(name);
    EXPECT_NO_THROW(site.env.Validate());
    EXPECT_NEAR(MeanApCount(site), site.target_mean_aps,
                0.2 * site.target_mean_aps)
        << name;
  }
  EXPECT_EQ(MakeSitePreset("office").env.aps.size(), 32u);
  EXPECT_EQ(MakeSitePreset("bus-station").env.aps.size(), 109u);
  EXPECT_EQ(MakeSitePreset("mall").env.aps.size(), 301u);
  EXPECT_THROW(MakeSitePreset("moon"), InvalidInputError);
}

TEST(PresetsTest, HeterogeneousDevicesFollowMeasuredCounts) {
  const std::vector<Device> devices = HeterogeneousDevices();
  ASSERT_EQ(devices.size(), 5u);
  EXPECT_DOUBLE_EQ(devices[2].detect_rate, 1.0);
  EXPECT_NEAR(devices[0].detect_rate, 75.00 / 180.16, 1e-12);
  for (const Device& d : devices) {
    EXPECT_GT(d.detect_rate, 0);
    EXPECT_LE(d.detect_rate, 1);
  }
}

}  // namespace
}  // namespace vcontact::sim
