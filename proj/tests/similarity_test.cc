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
#include <random>

#include "gtest/gtest.h"
#include "testing/generators.h"
#include "testing/oracles.h"
#include "vcontact/errors.h"
#include "vcontact/similarity.h"

namespace vcontact {
namespace {

using ::vcontact::testing::RandomProcessedVector;
using ::vcontact::testing::RandomScan;
using ::vcontact::testing::TestId;
using ::vcontact::testing::TestIds;

const SignalId kX = TestId(1);
const SignalId kY = TestId(2);
const SignalId kZ = TestId(3);
const SignalId kU = TestId(4);
const SignalId kV = TestId(5);

ProcessedVector PointRanges(const SignalVector& v) {
  std::vector<RangeEntry> entries;
  for (const Reading& r : v.readings()) entries.push_back({r.id, {r.rssi, r.rssi}});
  return ProcessedVector(entries);
}

TEST(OverlapRatioTest, Examples) {
  const SignalVector a(0, {{kX, -50}, {kY, -50}, {kZ, -50}});
  const ProcessedVector p({{kX, {-60, -40}},
                           {kY, {-60, -40}},
                           {kU, {-60, -40}},
                           {kV, {-60, -40}}});
  EXPECT_DOUBLE_EQ(OverlapRatio(a, p), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(OverlapRatio(a, PointRanges(a)), 1.0);
  EXPECT_DOUBLE_EQ(OverlapRatio(SignalVector(0, {{kU, -1}}),
                                ProcessedVector({{kX, {-9, -1}}})),
                   0.0);
  EXPECT_DOUBLE_EQ(OverlapRatio(SignalVector(), p), 0.0);
  EXPECT_DOUBLE_EQ(OverlapRatio(a, ProcessedVector()), 0.0);
}

TEST(RssiDifferenceTest, PiecewiseDistance) {
  const ProcessedVector p({{kX, {-70, -50}}});
  EXPECT_EQ(RssiDifference(SignalVector(0, {{kX, -60}}), p), 0.0);
  EXPECT_EQ(RssiDifference(SignalVector(0, {{kX, -80}}), p), 10.0);
  EXPECT_EQ(RssiDifference(SignalVector(0, {{kX, -40}}), p), 10.0);
  EXPECT_EQ(RssiDifference(SignalVector(0, {{kY, -40}}), p), std::nullopt);
}

TEST(RssiDifferenceTest, MeanOverSharedIds) {
  const SignalVector a(0, {{kX, -60}, {kY, -44}, {kZ, -1}});
  const ProcessedVector p({{kX, {-70, -50}}, {kY, {-60, -50}}});
  EXPECT_EQ(RssiDifference(a, p), 3.0);
}

TEST(VcontactSimilarityTest, Examples) {
  const SignalVector a(0, {{kX, -50}, {kY, -60}, {kZ, -70}});
  EXPECT_DOUBLE_EQ(VcontactSimilarity(a, PointRanges(a)), 1.0);
  EXPECT_DOUBLE_EQ(
      VcontactSimilarity(a, ProcessedVector({{kU, {-100, 0}}})), 0.0);
  // O = 2/3 (x, y shared of min(3, 4)); d(x) = 0, d(y) = 6, so D = 3.
  const SignalVector b(0, {{kX, -60}, {kY, -44}, {kZ, -1}});
  const ProcessedVector p({{kX, {-70, -50}},
                           {kY, {-60, -50}},
                           {kU, {-60, -50}},
                           {kV, {-60, -50}}});
  EXPECT_DOUBLE_EQ(VcontactSimilarity(b, p), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(testing::OracleSimilarity(b, p).value(), 1.0 / 6.0);
}

TEST(VcontactSimilarityTest, AgreesWithOracleAndBounds) {
  std::mt19937_64 rng(3);
  const auto universe = TestIds(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const SignalVector a = RandomScan(rng, universe, 0, 0.4);
    const ProcessedVector p = RandomProcessedVector(rng, universe, 0.4);
    const double score = VcontactSimilarity(a, p);
    ASSERT_GE(score, 0.0);
    ASSERT_LE(score, 1.0);
    ASSERT_NEAR(score, testing::OracleSimilarity(a, p).value(), 1e-12);
    const auto d = RssiDifference(a, p);
    if (d) {
      ASSERT_NEAR(score, OverlapRatio(a, p) / (*d + 1.0), 1e-12);
    } else {
      ASSERT_EQ(score, 0.0);
    }
  }
}

// Widening one range never lowers the score.
TEST(VcontactSimilarityTest, MonotoneInRangeWidth) {
  std::mt19937_64 rng(5);
  const auto universe = TestIds(10);
  for (int trial = 0; trial < 1000; ++trial) {
    const SignalVector a = RandomScan(rng, universe, 0, 0.6);
    const ProcessedVector p = RandomProcessedVector(rng, universe, 0.6);
    if (p.empty()) continue;
    std::vector<RangeEntry> wider(p.entries().begin(), p.entries().end());
    RangeEntry& e = wider[testing::UniformInt(rng, 0, wider.size() - 1)];
    e.range.min = testing::UniformInt(rng, kWeakSignalFloor, e.range.min);
    e.range.max = testing::UniformInt(rng, e.range.max, kRssiCeiling);
    const ProcessedVector q(wider);
    const auto dp = RssiDifference(a, p);
    const auto dq = RssiDifference(a, q);
    if (dp) ASSERT_LE(*dq, *dp);
    ASSERT_GE(VcontactSimilarity(a, q), VcontactSimilarity(a, p));
  }
}

TEST(JaccardTest, Examples) {
  const SignalVector xy(0, {{kX, -1}, {kY, -1}});
  const SignalVector yz(0, {{kY, -1}, {kZ, -1}});
  EXPECT_DOUBLE_EQ(Jaccard(xy, xy), 1.0);
  EXPECT_DOUBLE_EQ(Jaccard(xy, SignalVector(0, {{kU, -1}})), 0.0);
  EXPECT_DOUBLE_EQ(Jaccard(xy, yz), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(Jaccard(SignalVector(), SignalVector()), 0.0);
}

TEST(JaccardTest, NeverExceedsOverlapRatio) {
  std::mt19937_64 rng(9);
  const auto universe = TestIds(10);
  for (int trial = 0; trial < 1000; ++trial) {
    const SignalVector a = RandomScan(rng, universe, 0);
    const SignalVector b = RandomScan(rng, universe, 0);
    std::vector<RangeEntry> entries;
    for (const Reading& r : b.readings()) entries.push_back({r.id, {r.rssi, r.rssi}});
    ASSERT_LE(Jaccard(a, b), OverlapRatio(a, ProcessedVector(entries)) + 1e-15);
  }
}

TEST(BaselineDistanceTest, Examples) {
  const SignalVector a(0, {{kX, -50}});
  EXPECT_DOUBLE_EQ(AverageManhattanDistance(a, a), 0.0);
  EXPECT_DOUBLE_EQ(AverageEuclideanDistance(a, a), 0.0);
  const SignalVector b(0, {{kX, -60}});
  EXPECT_DOUBLE_EQ(AverageManhattanDistance(a, b), 10.0);
  EXPECT_DOUBLE_EQ(AverageEuclideanDistance(a, b), 10.0);
  // a gains y:-100, c gains x:-100: |(-50) - (-100)| + |(-100) - (-60)|.
  const SignalVector c(0, {{kY, -60}});
  EXPECT_DOUBLE_EQ(AverageManhattanDistance(a, c), 45.0);
  EXPECT_DOUBLE_EQ(AverageEuclideanDistance(a, c), std::sqrt(4100.0) / 2.0);
}

TEST(BaselineDistanceTest, SharedOnlyDenominator) {
  const SignalVector a(0, {{kX, -50}, {kY, -70}});
  const SignalVector b(0, {{kX, -60}});
  // Sum after fill = 10 + 30; one shared id.
  EXPECT_DOUBLE_EQ(
      AverageManhattanDistance(a, b, BaselineDenominator::kSharedOnly), 40.0);
  EXPECT_DOUBLE_EQ(AverageManhattanDistance(a, b), 20.0);
  EXPECT_TRUE(std::isinf(AverageManhattanDistance(
      a, SignalVector(0, {{kZ, -1}}), BaselineDenominator::kSharedOnly)));
}

TEST(BaselineDistanceTest, BothEmptyIsAnError) {
  EXPECT_THROW(AverageManhattanDistance(SignalVector(), SignalVector()),
               InvalidInputError);
  EXPECT_THROW(AverageEuclideanDistance(SignalVector(), SignalVector()),
               InvalidInputError);
}

TEST(BaselineDistanceTest, Symmetric) {
  std::mt19937_64 rng(13);
  const auto universe = TestIds(10);
  for (int trial = 0; trial < 500; ++trial) {
    const SignalVector a = RandomScan(rng, universe, 0, 0.7);
    const SignalVector b = RandomScan(rng, universe, 0, 0.7);
    if (a.empty() && b.empty()) continue;
    ASSERT_DOUBLE_EQ(AverageManhattanDistance(a, b),
                     AverageManhattanDistance(b, a));
    ASSERT_DOUBLE_EQ(AverageEuclideanDistance(a, b),
                     AverageEuclideanDistance(b, a));
    ASSERT_DOUBLE_EQ(Jaccard(a, b), Jaccard(b, a));
  }
}

}  // namespace
}  // namespace vcontact
