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

// Random instance generators shared by property and acceptance tests.

#ifndef VCONTACT_TESTS_TESTING_GENERATORS_H_
#define VCONTACT_TESTS_TESTING_GENERATORS_H_

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "vcontact/signal.h"
#include "vcontact/signal_id.h"

namespace vcontact::testing {

// Deterministic id for the k-th test access point.
inline SignalId TestId(int k) {
  char mac[18];
  std::snprintf(mac, sizeof(mac), "02:00:00:00:%02X:%02X", (k >> 8) & 0xff,
                k & 0xff);
  return HashMac(mac, "test-salt");
}

inline std::vector<SignalId> TestIds(int count) {
  std::vector<SignalId> ids;
  for (int k = 0; k < count; ++k) ids.push_back(TestId(k));
  return ids;
}

inline int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random scan over a prefix of the universe; each id present with
// probability density, RSSIs uniform in [-100, 0].
inline SignalVector RandomScan(std::mt19937_64& rng,
                               const std::vector<SignalId>& universe,
                               Timestamp t, double density = 0.5) {
  std::bernoulli_distribution present(density);
  std::vector<Reading> readings;
  for (const SignalId& id : universe) {
    if (present(rng)) readings.push_back({id, UniformInt(rng, -100, 0)});
  }
  return SignalVector(t, std::move(readings));
}

inline ProcessedVector RandomProcessedVector(
    std::mt19937_64& rng, const std::vector<SignalId>& universe,
    double density = 0.5) {
  std::bernoulli_distribution present(density);
  std::vector<RangeEntry> entries;
  for (const SignalId& id : universe) {
    if (!present(rng)) continue;
    int a = UniformInt(rng, -100, 0);
    int b = UniformInt(rng, -100, 0);
    entries.push_back({id, {std::min(a, b), std::max(a, b)}});
  }
  return ProcessedVector(std::move(entries));
}

// Profile with count scans starting at start and gaps in [min_gap, max_gap].
inline SignalProfile RandomProfile(std::mt19937_64& rng,
                                   const std::vector<SignalId>& universe,
                                   int count, Timestamp start, int min_gap,
                                   int max_gap, double density = 0.5) {
  std::vector<SignalVector> scans;
  Timestamp t = start;
  for (int i = 0; i < count; ++i) {
    scans.push_back(RandomScan(rng, universe, t, density));
    t += UniformInt(rng, min_gap, max_gap);
  }
  return SignalProfile(std::move(scans));
}

}  // namespace vcontact::testing

#endif  // VCONTACT_TESTS_TESTING_GENERATORS_H_
