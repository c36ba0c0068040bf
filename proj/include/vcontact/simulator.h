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

// Synthetic WiFi scans from a log-distance path-loss model with Gaussian
// shadowing. Every draw is keyed by (environment seed, stream, scan index,
// access point), so equal inputs always give bit-identical scans.

#ifndef VCONTACT_SIMULATOR_H_
#define VCONTACT_SIMULATOR_H_

#include <cstdint>
#include <string>
#include <vector>

#include "vcontact/signal.h"

namespace vcontact::sim {

struct Point {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

double Distance(const Point& a, const Point& b);

struct AccessPoint {
  SignalId id;
  Point position;
  // Received power at 1 m, dBm.
  double tx_power = -40;
};

struct Environment {
  std::vector<AccessPoint> aps;
  double path_loss_exponent = 2.5;
  // Per-scan Gaussian shadowing, dB.
  double shadowing_std = 3.0;
  // Readings weaker than this are not reported, dBm.
  double detection_floor = -90;
  std::uint64_t seed = 0;

  // Throws InvalidInputError on parameters outside their valid ranges.
  void Validate() const;
};

// Radio characteristics of one phone.
struct Device {
  double bias_db = 0;
  // Probability that an audible AP is actually reported in a scan.
  double detect_rate = 1.0;

  friend bool operator==(const Device&, const Device&) = default;
};

struct Waypoint {
  Timestamp time = 0;
  Point position;
};

struct Trajectory {
  std::vector<Waypoint> waypoints;
  Device device;

  // Throws InvalidInputError unless waypoint times strictly increase, there
  // is at least one waypoint and detect_rate is in (0, 1].
  void Validate() const;
  // Piecewise-linear position; clamps outside the waypoint times.
  Point PositionAt(Timestamp t) const;
};

// Identifies an independent noise stream: one per simulated device run.
struct ScanKey {
  std::uint64_t stream = 0;
  std::uint64_t scan_index = 0;
};

// Mean received power of ap at position before noise and bias.
double MeanRssi(const Environment& env, const AccessPoint& ap,
                const Point& position);

// One scan at position. Each AP's reading is the path-loss mean plus
// shadowing plus device bias, rounded and clamped to [-100, 0]; it is
// reported if at least the detection floor and a detect_rate draw succeeds.
SignalVector SampleScan(const Environment& env, const Point& position,
                        const Device& device, const ScanKey& key,
                        Timestamp timestamp);

// Scans every sampling_period seconds from the first waypoint time up to
// (excluding) the last one; a single waypoint yields one scan.
SignalProfile SimulateProfile(const Environment& env,
                              const Trajectory& trajectory,
                              Seconds sampling_period, std::uint64_t stream,
                              std::string device_tag = {});

struct PairedScenario {
  SignalProfile reference;
  SignalProfile other;
  double distance = 0;
};

struct PairedScenarioOptions {
  Point anchor;
  // Direction from anchor to the second device, radians.
  double bearing = 0;
  Timestamp start = 0;
  Seconds duration = 600;
  Seconds sampling_period = 5;
  Device reference_device;
  Device other_device;
  std::uint64_t reference_stream = 1;
  std::uint64_t other_stream = 2;
};

// Two stationary devices separation meters apart scanning over the same
// period with independent noise streams.
PairedScenario MakePairedScenario(const Environment& env, double separation,
                                  const PairedScenarioOptions& options);

// Removes round(rate * #ids) of the profile's distinct ids from every scan,
// chosen uniformly at random per seed.
SignalProfile FilterAccessPoints(const SignalProfile& profile, double rate,
                                 std::uint64_t seed);

// Adds N(0, std) to every reading, then rounds and clamps.
SignalProfile AddRssiNoise(const SignalProfile& profile, double std,
                           std::uint64_t seed);

}  // namespace vcontact::sim

#endif  // VCONTACT_SIMULATOR_H_
