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

#include "vcontact/simulator.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <set>

#include "vcontact/counter_rng.h"
#include "vcontact/errors.h"

namespace vcontact::sim {
namespace {

// Transmit power is referenced to 1 m; closer devices read the same.
constexpr double kMinDistance = 1.0;

// Draw lanes within a (stream, scan, ap) counter.
constexpr std::uint64_t kShadowLane = 0;
constexpr std::uint64_t kDetectLane = 1;

std::uint64_t IdWord(const SignalId& id) {
  std::uint64_t word;
  std::memcpy(&word, id.bytes().data(), sizeof(word));
  return word;
}

Rssi RoundRssi(double value) {
  return ClampRssi(std::llround(value));
}

}  // namespace

double Distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void Environment::Validate() const {
  if (!(path_loss_exponent >= 1.5 && path_loss_exponent <= 6.0)) {
    throw InvalidInputError("path loss exponent must lie in [1.5, 6]");
  }
  if (!(shadowing_std >= 0)) {
    throw InvalidInputError("shadowing std must be >= 0");
  }
  for (const AccessPoint& ap : aps) {
    if (!std::isfinite(ap.position.x) || !std::isfinite(ap.position.y) ||
        !std::isfinite(ap.tx_power)) {
      throw InvalidInputError("access point parameters must be finite");
    }
  }
}

void Trajectory::Validate() const {
  if (waypoints.empty()) {
    throw InvalidInputError("trajectory needs at least one waypoint");
  }
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    if (waypoints[i].time <= waypoints[i - 1].time) {
      throw InvalidInputError("waypoint times must strictly increase");
    }
  }
  if (!(device.detect_rate > 0 && device.detect_rate <= 1)) {
    throw InvalidInputError("detect rate must lie in (0, 1]");
  }
}

Point Trajectory::PositionAt(Timestamp t) const {
  if (t <= waypoints.front().time) return waypoints.front().position;
  if (t >= waypoints.back().time) return waypoints.back().position;
  const auto next = std::upper_bound(
      waypoints.begin(), waypoints.end(), t,
      [](Timestamp value, const Waypoint& w) { return value < w.time; });
  const Waypoint& b = *next;
  const Waypoint& a = *(next - 1);
  const double f =
      static_cast<double>(t - a.time) / static_cast<double>(b.time - a.time);
  return {a.position.x + f * (b.position.x - a.position.x),
          a.position.y + f * (b.position.y - a.position.y)};
}

double MeanRssi(const Environment& env, const AccessPoint& ap,
                const Point& position) {
  const double d = std::max(Distance(ap.position, position), kMinDistance);
  return ap.tx_power - 10.0 * env.path_loss_exponent * std::log10(d);
}

SignalVector SampleScan(const Environment& env, const Point& position,
                        const Device& device, const ScanKey& key,
                        Timestamp timestamp) {
  const CounterRng rng(env.seed);
  std::vector<Reading> readings;
  for (std::size_t i = 0; i < env.aps.size(); ++i) {
    const AccessPoint& ap = env.aps[i];
    double rssi = MeanRssi(env, ap, position) + device.bias_db;
    if (env.shadowing_std > 0) {
      rssi += env.shadowing_std *
              rng.Gaussian(key.stream, key.scan_index, i, kShadowLane);
    }
    const Rssi reading = RoundRssi(rssi);
    if (reading < env.detection_floor) continue;
    if (device.detect_rate < 1.0 &&
        rng.Uniform({key.stream, key.scan_index, i, kDetectLane}) >=
            device.detect_rate) {
      continue;
    }
    readings.push_back({ap.id, reading});
  }
  return SignalVector(timestamp, std::move(readings));
}

SignalProfile SimulateProfile(const Environment& env,
                              const Trajectory& trajectory,
                              Seconds sampling_period, std::uint64_t stream,
                              std::string device_tag) {
  env.Validate();
  trajectory.Validate();
  if (sampling_period <= 0) {
    throw InvalidInputError("sampling period must be > 0");
  }
  const Timestamp start = trajectory.waypoints.front().time;
  const Timestamp stop = trajectory.waypoints.back().time;
  std::vector<SignalVector> scans;
  std::uint64_t index = 0;
  for (Timestamp t = start; t < stop || index == 0; t += sampling_period) {
    scans.push_back(SampleScan(env, trajectory.PositionAt(t),
                               trajectory.device, {stream, index}, t));
    ++index;
  }
  return SignalProfile(std::move(scans), std::move(device_tag));
}

PairedScenario MakePairedScenario(const Environment& env, double separation,
                                  const PairedScenarioOptions& options) {
  if (!(separation >= 0)) throw InvalidInputError("separation must be >= 0");
  const Point other{options.anchor.x + separation * std::cos(options.bearing),
                    options.anchor.y + separation * std::sin(options.bearing)};
  const Timestamp end = options.start + options.duration;
  const Trajectory reference{
      {{options.start, options.anchor}, {end, options.anchor}},
      options.reference_device};
  const Trajectory second{{{options.start, other}, {end, other}},
                          options.other_device};
  return {SimulateProfile(env, reference, options.sampling_period,
                          options.reference_stream, "reference"),
          SimulateProfile(env, second, options.sampling_period,
                          options.other_stream, "other"),
          Distance(options.anchor, other)};
}

SignalProfile FilterAccessPoints(const SignalProfile& profile, double rate,
                                 std::uint64_t seed) {
  if (!(rate >= 0 && rate <= 1)) {
    throw InvalidInputError("filter rate must lie in [0, 1]");
  }
  std::set<SignalId> ids;
  for (const SignalVector& v : profile.vectors()) {
    for (const Reading& r : v.readings()) ids.insert(r.id);
  }
  const CounterRng rng(seed);
  std::vector<std::pair<std::uint64_t, SignalId>> ranked;
  for (const SignalId& id : ids) ranked.emplace_back(rng.Bits({IdWord(id)}), id);
  std::sort(ranked.begin(), ranked.end());
  const auto remove_count = static_cast<std::size_t>(
      std::llround(rate * static_cast<double>(ranked.size())));
  std::set<SignalId> removed;
  for (std::size_t i = 0; i < remove_count; ++i) removed.insert(ranked[i].second);

  std::vector<SignalVector> scans;
  for (const SignalVector& v : profile.vectors()) {
    std::vector<Reading> kept;
    for (const Reading& r : v.readings()) {
      if (!removed.count(r.id)) kept.push_back(r);
    }
    scans.emplace_back(v.timestamp(), std::move(kept));
  }
  return SignalProfile(std::move(scans), profile.device_tag());
}

SignalProfile AddRssiNoise(const SignalProfile& profile, double std,
                           std::uint64_t seed) {
  if (!(std >= 0)) throw InvalidInputError("noise std must be >= 0");
  const CounterRng rng(seed);
  std::vector<SignalVector> scans;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const SignalVector& v = profile.vectors()[i];
    std::vector<Reading> noisy;
    for (const Reading& r : v.readings()) {
      const double noise =
          std == 0 ? 0.0 : std * rng.Gaussian(i, IdWord(r.id), 0, 0);
      noisy.push_back({r.id, RoundRssi(r.rssi + noise)});
    }
    scans.emplace_back(v.timestamp(), std::move(noisy));
  }
  return SignalProfile(std::move(scans), profile.device_tag());
}

}  // namespace vcontact::sim
