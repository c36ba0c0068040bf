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

// Core value types: raw WiFi scans (signal vectors and profiles) and their
// range-summarized, lifespan-annotated counterparts (processed vectors and
// profiles). All types validate their invariants on construction and are
// immutable afterwards.

#ifndef VCONTACT_SIGNAL_H_
#define VCONTACT_SIGNAL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcontact/signal_id.h"

namespace vcontact {

// Received signal strength in integer dBm.
using Rssi = int;
// Seconds since the Unix epoch, or a duration in seconds.
using Timestamp = std::int64_t;
using Seconds = std::int64_t;

// Weak-signal floor. Missing or too-weak readings take this value.
inline constexpr Rssi kWeakSignalFloor = -100;
inline constexpr Rssi kRssiCeiling = 0;

constexpr Rssi ClampRssi(long long raw) {
  if (raw < kWeakSignalFloor) return kWeakSignalFloor;
  if (raw > kRssiCeiling) return kRssiCeiling;
  return static_cast<Rssi>(raw);
}

struct Reading {
  SignalId id;
  Rssi rssi = kWeakSignalFloor;

  friend bool operator==(const Reading&, const Reading&) = default;
};

// One WiFi scan: the access points heard at a timestamp and their RSSIs.
class SignalVector {
 public:
  SignalVector() = default;
  // RSSIs are clamped into [kWeakSignalFloor, kRssiCeiling]. Throws
  // InvalidInputError if an id appears twice.
  SignalVector(Timestamp timestamp, std::vector<Reading> readings);

  Timestamp timestamp() const { return timestamp_; }
  // Sorted by id.
  std::span<const Reading> readings() const { return readings_; }
  std::size_t size() const { return readings_.size(); }
  bool empty() const { return readings_.empty(); }
  std::optional<Rssi> Find(const SignalId& id) const;

  friend bool operator==(const SignalVector&, const SignalVector&) = default;

 private:
  Timestamp timestamp_ = 0;
  std::vector<Reading> readings_;
};

// Time-ordered scans from one device or one survey walk.
class SignalProfile {
 public:
  SignalProfile() = default;
  // Throws InvalidInputError unless timestamps are strictly increasing.
  explicit SignalProfile(std::vector<SignalVector> vectors,
                         std::string device_tag = {});

  const std::vector<SignalVector>& vectors() const { return vectors_; }
  const std::string& device_tag() const { return device_tag_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }

  friend bool operator==(const SignalProfile&, const SignalProfile&) = default;

 private:
  std::vector<SignalVector> vectors_;
  std::string device_tag_;
};

struct RssiRange {
  Rssi min = kWeakSignalFloor;
  Rssi max = kWeakSignalFloor;

  bool Contains(Rssi rssi) const { return min <= rssi && rssi <= max; }
  friend bool operator==(const RssiRange&, const RssiRange&) = default;
};

struct RangeEntry {
  SignalId id;
  RssiRange range;

  friend bool operator==(const RangeEntry&, const RangeEntry&) = default;
};

// Per-AP RSSI ranges summarizing an interval between scans or a whole area.
class ProcessedVector {
 public:
  ProcessedVector() = default;
  // Throws InvalidInputError on duplicate ids, min > max, or bounds outside
  // [kWeakSignalFloor, kRssiCeiling].
  explicit ProcessedVector(std::vector<RangeEntry> entries);

  // Sorted by id.
  std::span<const RangeEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::optional<RssiRange> Find(const SignalId& id) const;

  friend bool operator==(const ProcessedVector&,
                         const ProcessedVector&) = default;

 private:
  std::vector<RangeEntry> entries_;
};

// A processed vector together with the closed time window in which it is
// considered infectious.
struct Segment {
  ProcessedVector vector;
  Timestamp start = 0;
  Timestamp end = 0;

  bool Covers(Timestamp t) const { return start <= t && t <= end; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// The published artifact of a confirmed case or an infected area.
class ProcessedProfile {
 public:
  ProcessedProfile() = default;
  // Throws InvalidInputError unless start < end for every segment and
  // segments are ordered by start. Windows may overlap.
  explicit ProcessedProfile(std::vector<Segment> segments,
                            std::string case_label = {});

  const std::vector<Segment>& segments() const { return segments_; }
  const std::string& case_label() const { return case_label_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }

  friend bool operator==(const ProcessedProfile&,
                         const ProcessedProfile&) = default;

 private:
  std::vector<Segment> segments_;
  std::string case_label_;
};

// Virus lifespan per interval between consecutive scans, or one default.
class LifespanSchedule {
 public:
  explicit LifespanSchedule(Seconds default_lifespan);
  LifespanSchedule(std::vector<Seconds> per_interval, Seconds default_lifespan);

  Seconds default_lifespan() const { return default_; }
  const std::vector<Seconds>& per_interval() const { return per_interval_; }

  // Lifespan of the interval starting at scan i.
  Seconds ForInterval(std::size_t i) const;
  // Throws InvalidInputError if a per-interval list is present and its
  // length is not vector_count - 1.
  void CheckCompatible(std::size_t vector_count) const;

 private:
  std::vector<Seconds> per_interval_;
  Seconds default_;
};

}  // namespace vcontact

#endif  // VCONTACT_SIGNAL_H_
