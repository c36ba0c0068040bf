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

#include "vcontact/signal.h"

#include <algorithm>

#include "vcontact/errors.h"

namespace vcontact {
namespace {

template <typename Entry>
void SortUnique(std::vector<Entry>& entries, const char* what) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.id < b.id; });
  const auto dup = std::adjacent_find(
      entries.begin(), entries.end(),
      [](const Entry& a, const Entry& b) { return a.id == b.id; });
  if (dup != entries.end()) {
    throw InvalidInputError(std::string(what) + ": duplicate signal id " +
                            dup->id.ToHex());
  }
}

template <typename Entry>
const Entry* FindEntry(std::span<const Entry> entries, const SignalId& id) {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), id,
      [](const Entry& e, const SignalId& key) { return e.id < key; });
  if (it == entries.end() || it->id != id) return nullptr;
  return &*it;
}

}  // namespace

SignalVector::SignalVector(Timestamp timestamp, std::vector<Reading> readings)
    : timestamp_(timestamp), readings_(std::move(readings)) {
  for (Reading& r : readings_) r.rssi = ClampRssi(r.rssi);
  SortUnique(readings_, "signal vector");
}

std::optional<Rssi> SignalVector::Find(const SignalId& id) const {
  const Reading* r = FindEntry(readings(), id);
  if (r == nullptr) return std::nullopt;
  return r->rssi;
}

SignalProfile::SignalProfile(std::vector<SignalVector> vectors,
                             std::string device_tag)
    : vectors_(std::move(vectors)), device_tag_(std::move(device_tag)) {
  for (std::size_t i = 1; i < vectors_.size(); ++i) {
    if (vectors_[i].timestamp() <= vectors_[i - 1].timestamp()) {
      throw InvalidInputError(
          "signal profile: timestamp " +
          std::to_string(vectors_[i].timestamp()) + " at index " +
          std::to_string(i) + " does not follow " +
          std::to_string(vectors_[i - 1].timestamp()));
    }
  }
}

ProcessedVector::ProcessedVector(std::vector<RangeEntry> entries)
    : entries_(std::move(entries)) {
  for (const RangeEntry& e : entries_) {
    if (e.range.min > e.range.max || e.range.min < kWeakSignalFloor ||
        e.range.max > kRssiCeiling) {
      throw InvalidInputError(
          "processed vector: invalid range " + std::to_string(e.range.min) +
          ".." + std::to_string(e.range.max) + " for " + e.id.ToHex());
    }
  }
  SortUnique(entries_, "processed vector");
}

std::optional<RssiRange> ProcessedVector::Find(const SignalId& id) const {
  const RangeEntry* e = FindEntry(entries(), id);
  if (e == nullptr) return std::nullopt;
  return e->range;
}

ProcessedProfile::ProcessedProfile(std::vector<Segment> segments,
                                   std::string case_label)
    : segments_(std::move(segments)), case_label_(std::move(case_label)) {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (s.start >= s.end) {
      throw InvalidInputError("processed profile: segment " +
                              std::to_string(i) + " has start " +
                              std::to_string(s.start) + " >= end " +
                              std::to_string(s.end));
    }
    if (i > 0 && s.start < segments_[i - 1].start) {
      throw InvalidInputError("processed profile: segment " +
                              std::to_string(i) + " is out of start order");
    }
  }
}

LifespanSchedule::LifespanSchedule(Seconds default_lifespan)
    : LifespanSchedule({}, default_lifespan) {}

LifespanSchedule::LifespanSchedule(std::vector<Seconds> per_interval,
                                   Seconds default_lifespan)
    : per_interval_(std::move(per_interval)), default_(default_lifespan) {
  if (default_ < 0 || std::any_of(per_interval_.begin(), per_interval_.end(),
                                  [](Seconds s) { return s < 0; })) {
    throw InvalidInputError("lifespan schedule: lifespans must be >= 0");
  }
}

Seconds LifespanSchedule::ForInterval(std::size_t i) const {
  return per_interval_.empty() ? default_ : per_interval_.at(i);
}

void LifespanSchedule::CheckCompatible(std::size_t vector_count) const {
  if (!per_interval_.empty() && per_interval_.size() + 1 != vector_count) {
    throw InvalidInputError(
        "lifespan schedule: " + std::to_string(per_interval_.size()) +
        " per-interval lifespans for a profile of " +
        std::to_string(vector_count) + " vectors");
  }
}

}  // namespace vcontact
