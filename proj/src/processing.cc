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

#include "vcontact/processing.h"

#include <algorithm>
#include <map>

#include <spdlog/spdlog.h>

#include "vcontact/errors.h"

namespace vcontact {

ProcessedVector BuildProcessedVector(const SignalVector& a,
                                     const SignalVector& b) {
  std::vector<RangeEntry> entries;
  entries.reserve(a.size() + b.size());
  auto ia = a.readings().begin();
  auto ib = b.readings().begin();
  const auto ea = a.readings().end();
  const auto eb = b.readings().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->id < ib->id)) {
      entries.push_back({ia->id, {kWeakSignalFloor, ia->rssi}});
      ++ia;
    } else if (ia == ea || ib->id < ia->id) {
      entries.push_back({ib->id, {kWeakSignalFloor, ib->rssi}});
      ++ib;
    } else {
      entries.push_back({ia->id,
                         {std::min(ia->rssi, ib->rssi),
                          std::max(ia->rssi, ib->rssi)}});
      ++ia;
      ++ib;
    }
  }
  return ProcessedVector(std::move(entries));
}

ProcessedProfile BuildCaseProfile(const SignalProfile& profile,
                                  const LifespanSchedule& lifespans,
                                  std::string case_label,
                                  const CaseProcessingOptions& options,
                                  std::vector<std::size_t>* pair_index) {
  const std::vector<SignalVector>& scans = profile.vectors();
  if (scans.size() < 2) {
    throw InsufficientDataError(
        "case profile needs at least 2 scans, got " +
        std::to_string(scans.size()));
  }
  lifespans.CheckCompatible(scans.size());
  if (pair_index != nullptr) pair_index->clear();

  std::vector<Segment> segments;
  segments.reserve(scans.size() - 1);
  for (std::size_t i = 0; i + 1 < scans.size(); ++i) {
    const Timestamp t0 = scans[i].timestamp();
    const Timestamp t1 = scans[i + 1].timestamp();
    if (options.max_gap && t1 - t0 > *options.max_gap) {
      spdlog::info("skipping scan pair {}..{}: gap of {} s exceeds {} s", t0,
                   t1, t1 - t0, *options.max_gap);
      continue;
    }
    segments.push_back({BuildProcessedVector(scans[i], scans[i + 1]), t0,
                        t1 + lifespans.ForInterval(i)});
    if (pair_index != nullptr) pair_index->push_back(i);
  }
  return ProcessedProfile(std::move(segments), std::move(case_label));
}

ProcessedProfile BuildAreaProfile(const SignalProfile& survey,
                                  Timestamp stay_start, Timestamp stay_end,
                                  Seconds lifespan, std::string case_label) {
  if (survey.empty()) {
    throw InsufficientDataError("area profile needs at least 1 survey scan");
  }
  if (stay_start >= stay_end) {
    throw InvalidInputError("area stay must satisfy start < end");
  }
  if (lifespan < 0) throw InvalidInputError("lifespan must be >= 0");

  std::map<SignalId, RssiRange> ranges;
  for (const SignalVector& v : survey.vectors()) {
    for (const Reading& r : v.readings()) {
      auto [it, inserted] = ranges.try_emplace(r.id, RssiRange{r.rssi, r.rssi});
      if (!inserted) {
        it->second.min = std::min(it->second.min, r.rssi);
        it->second.max = std::max(it->second.max, r.rssi);
      }
    }
  }
  std::vector<RangeEntry> entries;
  entries.reserve(ranges.size());
  for (const auto& [id, range] : ranges) entries.push_back({id, range});

  std::vector<Segment> segment;
  segment.push_back(
      {ProcessedVector(std::move(entries)), stay_start, stay_end + lifespan});
  return ProcessedProfile(std::move(segment), std::move(case_label));
}

}  // namespace vcontact
