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

#ifndef VCONTACT_PROCESSING_H_
#define VCONTACT_PROCESSING_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vcontact/signal.h"

namespace vcontact {

// Range summary of the interval between two consecutive scans. An id seen in
// both scans spans the two readings; an id seen in only one scan spans from
// the weak-signal floor up to its single reading.
ProcessedVector BuildProcessedVector(const SignalVector& a,
                                     const SignalVector& b);

struct CaseProcessingOptions {
  // Consecutive scans further apart than this produce no segment. nullopt
  // disables the check.
  std::optional<Seconds> max_gap = 600;
};

// Processed profile of a confirmed case that ran the app. Segment i covers
// [t_i, t_{i+1} + lifespan_i]. If pair_index is non-null it receives, per
// emitted segment, the index of the first scan of its generating pair.
// Throws InsufficientDataError for fewer than two scans.
ProcessedProfile BuildCaseProfile(const SignalProfile& profile,
                                  const LifespanSchedule& lifespans,
                                  std::string case_label = {},
                                  const CaseProcessingOptions& options = {},
                                  std::vector<std::size_t>* pair_index = nullptr);

// Processed profile of an infected area from a survey walk: one segment whose
// ranges are the per-id min/max over the whole walk, valid from stay_start
// until stay_end + lifespan. Throws InsufficientDataError for an empty walk
// and InvalidInputError unless stay_start < stay_end.
ProcessedProfile BuildAreaProfile(const SignalProfile& survey,
                                  Timestamp stay_start, Timestamp stay_end,
                                  Seconds lifespan,
                                  std::string case_label = {});

}  // namespace vcontact

#endif  // VCONTACT_PROCESSING_H_
