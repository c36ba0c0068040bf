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

#ifndef VCONTACT_DETECTION_H_
#define VCONTACT_DETECTION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcontact/signal.h"

namespace vcontact {

struct DetectionConfig {
  // Similarity threshold in (0, 1].
  double alpha = 0.2;
  // Close contact: at least min_exposure of contact time inside some window
  // of window_length, with each positive scan counting for sampling_period.
  Seconds window_length = 600;
  Seconds min_exposure = 300;
  Seconds sampling_period = 60;

  // Throws InvalidInputError on out-of-range values.
  void Validate() const;
};

struct ContactFlag {
  Timestamp timestamp = 0;
  bool in_contact = false;
  // Score of the matching segment when in contact, else the best score seen.
  double best_score = 0.0;
  std::optional<std::size_t> matched_profile;
  std::optional<std::size_t> matched_segment;
  std::optional<std::string> matched_case;
};

struct Episode {
  Timestamp start = 0;
  Timestamp end = 0;
  std::string case_label;
  std::size_t contact_flags = 0;
  double contact_minutes = 0.0;

  friend bool operator==(const Episode&, const Episode&) = default;
};

struct ContactReport {
  std::vector<ContactFlag> flags;
  std::vector<Episode> episodes;
};

// Per-scan contact detection. A scan is in contact when some segment whose
// window covers its timestamp scores at least alpha; profiles and segments
// are scanned in input order and the first hit is recorded.
std::vector<ContactFlag> DetectContacts(
    const SignalProfile& user, std::span<const ProcessedProfile> published,
    const DetectionConfig& config);

// Highest similarity between scan and any segment covering its timestamp,
// or 0 when no segment covers it. scan is in contact at threshold alpha iff
// this is >= alpha.
double BestCoveringScore(const SignalVector& scan,
                         std::span<const ProcessedProfile> published);

// Groups positive flags into close-contact episodes with the sliding-window
// rule. Throws InvalidInputError if flags are not in timestamp order.
ContactReport AggregateEpisodes(std::vector<ContactFlag> flags,
                                const DetectionConfig& config);

// DetectContacts followed by AggregateEpisodes.
ContactReport MatchAndNotify(const SignalProfile& user,
                             std::span<const ProcessedProfile> published,
                             const DetectionConfig& config);

}  // namespace vcontact

#endif  // VCONTACT_DETECTION_H_
