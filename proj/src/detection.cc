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

#include "vcontact/detection.h"

#include <algorithm>
#include <map>

#include "vcontact/errors.h"
#include "vcontact/similarity.h"

namespace vcontact {

void DetectionConfig::Validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidInputError("alpha must lie in (0, 1]");
  }
  if (window_length <= 0 || min_exposure <= 0 || sampling_period <= 0) {
    throw InvalidInputError(
        "window length, minimum exposure and sampling period must be > 0");
  }
  if (min_exposure > window_length) {
    throw InvalidInputError("minimum exposure must not exceed window length");
  }
}

std::vector<ContactFlag> DetectContacts(
    const SignalProfile& user, std::span<const ProcessedProfile> published,
    const DetectionConfig& config) {
  config.Validate();
  std::vector<ContactFlag> flags;
  flags.reserve(user.size());
  for (const SignalVector& scan : user.vectors()) {
    ContactFlag flag;
    flag.timestamp = scan.timestamp();
    for (std::size_t p = 0; p < published.size() && !flag.in_contact; ++p) {
      const std::vector<Segment>& segments = published[p].segments();
      for (std::size_t s = 0; s < segments.size(); ++s) {
        // Segments are ordered by start, so nothing later can cover us.
        if (segments[s].start > scan.timestamp()) break;
        if (!segments[s].Covers(scan.timestamp())) continue;
        const double score = VcontactSimilarity(scan, segments[s].vector);
        if (score >= config.alpha) {
          flag.in_contact = true;
          flag.best_score = score;
          flag.matched_profile = p;
          flag.matched_segment = s;
          flag.matched_case = published[p].case_label();
          break;
        }
        flag.best_score = std::max(flag.best_score, score);
      }
    }
    flags.push_back(std::move(flag));
  }
  return flags;
}

double BestCoveringScore(const SignalVector& scan,
                         std::span<const ProcessedProfile> published) {
  double best = 0.0;
  for (const ProcessedProfile& profile : published) {
    for (const Segment& segment : profile.segments()) {
      if (segment.start > scan.timestamp()) break;
      if (segment.Covers(scan.timestamp())) {
        best = std::max(best, VcontactSimilarity(scan, segment.vector));
      }
    }
  }
  return best;
}

namespace {

// Majority case label among the positive flags in [begin, end); ties go to
// the label seen first.
std::string DominantCase(std::span<const ContactFlag> flags) {
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> order;
  for (const ContactFlag& f : flags) {
    if (!f.in_contact) continue;
    const std::string label = f.matched_case.value_or("");
    if (counts[label]++ == 0) order.push_back(label);
  }
  std::string best;
  std::size_t best_count = 0;
  for (const std::string& label : order) {
    if (counts[label] > best_count) {
      best = label;
      best_count = counts[label];
    }
  }
  return best;
}

}  // namespace

ContactReport AggregateEpisodes(std::vector<ContactFlag> flags,
                                const DetectionConfig& config) {
  config.Validate();
  for (std::size_t i = 1; i < flags.size(); ++i) {
    if (flags[i].timestamp < flags[i - 1].timestamp) {
      throw InvalidInputError("contact flags must be in timestamp order");
    }
  }

  // Indices of positive flags.
  std::vector<std::size_t> positives;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i].in_contact) positives.push_back(i);
  }

  // Any window's positives are a subset of those in the window that starts at
  // its first positive, so windows anchored at positives are sufficient.
  // Each qualifying window contributes [first positive, last positive];
  // overlapping contributions merge.
  struct Span {
    std::size_t first;
    std::size_t last;
  };
  std::vector<Span> merged;
  std::size_t hi = 0;
  for (std::size_t lo = 0; lo < positives.size(); ++lo) {
    const Timestamp window_end =
        flags[positives[lo]].timestamp + config.window_length;
    hi = std::max(hi, lo);
    while (hi < positives.size() && flags[positives[hi]].timestamp < window_end) {
      ++hi;
    }
    const auto count = static_cast<Seconds>(hi - lo);
    if (count * config.sampling_period < config.min_exposure) continue;
    const Span span{positives[lo], positives[hi - 1]};
    if (!merged.empty() && span.first <= merged.back().last) {
      merged.back().last = std::max(merged.back().last, span.last);
    } else {
      merged.push_back(span);
    }
  }

  ContactReport report;
  for (const Span& span : merged) {
    const std::span<const ContactFlag> covered(flags.data() + span.first,
                                               span.last - span.first + 1);
    Episode episode;
    episode.start = flags[span.first].timestamp;
    episode.end = flags[span.last].timestamp;
    episode.case_label = DominantCase(covered);
    episode.contact_flags = static_cast<std::size_t>(
        std::count_if(covered.begin(), covered.end(),
                      [](const ContactFlag& f) { return f.in_contact; }));
    episode.contact_minutes =
        static_cast<double>(episode.contact_flags * config.sampling_period) /
        60.0;
    report.episodes.push_back(std::move(episode));
  }
  report.flags = std::move(flags);
  return report;
}

ContactReport MatchAndNotify(const SignalProfile& user,
                             std::span<const ProcessedProfile> published,
                             const DetectionConfig& config) {
  return AggregateEpisodes(DetectContacts(user, published, config), config);
}

}  // namespace vcontact
