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

#include "vcontact/report_io.h"

#include <algorithm>
#include <cstdio>

#include "vcontact/profile_io.h"

namespace vcontact {
namespace {

std::string Format(const char* fmt, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, value);
  return buf;
}

template <typename T>
std::string OrDash(const std::optional<T>& value) {
  return value ? std::to_string(*value) : "-";
}

std::string LabelToken(const std::string& label) {
  return label.empty() ? "-" : EscapeToken(label);
}

}  // namespace

std::string SerializeReport(const ContactReport& report) {
  std::string out;
  for (const ContactFlag& f : report.flags) {
    out += "flag t=" + std::to_string(f.timestamp) +
           " contact=" + (f.in_contact ? "1" : "0") +
           " score=" + Format("%.6f", f.best_score) +
           " profile=" + OrDash(f.matched_profile) +
           " segment=" + OrDash(f.matched_segment) +
           " case=" + LabelToken(f.matched_case.value_or("")) + "\n";
  }
  for (const Episode& e : report.episodes) {
    out += "episode start=" + std::to_string(e.start) +
           " end=" + std::to_string(e.end) +
           " case=" + LabelToken(e.case_label) +
           " flags=" + std::to_string(e.contact_flags) +
           " minutes=" + Format("%.2f", e.contact_minutes) + "\n";
  }
  return out;
}

nlohmann::json ReportSummary(const ContactReport& report) {
  double minutes = 0;
  for (const Episode& e : report.episodes) minutes += e.contact_minutes;
  return {
      {"flags", report.flags.size()},
      {"contact_flags",
       std::count_if(report.flags.begin(), report.flags.end(),
                     [](const ContactFlag& f) { return f.in_contact; })},
      {"episodes", report.episodes.size()},
      {"exposure_minutes", minutes},
  };
}

}  // namespace vcontact
