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

#ifndef VCONTACT_REPORT_IO_H_
#define VCONTACT_REPORT_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "vcontact/detection.h"

namespace vcontact {

// One "flag" line per scan followed by one "episode" line per episode:
//
//   flag t=<epoch> contact=<0|1> score=<%.6f> profile=<i|-> segment=<i|->
//       case=<label|->
//   episode start=<epoch> end=<epoch> case=<label> flags=<n> minutes=<%.2f>
//
// (each record on one line). Labels are escaped with EscapeToken.
std::string SerializeReport(const ContactReport& report);

// {"flags", "contact_flags", "episodes", "exposure_minutes"}.
nlohmann::json ReportSummary(const ContactReport& report);

}  // namespace vcontact

#endif  // VCONTACT_REPORT_IO_H_
