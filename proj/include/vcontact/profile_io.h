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

// Line-oriented text format shared by both profile kinds:
//
//   vcontact/1 signal [tag=<escaped>]
//   t=<epoch> <id_hex>:<rssi> ...
//
//   vcontact/1 processed [label=<escaped>]
//   t=<start>..<end> <id_hex>:<min>..<max> ...
//
// Fields are separated by single spaces, ids are sorted, every line ends with
// '\n'. Serialization is canonical, so equal profiles give equal bytes.

#ifndef VCONTACT_PROFILE_IO_H_
#define VCONTACT_PROFILE_IO_H_

#include <string>
#include <string_view>
#include <variant>

#include "vcontact/signal.h"

namespace vcontact {

using AnyProfile = std::variant<SignalProfile, ProcessedProfile>;

std::string SerializeProfile(const SignalProfile& profile);
std::string SerializeProfile(const ProcessedProfile& profile);

// All parsers throw ParseError naming the line and field at fault.
AnyProfile ParseProfile(std::string_view bytes);
SignalProfile ParseSignalProfile(std::string_view bytes);
ProcessedProfile ParseProcessedProfile(std::string_view bytes);

// Percent-encodes '%' and every byte outside printable ASCII or equal to a
// space, so the result is a single whitespace-free token.
std::string EscapeToken(std::string_view raw);
// Inverse of EscapeToken. Returns false on a malformed escape.
bool UnescapeToken(std::string_view token, std::string* out);

}  // namespace vcontact

#endif  // VCONTACT_PROFILE_IO_H_
