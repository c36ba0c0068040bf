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

#ifndef VCONTACT_SIGNAL_ID_H_
#define VCONTACT_SIGNAL_ID_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace vcontact {

// One-way digest of an access point MAC address. Ordering is byte-wise,
// which coincides with the lexicographic order of the hex encoding.
class SignalId {
 public:
  static constexpr std::size_t kSize = 32;
  using Bytes = std::array<std::uint8_t, kSize>;

  SignalId() : bytes_{} {}
  explicit SignalId(const Bytes& bytes) : bytes_(bytes) {}

  // Parses 64 lowercase hex characters. Returns nullopt otherwise.
  static std::optional<SignalId> FromHex(std::string_view hex);

  const Bytes& bytes() const { return bytes_; }
  std::string ToHex() const;

  friend auto operator<=>(const SignalId&, const SignalId&) = default;

 private:
  Bytes bytes_;
};

// Returns true if mac has the form "AA:BB:CC:DD:EE:FF" (uppercase hex).
bool IsCanonicalMac(std::string_view mac);

// SHA-256 of data.
SignalId::Bytes Sha256(std::string_view data);

// SHA-256(salt || mac). Throws InvalidInputError for non-canonical MACs.
SignalId HashMac(std::string_view mac, std::string_view salt);

}  // namespace vcontact

#endif  // VCONTACT_SIGNAL_ID_H_
