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

#include "vcontact/profile_io.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <vector>

#include "vcontact/errors.h"

namespace vcontact {
namespace {

constexpr std::string_view kMagic = "vcontact/1";
constexpr std::string_view kSignalKind = "signal";
constexpr std::string_view kProcessedKind = "processed";

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t next = line.find(' ', pos);
    const std::size_t end = next == std::string_view::npos ? line.size() : next;
    fields.push_back(line.substr(pos, end - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return fields;
}

template <typename Int>
std::optional<Int> ParseInt(std::string_view text) {
  Int value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (text.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

// Splits "a..b" into its two halves.
bool SplitRange(std::string_view text, std::string_view* lo,
                std::string_view* hi) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) return false;
  *lo = text.substr(0, dots);
  *hi = text.substr(dots + 2);
  return true;
}

class LineReader {
 public:
  explicit LineReader(std::string_view bytes) : rest_(bytes) {}

  // Returns false at end of input. A final line must be newline-terminated.
  bool Next(std::string_view* line) {
    if (rest_.empty()) return false;
    ++number_;
    const std::size_t nl = rest_.find('\n');
    if (nl == std::string_view::npos) {
      throw ParseError(number_, "line", "missing trailing newline");
    }
    *line = rest_.substr(0, nl);
    rest_.remove_prefix(nl + 1);
    return true;
  }

  int number() const { return number_; }

 private:
  std::string_view rest_;
  int number_ = 0;
};

struct Header {
  std::string_view kind;
  std::string annotation;
};

Header ParseHeader(LineReader& reader) {
  std::string_view line;
  if (!reader.Next(&line)) throw ParseError(1, "header", "empty input");
  const std::vector<std::string_view> fields = SplitFields(line);
  if (fields.size() < 2 || fields.size() > 3 || fields[0] != kMagic) {
    throw ParseError(1, "header",
                     "expected 'vcontact/1 signal|processed', got '" +
                         std::string(line) + "'");
  }
  Header header{fields[1], {}};
  if (header.kind != kSignalKind && header.kind != kProcessedKind) {
    throw ParseError(1, "header",
                     "unknown profile kind '" + std::string(header.kind) + "'");
  }
  if (fields.size() == 3) {
    const std::string_view key =
        header.kind == kSignalKind ? "tag=" : "label=";
    const std::string field(key.substr(0, key.size() - 1));
    if (fields[2].substr(0, key.size()) != key ||
        !UnescapeToken(fields[2].substr(key.size()), &header.annotation)) {
      throw ParseError(1, field,
                       "malformed annotation '" + std::string(fields[2]) + "'");
    }
  }
  return header;
}

SignalId ParseId(std::string_view text, int line) {
  const std::optional<SignalId> id = SignalId::FromHex(text);
  if (!id) {
    throw ParseError(line, "id",
                     "expected 64 lowercase hex digits, got '" +
                         std::string(text) + "'");
  }
  return *id;
}

Rssi ParseRssi(std::string_view text, int line, const char* field) {
  const std::optional<long long> value = ParseInt<long long>(text);
  if (!value) {
    throw ParseError(line, field,
                     "expected an integer, got '" + std::string(text) + "'");
  }
  if (*value < kWeakSignalFloor || *value > kRssiCeiling) {
    throw ParseError(line, field,
                     "value " + std::to_string(*value) +
                         " outside [-100, 0]");
  }
  return static_cast<Rssi>(*value);
}

Timestamp ParseTime(std::string_view text, int line, const char* field) {
  const std::optional<Timestamp> value = ParseInt<Timestamp>(text);
  if (!value) {
    throw ParseError(line, field,
                     "expected an integer timestamp, got '" +
                         std::string(text) + "'");
  }
  return *value;
}

void CheckUniqueIds(std::vector<SignalId> ids, int line) {
  std::sort(ids.begin(), ids.end());
  const auto dup = std::adjacent_find(ids.begin(), ids.end());
  if (dup != ids.end()) {
    throw ParseError(line, "id", "duplicate signal id " + dup->ToHex());
  }
}

SignalProfile ParseSignalBody(LineReader& reader, std::string tag) {
  std::vector<SignalVector> vectors;
  std::string_view line;
  while (reader.Next(&line)) {
    const int n = reader.number();
    const std::vector<std::string_view> fields = SplitFields(line);
    if (fields[0].substr(0, 2) != "t=") {
      throw ParseError(n, "t", "record must start with 't=<epoch>'");
    }
    const Timestamp t = ParseTime(fields[0].substr(2), n, "t");
    if (!vectors.empty() && t <= vectors.back().timestamp()) {
      throw ParseError(n, "t",
                       "timestamp " + std::to_string(t) +
                           " does not increase past " +
                           std::to_string(vectors.back().timestamp()));
    }
    std::vector<Reading> readings;
    std::vector<SignalId> ids;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const std::size_t colon = fields[i].find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(n, "id",
                         "expected '<id>:<rssi>', got '" +
                             std::string(fields[i]) + "'");
      }
      const SignalId id = ParseId(fields[i].substr(0, colon), n);
      readings.push_back({id, ParseRssi(fields[i].substr(colon + 1), n,
                                        "rssi")});
      ids.push_back(id);
    }
    CheckUniqueIds(std::move(ids), n);
    vectors.emplace_back(t, std::move(readings));
  }
  return SignalProfile(std::move(vectors), std::move(tag));
}

ProcessedProfile ParseProcessedBody(LineReader& reader, std::string label) {
  std::vector<Segment> segments;
  std::string_view line;
  while (reader.Next(&line)) {
    const int n = reader.number();
    const std::vector<std::string_view> fields = SplitFields(line);
    std::string_view lo, hi;
    if (fields[0].substr(0, 2) != "t=" ||
        !SplitRange(fields[0].substr(2), &lo, &hi)) {
      throw ParseError(n, "t", "record must start with 't=<start>..<end>'");
    }
    Segment segment;
    segment.start = ParseTime(lo, n, "start");
    segment.end = ParseTime(hi, n, "end");
    if (segment.start >= segment.end) {
      throw ParseError(n, "end",
                       "window end " + std::to_string(segment.end) +
                           " is not after start " +
                           std::to_string(segment.start));
    }
    if (!segments.empty() && segment.start < segments.back().start) {
      throw ParseError(n, "start",
                       "segment start " + std::to_string(segment.start) +
                           " precedes previous start " +
                           std::to_string(segments.back().start));
    }
    std::vector<RangeEntry> entries;
    std::vector<SignalId> ids;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const std::size_t colon = fields[i].find(':');
      if (colon == std::string_view::npos ||
          !SplitRange(fields[i].substr(colon + 1), &lo, &hi)) {
        throw ParseError(n, "id",
                         "expected '<id>:<min>..<max>', got '" +
                             std::string(fields[i]) + "'");
      }
      RangeEntry entry{ParseId(fields[i].substr(0, colon), n),
                       {ParseRssi(lo, n, "min"), ParseRssi(hi, n, "max")}};
      if (entry.range.min > entry.range.max) {
        throw ParseError(n, "min",
                         "rssiMin " + std::to_string(entry.range.min) +
                             " exceeds rssiMax " +
                             std::to_string(entry.range.max));
      }
      ids.push_back(entry.id);
      entries.push_back(entry);
    }
    CheckUniqueIds(std::move(ids), n);
    segment.vector = ProcessedVector(std::move(entries));
    segments.push_back(std::move(segment));
  }
  return ProcessedProfile(std::move(segments), std::move(label));
}

void AppendHeader(std::string_view kind, std::string_view key,
                  const std::string& annotation, std::string* out) {
  out->append(kMagic);
  out->push_back(' ');
  out->append(kind);
  if (!annotation.empty()) {
    out->push_back(' ');
    out->append(key);
    out->append(EscapeToken(annotation));
  }
  out->push_back('\n');
}

}  // namespace

std::string EscapeToken(std::string_view raw) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (const char c : raw) {
    const auto byte = static_cast<unsigned char>(c);
    if (byte <= 0x20 || byte >= 0x7f || c == '%') {
      out.push_back('%');
      out.push_back(kHex[byte >> 4]);
      out.push_back(kHex[byte & 0xf]);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

bool UnescapeToken(std::string_view token, std::string* out) {
  out->clear();
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (token[i] != '%') {
      out->push_back(token[i]);
      continue;
    }
    if (i + 2 >= token.size()) return false;
    unsigned value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data() + i + 1, token.data() + i + 3, value, 16);
    if (ec != std::errc() || ptr != token.data() + i + 3) return false;
    out->push_back(static_cast<char>(value));
    i += 2;
  }
  return true;
}

std::string SerializeProfile(const SignalProfile& profile) {
  std::string out;
  AppendHeader(kSignalKind, "tag=", profile.device_tag(), &out);
  for (const SignalVector& v : profile.vectors()) {
    out.append("t=");
    out.append(std::to_string(v.timestamp()));
    for (const Reading& r : v.readings()) {
      out.push_back(' ');
      out.append(r.id.ToHex());
      out.push_back(':');
      out.append(std::to_string(r.rssi));
    }
    out.push_back('\n');
  }
  return out;
}

std::string SerializeProfile(const ProcessedProfile& profile) {
  std::string out;
  AppendHeader(kProcessedKind, "label=", profile.case_label(), &out);
  for (const Segment& s : profile.segments()) {
    out.append("t=");
    out.append(std::to_string(s.start));
    out.append("..");
    out.append(std::to_string(s.end));
    for (const RangeEntry& e : s.vector.entries()) {
      out.push_back(' ');
      out.append(e.id.ToHex());
      out.push_back(':');
      out.append(std::to_string(e.range.min));
      out.append("..");
      out.append(std::to_string(e.range.max));
    }
    out.push_back('\n');
  }
  return out;
}

AnyProfile ParseProfile(std::string_view bytes) {
  LineReader reader(bytes);
  Header header = ParseHeader(reader);
  if (header.kind == kSignalKind) {
    return ParseSignalBody(reader, std::move(header.annotation));
  }
  return ParseProcessedBody(reader, std::move(header.annotation));
}

SignalProfile ParseSignalProfile(std::string_view bytes) {
  AnyProfile any = ParseProfile(bytes);
  if (auto* p = std::get_if<SignalProfile>(&any)) return std::move(*p);
  throw ParseError(1, "header", "expected a signal profile");
}

ProcessedProfile ParseProcessedProfile(std::string_view bytes) {
  AnyProfile any = ParseProfile(bytes);
  if (auto* p = std::get_if<ProcessedProfile>(&any)) return std::move(*p);
  throw ParseError(1, "header", "expected a processed profile");
}

}  // namespace vcontact
