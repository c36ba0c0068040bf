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

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

#include "spdlog/spdlog.h"
#include "vcontact/exchange.h"
#include "vcontact/profile_io.h"
#include "vcontact/signal_id.h"

namespace vcontact::exchange {
namespace {

std::string Digest(std::string_view bytes) {
  return SignalId(Sha256(bytes)).ToHex();
}

template <typename T>
bool ParseNumber(std::string_view text, T& out) {
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && end == text.data() + text.size();
}

std::vector<std::string_view> SplitSpaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const std::size_t j = std::min(line.find(' ', i), line.size());
    out.push_back(line.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

// One frame of either format. digest is empty for wire frames.
struct Frame {
  PublishedRecord record;
  std::string digest;
  std::size_t end = 0;
};

// Reads the frame starting at pos. Returns false if the text there is not a
// complete, well-formed frame with the expected number of header fields.
bool ReadFrame(std::string_view text, std::size_t pos, std::size_t fields,
               Frame& frame) {
  const std::size_t eol = text.find('\n', pos);
  if (eol == std::string_view::npos) return false;
  const std::vector<std::string_view> parts =
      SplitSpaces(text.substr(pos, eol - pos));
  if (parts.size() != fields || parts[0] != "record") return false;
  std::size_t length = 0;
  if (!ParseNumber(parts[1], frame.record.id) ||
      !ParseNumber(parts[2], frame.record.published_at) ||
      !ParseNumber(parts[3], length)) {
    return false;
  }
  const std::size_t body = eol + 1;
  if (text.size() - body < length + 1 || text[body + length] != '\n') {
    return false;
  }
  frame.record.bytes = std::string(text.substr(body, length));
  frame.digest = fields == 5 ? std::string(parts[4]) : std::string();
  frame.end = body + length + 1;
  return true;
}

std::string LogFrame(const PublishedRecord& r, const std::string& digest) {
  std::ostringstream out;
  out << "record " << r.id << ' ' << r.published_at << ' ' << r.bytes.size()
      << ' ' << digest << '\n'
      << r.bytes << '\n';
  return out.str();
}

}  // namespace

Timestamp SystemNow() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

RecordStore::RecordStore(std::filesystem::path dir, StoreOptions options,
                         Clock clock)
    : log_path_(dir / "records.log"),
      options_(options),
      clock_(std::move(clock)) {
  if (options_.retention <= 0) {
    throw InvalidInputError("retention must be > 0");
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw StorageError("cannot create " + dir.string() + ": " + ec.message());
  fd_ = ::open(log_path_.c_str(), O_RDWR | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) {
    throw StorageError("cannot open " + log_path_.string() + ": " +
                       std::strerror(errno));
  }
  Replay();
}

RecordStore::~RecordStore() {
  if (fd_ >= 0) ::close(fd_);
}

void RecordStore::Replay() {
  std::ifstream in(log_path_, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::size_t pos = 0;
  while (pos < text.size()) {
    Frame frame;
    if (!ReadFrame(text, pos, 5, frame) ||
        frame.digest != Digest(frame.record.bytes) ||
        (!records_.empty() && frame.record.id <= records_.back().id)) {
      break;
    }
    by_digest_[frame.digest] = frame.record.id;
    records_.push_back(std::move(frame.record));
    pos = frame.end;
  }
  if (pos < text.size()) {
    spdlog::warn("record log {}: dropping {} bytes of torn tail after record {}",
                 log_path_.string(), text.size() - pos,
                 records_.empty() ? 0 : records_.back().id);
    if (::ftruncate(fd_, static_cast<off_t>(pos)) != 0) {
      throw StorageError("cannot truncate " + log_path_.string());
    }
  }
  log_size_ = pos;
}

bool RecordStore::Expired(const PublishedRecord& record, Timestamp now) const {
  return now - record.published_at > options_.retention;
}

RecordId RecordStore::Publish(std::string_view bytes) {
  ParseProcessedProfile(bytes);
  const std::string digest = Digest(bytes);

  std::lock_guard append(append_mu_);
  const Timestamp now = clock_();
  RecordId next = 1;
  {
    std::shared_lock read(records_mu_);
    if (const auto it = by_digest_.find(digest); it != by_digest_.end()) {
      const auto existing = std::lower_bound(
          records_.begin(), records_.end(), it->second,
          [](const PublishedRecord& r, RecordId id) { return r.id < id; });
      if (!Expired(*existing, now)) return existing->id;
    }
    if (!records_.empty()) next = records_.back().id + 1;
  }

  PublishedRecord record{next, now, std::string(bytes)};
  const std::string frame = LogFrame(record, digest);
  std::size_t written = 0;
  bool ok = true;
  while (written < frame.size()) {
    const ssize_t n = ::write(fd_, frame.data() + written, frame.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      ok = false;
      break;
    }
    written += static_cast<std::size_t>(n);
  }
  if (ok && options_.durable && ::fdatasync(fd_) != 0) ok = false;
  if (!ok) {
    const std::string reason = std::strerror(errno);
    if (::ftruncate(fd_, static_cast<off_t>(log_size_)) != 0) {
      spdlog::error("record log {}: cannot roll back failed append",
                    log_path_.string());
    }
    throw StorageError("append to " + log_path_.string() + " failed: " + reason);
  }
  log_size_ += frame.size();

  std::unique_lock write(records_mu_);
  by_digest_[digest] = record.id;
  records_.push_back(std::move(record));
  return next;
}

std::vector<PublishedRecord> RecordStore::FetchSince(RecordId after) const {
  const Timestamp now = clock_();
  std::shared_lock read(records_mu_);
  std::vector<PublishedRecord> out;
  auto it = std::upper_bound(
      records_.begin(), records_.end(), after,
      [](RecordId id, const PublishedRecord& r) { return id < r.id; });
  for (; it != records_.end(); ++it) {
    if (!Expired(*it, now)) out.push_back(*it);
  }
  return out;
}

RecordId RecordStore::LatestId() const {
  std::shared_lock read(records_mu_);
  return records_.empty() ? 0 : records_.back().id;
}

std::string EncodeFrames(const std::vector<PublishedRecord>& records) {
  std::ostringstream out;
  for (const PublishedRecord& r : records) {
    out << "record " << r.id << ' ' << r.published_at << ' ' << r.bytes.size()
        << '\n'
        << r.bytes << '\n';
  }
  return out.str();
}

std::vector<PublishedRecord> DecodeFrames(std::string_view body) {
  std::vector<PublishedRecord> out;
  std::size_t pos = 0;
  int line = 1;
  while (pos < body.size()) {
    Frame frame;
    if (!ReadFrame(body, pos, 4, frame)) {
      throw ParseError(line, "frame", "malformed record frame");
    }
    if (!out.empty() && frame.record.id <= out.back().id) {
      throw ParseError(line, "frame", "record ids must increase");
    }
    for (std::size_t i = pos; i < frame.end; ++i) line += body[i] == '\n';
    out.push_back(std::move(frame.record));
    pos = frame.end;
  }
  return out;
}

}  // namespace vcontact::exchange
