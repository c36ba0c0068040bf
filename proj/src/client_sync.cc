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
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>

#include "spdlog/spdlog.h"
#include "vcontact/exchange.h"
#include "vcontact/profile_io.h"

namespace vcontact::exchange {
namespace {

namespace fs = std::filesystem;

constexpr char kCursorFile[] = "cursor";
constexpr char kLockFile[] = "lock";
constexpr char kProfileDir[] = "profiles";
constexpr char kProfileSuffix[] = ".vcp";

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes next to path, flushes to disk, then renames over it.
void WriteAtomically(const fs::path& path, const std::string& bytes) {
  const fs::path tmp = path.string() + ".tmp";
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) throw Error("cannot write " + tmp.string());
  std::size_t written = 0;
  bool ok = true;
  while (ok && written < bytes.size()) {
    const ssize_t n = ::write(fd, bytes.data() + written, bytes.size() - written);
    if (n < 0 && errno == EINTR) continue;
    ok = n > 0;
    if (ok) written += static_cast<std::size_t>(n);
  }
  ok = ok && ::fsync(fd) == 0;
  ::close(fd);
  if (!ok) {
    fs::remove(tmp);
    throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

// Exclusive, non-blocking flock on the state directory's lock file.
class StateLock {
 public:
  explicit StateLock(const fs::path& dir) {
    fd_ = ::open((dir / kLockFile).c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw Error("cannot open lock in " + dir.string());
    if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
      ::close(fd_);
      throw SyncBusyError("another sync holds " + dir.string());
    }
  }
  ~StateLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  StateLock(const StateLock&) = delete;
  StateLock& operator=(const StateLock&) = delete;

 private:
  int fd_ = -1;
};

std::string ProfileFileName(RecordId id) {
  char name[32];
  std::snprintf(name, sizeof name, "%020llu%s",
                static_cast<unsigned long long>(id), kProfileSuffix);
  return name;
}

}  // namespace

ExchangeClient::ExchangeClient(Transport& transport, RetryPolicy retry)
    : transport_(transport), retry_(std::move(retry)) {
  if (retry_.max_attempts < 1) {
    throw InvalidInputError("retry policy needs at least one attempt");
  }
  if (!retry_.sleep) {
    retry_.sleep = [](std::chrono::milliseconds d) {
      std::this_thread::sleep_for(d);
    };
  }
}

HttpResponse ExchangeClient::WithRetry(
    const std::function<HttpResponse()>& call) {
  std::chrono::milliseconds backoff = retry_.initial_backoff;
  std::string last_error;
  for (int attempt = 1; attempt <= retry_.max_attempts; ++attempt) {
    try {
      HttpResponse response = call();
      if (response.status >= 200 && response.status < 300) return response;
      if (response.status >= 400 && response.status < 500) {
        throw RejectedError(response.status, response.body);
      }
      last_error = "status " + std::to_string(response.status) + ": " +
                   response.body;
    } catch (const TransportError& e) {
      last_error = e.what();
    }
    if (attempt < retry_.max_attempts) {
      spdlog::debug("exchange attempt {} failed ({}); retrying in {} ms",
                    attempt, last_error, backoff.count());
      retry_.sleep(backoff);
      backoff = std::min(backoff * 2, retry_.max_backoff);
    }
  }
  throw TransportError("giving up after " +
                       std::to_string(retry_.max_attempts) +
                       " attempts: " + last_error);
}

RecordId ExchangeClient::Publish(const std::string& profile_bytes,
                                 const std::string& upload_token) {
  std::map<std::string, std::string> headers;
  if (!upload_token.empty()) headers["X-Upload-Token"] = upload_token;
  const HttpResponse response = WithRetry([&] {
    return transport_.Post("/v1/profiles", profile_bytes, headers);
  });
  std::string_view text = response.body;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  RecordId id = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
  if (ec != std::errc() || end != text.data() + text.size() || id == 0) {
    throw TransportError("unexpected publish response: " + response.body);
  }
  return id;
}

std::vector<PublishedRecord> ExchangeClient::FetchSince(RecordId after) {
  const HttpResponse response = WithRetry([&] {
    return transport_.Get("/v1/profiles?since=" + std::to_string(after));
  });
  std::vector<PublishedRecord> records = DecodeFrames(response.body);
  for (const PublishedRecord& r : records) {
    if (r.id <= after) throw TransportError("server returned stale records");
  }
  return records;
}

RecordId ReadCursor(const fs::path& state_dir) {
  const fs::path path = state_dir / kCursorFile;
  if (!fs::exists(path)) return 0;
  std::string text = ReadFile(path);
  while (!text.empty() && text.back() == '\n') text.pop_back();
  RecordId cursor = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), cursor);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error("corrupt cursor file " + path.string());
  }
  return cursor;
}

SyncResult ClientSync(const fs::path& state_dir, ExchangeClient& client,
                      const SignalProfile& user,
                      const DetectionConfig& config) {
  config.Validate();
  fs::create_directories(state_dir / kProfileDir);
  const StateLock lock(state_dir);

  const RecordId cursor = ReadCursor(state_dir);
  const std::vector<PublishedRecord> fresh = client.FetchSince(cursor);

  std::vector<ProcessedProfile> published;
  std::vector<fs::path> cached;
  for (const fs::directory_entry& entry :
       fs::directory_iterator(state_dir / kProfileDir)) {
    if (entry.path().extension() == kProfileSuffix) cached.push_back(entry.path());
  }
  std::sort(cached.begin(), cached.end());
  for (const fs::path& path : cached) {
    published.push_back(ParseProcessedProfile(ReadFile(path)));
  }
  for (const PublishedRecord& r : fresh) {
    published.push_back(ParseProcessedProfile(r.bytes));
  }

  SyncResult result;
  result.report = MatchAndNotify(user, published, config);
  result.new_records = fresh.size();
  result.cursor = fresh.empty() ? cursor : fresh.back().id;

  // Only now does the state directory change.
  for (const PublishedRecord& r : fresh) {
    WriteAtomically(state_dir / kProfileDir / ProfileFileName(r.id), r.bytes);
  }
  if (result.cursor != cursor) {
    WriteAtomically(state_dir / kCursorFile,
                    std::to_string(result.cursor) + "\n");
  }
  return result;
}

}  // namespace vcontact::exchange
