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

// Publication of processed profiles. Confirmed cases' profiles go into an
// append-only store on the server; devices pull every record past their
// cursor and match locally, so nothing about the user travels upstream.

#ifndef VCONTACT_EXCHANGE_H_
#define VCONTACT_EXCHANGE_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "vcontact/detection.h"
#include "vcontact/errors.h"
#include "vcontact/signal.h"

namespace vcontact::exchange {

using RecordId = std::uint64_t;
using Clock = std::function<Timestamp()>;

// Wall clock in epoch seconds.
Timestamp SystemNow();

struct PublishedRecord {
  RecordId id = 0;
  Timestamp published_at = 0;
  std::string bytes;

  friend bool operator==(const PublishedRecord&,
                         const PublishedRecord&) = default;
};

// The log could not be written; nothing from the failed call is visible.
class StorageError : public Error {
 public:
  using Error::Error;
};

// The server could not be reached or answered with a server-side failure.
class TransportError : public Error {
 public:
  using Error::Error;
};

// The server refused the request (4xx).
class RejectedError : public Error {
 public:
  RejectedError(int status, const std::string& body)
      : Error("rejected with status " + std::to_string(status) + ": " + body),
        status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

// Another sync holds the device's state directory.
class SyncBusyError : public Error {
 public:
  using Error::Error;
};

struct StoreOptions {
  Seconds retention = 28 * 24 * 3600;
  // fsync after every append.
  bool durable = true;
};

// Append-only record log in a directory. Opening replays the log; a torn
// final frame left by a crash is cut off. Publishes serialize through the
// log, so record ids follow acknowledgment order.
class RecordStore {
 public:
  explicit RecordStore(std::filesystem::path dir, StoreOptions options = {},
                       Clock clock = SystemNow);
  ~RecordStore();
  RecordStore(const RecordStore&) = delete;
  RecordStore& operator=(const RecordStore&) = delete;

  // Validates bytes as a processed profile (ParseError otherwise) and
  // appends them. Byte-identical bytes that are still retained return the
  // existing id. Throws StorageError if the append fails.
  RecordId Publish(std::string_view bytes);

  // Retained records with id > after, ascending.
  std::vector<PublishedRecord> FetchSince(RecordId after) const;

  RecordId LatestId() const;
  const std::filesystem::path& log_path() const { return log_path_; }

 private:
  void Replay();
  bool Expired(const PublishedRecord& record, Timestamp now) const;

  std::filesystem::path log_path_;
  StoreOptions options_;
  Clock clock_;
  int fd_ = -1;
  std::uint64_t log_size_ = 0;
  std::mutex append_mu_;
  mutable std::shared_mutex records_mu_;
  std::vector<PublishedRecord> records_;
  std::map<std::string, RecordId> by_digest_;
};

// Wire framing of fetch responses: per record
// "record <id> <publishedAt> <length>\n<bytes>\n".
std::string EncodeFrames(const std::vector<PublishedRecord>& records);
// Throws ParseError (field "frame") on malformed input.
std::vector<PublishedRecord> DecodeFrames(std::string_view body);

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Minimal request interface so clients can run over HTTP or a test double.
// Implementations throw TransportError when no response arrives.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpResponse Get(const std::string& path) = 0;
  virtual HttpResponse Post(const std::string& path, const std::string& body,
                            const std::map<std::string, std::string>& headers) = 0;
};

struct RetryPolicy {
  int max_attempts = 4;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::milliseconds max_backoff{5000};
  // Injected for tests; defaults to sleeping the thread.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// Retries transport failures and 5xx answers with doubling backoff; 4xx
// answers throw RejectedError immediately.
class ExchangeClient {
 public:
  explicit ExchangeClient(Transport& transport, RetryPolicy retry = {});

  RecordId Publish(const std::string& profile_bytes,
                   const std::string& upload_token = {});
  std::vector<PublishedRecord> FetchSince(RecordId after);

 private:
  HttpResponse WithRetry(const std::function<HttpResponse()>& call);

  Transport& transport_;
  RetryPolicy retry_;
};

struct SyncResult {
  ContactReport report;
  std::size_t new_records = 0;
  RecordId cursor = 0;
};

// One sync pass for a device whose state lives in state_dir: the cursor
// file, the cache of fetched profiles and a lock file. Fetches records past
// the cursor, matches user against every cached profile, then stores new
// profiles and the advanced cursor, each by atomic rename. Any failure
// before that point leaves state_dir untouched. Throws SyncBusyError if
// another pass holds the lock.
SyncResult ClientSync(const std::filesystem::path& state_dir,
                      ExchangeClient& client, const SignalProfile& user,
                      const DetectionConfig& config);

// Cursor recorded in state_dir, 0 when none.
RecordId ReadCursor(const std::filesystem::path& state_dir);

}  // namespace vcontact::exchange

#endif  // VCONTACT_EXCHANGE_H_
