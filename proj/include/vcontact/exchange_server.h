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

#ifndef VCONTACT_EXCHANGE_SERVER_H_
#define VCONTACT_EXCHANGE_SERVER_H_

#include <memory>
#include <optional>
#include <string>

#include "vcontact/exchange.h"

namespace vcontact::exchange {

struct ServerOptions {
  // When set, publishes must carry it in the X-Upload-Token header.
  std::optional<std::string> upload_token;
};

// HTTP front end of a RecordStore:
//   POST /v1/profiles           body = profile bytes -> "<recordId>\n"
//   GET  /v1/profiles?since=<n> -> EncodeFrames of newer records
// Bad profiles get 400 with the parse diagnostic, a wrong token 401 and
// storage failures 500.
class ExchangeServer {
 public:
  ExchangeServer(RecordStore& store, ServerOptions options = {});
  ~ExchangeServer();

  // Binds host:port (port 0 picks a free one) and returns the bound port.
  int Bind(const std::string& host, int port);
  // Serves on the calling thread until Stop(); call after Bind.
  void Serve();
  // Bind, then serve on a background thread that is accepting on return.
  int Start(const std::string& host, int port);
  // Stops serving and joins the background thread, if any.
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Transport over HTTP to an endpoint such as "http://127.0.0.1:8080".
class HttpTransport : public Transport {
 public:
  explicit HttpTransport(const std::string& endpoint,
                         std::chrono::milliseconds timeout = std::chrono::seconds(10));
  ~HttpTransport() override;

  HttpResponse Get(const std::string& path) override;
  HttpResponse Post(const std::string& path, const std::string& body,
                    const std::map<std::string, std::string>& headers) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace vcontact::exchange

#endif  // VCONTACT_EXCHANGE_SERVER_H_
