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

#include "vcontact/exchange_server.h"

#include <charconv>
#include <thread>

#include "httplib.h"
#include "spdlog/spdlog.h"

namespace vcontact::exchange {

struct ExchangeServer::Impl {
  Impl(RecordStore& s, ServerOptions o) : store(s), options(std::move(o)) {}
  RecordStore& store;
  ServerOptions options;
  httplib::Server server;
  std::thread thread;
};

ExchangeServer::ExchangeServer(RecordStore& store, ServerOptions options)
    : impl_(std::make_unique<Impl>(store, std::move(options))) {
  Impl& impl = *impl_;
  impl.server.Post("/v1/profiles", [&impl](const httplib::Request& req,
                                           httplib::Response& res) {
    if (impl.options.upload_token &&
        req.get_header_value("X-Upload-Token") != *impl.options.upload_token) {
      res.status = 401;
      res.set_content("missing or wrong upload token\n", "text/plain");
      return;
    }
    try {
      const RecordId id = impl.store.Publish(req.body);
      res.set_content(std::to_string(id) + "\n", "text/plain");
    } catch (const ParseError& e) {
      res.status = 400;
      res.set_content(std::string(e.what()) + "\n", "text/plain");
    } catch (const StorageError& e) {
      spdlog::error("publish failed: {}", e.what());
      res.status = 500;
      res.set_content("storage failure\n", "text/plain");
    }
  });
  impl.server.Get("/v1/profiles", [&impl](const httplib::Request& req,
                                          httplib::Response& res) {
    RecordId since = 0;
    if (req.has_param("since")) {
      const std::string value = req.get_param_value("since");
      const auto [end, ec] =
          std::from_chars(value.data(), value.data() + value.size(), since);
      if (ec != std::errc() || end != value.data() + value.size()) {
        res.status = 400;
        res.set_content("since must be a non-negative integer\n", "text/plain");
        return;
      }
    }
    res.set_content(EncodeFrames(impl.store.FetchSince(since)),
                    "application/octet-stream");
  });
}

ExchangeServer::~ExchangeServer() { Stop(); }

int ExchangeServer::Bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error("cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void ExchangeServer::Serve() { impl_->server.listen_after_bind(); }

int ExchangeServer::Start(const std::string& host, int port) {
  const int bound = Bind(host, port);
  impl_->thread = std::thread([this] { Serve(); });
  impl_->server.wait_until_ready();
  return bound;
}

void ExchangeServer::Stop() {
  if (impl_->server.is_running()) impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

struct HttpTransport::Impl {
  explicit Impl(const std::string& endpoint) : client(endpoint) {}
  httplib::Client client;
};

HttpTransport::HttpTransport(const std::string& endpoint,
                             std::chrono::milliseconds timeout)
    : impl_(std::make_unique<Impl>(endpoint)) {
  if (!impl_->client.is_valid()) {
    throw InvalidInputError("unsupported endpoint '" + endpoint + "'");
  }
  impl_->client.set_connection_timeout(timeout);
  impl_->client.set_read_timeout(timeout);
  impl_->client.set_write_timeout(timeout);
}

HttpTransport::~HttpTransport() = default;

HttpResponse HttpTransport::Get(const std::string& path) {
  const httplib::Result result = impl_->client.Get(path);
  if (!result) {
    throw TransportError("GET " + path + ": " + httplib::to_string(result.error()));
  }
  return {result->status, result->body};
}

HttpResponse HttpTransport::Post(
    const std::string& path, const std::string& body,
    const std::map<std::string, std::string>& headers) {
  httplib::Headers h;
  for (const auto& [k, v] : headers) h.emplace(k, v);
  const httplib::Result result =
      impl_->client.Post(path, h, body, "application/octet-stream");
  if (!result) {
    throw TransportError("POST " + path + ": " + httplib::to_string(result.error()));
  }
  return {result->status, result->body};
}

}  // namespace vcontact::exchange
