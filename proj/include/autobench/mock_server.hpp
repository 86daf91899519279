// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>

#include "autobench/chat.hpp"
#include "autobench/mock_models.hpp"

namespace autobench {

struct MockServerOptions {
  std::string host = "127.0.0.1";
  int port = 0;  // 0 picks a free port
  MockFixtures fixtures;
  /// Mounted on /v1/chat/completions when set.
  std::shared_ptr<ScriptedBackend> chat_script;
};

/// Local HTTP server for the wire protocols:
///   POST /{route}/v1/score     oracle | random | random-<seed> | biased-<table> | unavailable
///   POST /v1/score             same as the oracle route
///   POST /v1/generate          mock generator over the fixture codebook
///   POST /v1/chat/completions  scripted backend, if mounted
/// Stops on destruction.
class MockServer {
 public:
  /// Throws TransportError when the address cannot be bound.
  explicit MockServer(MockServerOptions options);
  ~MockServer();
  MockServer(const MockServer&) = delete;
  MockServer& operator=(const MockServer&) = delete;

  int port() const noexcept;
  /// "http://host:port"
  std::string base_url() const;
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace autobench
