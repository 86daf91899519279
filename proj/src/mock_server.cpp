// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/mock_server.hpp"

#include <sys/socket.h>

#include <atomic>
#include <thread>

#include <httplib.h>

#include "autobench/errors.hpp"
#include "autobench/mock_generator.hpp"
#include "autobench/wire.hpp"

namespace autobench {

struct MockServer::Impl {
  MockServerOptions options;
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::unique_ptr<MockGenerator> generator;
  std::atomic<int> chat_calls{0};
};

namespace {

void Reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void ReplyError(httplib::Response& res, int status, const std::string& message) {
  Reply(res, status, Json{{"error", message}});
}

Json ParseBody(const httplib::Request& req) {
  try {
    return Json::parse(req.body);
  } catch (const Json::parse_error&) {
    throw ValidationError("/: request body is not JSON");
  }
}

void HandleScore(const MockFixtures& fixtures, const std::string& route,
                 const httplib::Request& req, httplib::Response& res) {
  if (route == "unavailable") return ReplyError(res, 503, "route is configured as unavailable");
  auto model = MakeMockModel(route, route, fixtures);
  if (!model) return ReplyError(res, 404, "unknown model route \"" + route + "\"");
  try {
    const ScoreRequest sr = DecodeScoreRequest(ParseBody(req));
    Reply(res, 200, EncodeScoreResponse(model->Score(sr.image, sr.question, sr.choices)));
  } catch (const ValidationError& e) {
    ReplyError(res, 400, e.what());
  }
}

}  // namespace

MockServer::MockServer(MockServerOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  impl_->generator = std::make_unique<MockGenerator>(impl_->options.fixtures.codebook);
  auto& srv = impl_->server;
  Impl* self = impl_.get();

  // Plain SO_REUSEADDR: a second server on a busy port must fail to bind.
  srv.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });

  srv.Post(R"(/([A-Za-z0-9_.\-]+)/v1/score)", [self](const httplib::Request& req,
                                                      httplib::Response& res) {
    HandleScore(self->options.fixtures, req.matches[1].str(), req, res);
  });
  srv.Post("/v1/score", [self](const httplib::Request& req, httplib::Response& res) {
    HandleScore(self->options.fixtures, "oracle", req, res);
  });
  srv.Post("/v1/generate", [self](const httplib::Request& req, httplib::Response& res) {
    try {
      const GenerateRequest gr = DecodeGenerateRequest(ParseBody(req));
      Reply(res, 200, EncodeGenerateResponse(self->generator->Generate(gr)));
    } catch (const ValidationError& e) {
      ReplyError(res, 400, e.what());
    }
  });
  srv.Post("/v1/chat/completions", [self](const httplib::Request& req, httplib::Response& res) {
    if (!self->options.chat_script) return ReplyError(res, 404, "no chat script mounted");
    std::string schema;
    std::vector<Message> messages;
    try {
      const Json body = ParseBody(req);
      if (body.contains("tool_choice") && body["tool_choice"].is_object()) {
        schema = body["tool_choice"]["function"]["name"].get<std::string>();
      } else if (body.contains("tools") && !body["tools"].empty()) {
        schema = body["tools"][0]["function"]["name"].get<std::string>();
      }
      for (const auto& m : body.value("messages", Json::array())) {
        messages.push_back({m.value("role", ""), m.value("content", "")});
      }
    } catch (const std::exception& e) {
      return ReplyError(res, 400, e.what());
    }
    try {
      const std::string args = self->options.chat_script->Next(schema, messages);
      const int n = ++self->chat_calls;
      Json call = {{"id", "call_" + std::to_string(n)},
                   {"type", "function"},
                   {"function", {{"name", schema}, {"arguments", args}}}};
      Json message = {{"role", "assistant"}, {"content", nullptr}, {"tool_calls", Json::array({call})}};
      Reply(res, 200,
            Json{{"id", "scripted-" + std::to_string(n)},
                 {"object", "chat.completion"},
                 {"choices", Json::array({Json{{"index", 0},
                                               {"message", message},
                                               {"finish_reason", "tool_calls"}}})}});
    } catch (const ScriptMismatch& e) {
      ReplyError(res, 409, e.what());
    } catch (const TransportError& e) {
      ReplyError(res, 400, e.what());
    }
  });

  const auto& host = impl_->options.host;
  if (impl_->options.port == 0) {
    impl_->port = srv.bind_to_any_port(host);
    if (impl_->port <= 0) throw TransportError("cannot bind an ephemeral port on " + host);
  } else {
    if (!srv.bind_to_port(host, impl_->options.port)) {
      throw TransportError("cannot bind " + host + ":" + std::to_string(impl_->options.port) +
                           " (port in use?)");
    }
    impl_->port = impl_->options.port;
  }
  impl_->thread = std::thread([self] { self->server.listen_after_bind(); });
  srv.wait_until_ready();
}

MockServer::~MockServer() { Stop(); }

int MockServer::port() const noexcept { return impl_->port; }

std::string MockServer::base_url() const {
  return "http://" + impl_->options.host + ":" + std::to_string(impl_->port);
}

void MockServer::Stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace autobench
