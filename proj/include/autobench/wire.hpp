// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "autobench/evaluation.hpp"
#include "autobench/generation.hpp"
#include "autobench/toolbox.hpp"
#include "autobench/url.hpp"

namespace autobench {

std::string Base64Encode(std::span<const std::uint8_t> bytes);
/// Throws ProtocolError on malformed input.
std::vector<std::uint8_t> Base64Decode(std::string_view text);

// Wire bodies. Field names are part of the protocol.
struct ScoreRequest {
  ImageBuffer image;
  std::string question;
  std::vector<std::string> choices;
};
Json EncodeScoreRequest(const ScoreRequest& req);
ScoreRequest DecodeScoreRequest(const Json& j);  // ValidationError
Json EncodeScoreResponse(const std::vector<double>& log_likelihoods);
/// ProtocolError unless the list has `expected` finite numbers.
std::vector<double> DecodeScoreResponse(const Json& j, std::size_t expected);

Json EncodeGenerateRequest(const GenerateRequest& req);
GenerateRequest DecodeGenerateRequest(const Json& j);  // ValidationError
Json EncodeGenerateResponse(const ImageBuffer& image);
/// ProtocolError unless the image decodes at width x height.
ImageBuffer DecodeGenerateResponse(const Json& j, int width, int height);

struct HttpOptions {
  std::chrono::milliseconds timeout{30000};
  int retries = 2;  // extra attempts after a timeout or 5xx
  std::chrono::milliseconds backoff{100};  // doubled per retry
};

/// POST helper shared by the clients: retries on connection failures,
/// timeouts and 5xx; other statuses fail at once. Returns the parsed body.
Json PostJson(const Url& base, const std::string& path, const Json& body,
              const HttpOptions& options, const std::vector<std::pair<std::string, std::string>>& headers = {});

/// POST {endpoint}/v1/score.
class HttpScoreClient : public ModelClient {
 public:
  HttpScoreClient(std::string name, const std::string& endpoint, HttpOptions options = {});

  const std::string& name() const override { return name_; }
  std::vector<double> Score(const ImageBuffer& image, const std::string& question,
                            const std::vector<std::string>& choices) override;

 private:
  std::string name_;
  Url endpoint_;
  HttpOptions options_;
};

/// POST {endpoint}/v1/generate.
class HttpGenerationClient : public ImageGenerator {
 public:
  explicit HttpGenerationClient(const std::string& endpoint, HttpOptions options = {});
  ImageBuffer Generate(const GenerateRequest& request) override;

 private:
  Url endpoint_;
  HttpOptions options_;
};

}  // namespace autobench
