// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/wire.hpp"

#include <cmath>
#include <thread>

#include <httplib.h>
#include <openssl/evp.h>

#include "autobench/errors.hpp"

namespace autobench {

std::string Base64Encode(std::span<const std::uint8_t> bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), bytes.data(),
                                static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::vector<std::uint8_t> Base64Decode(std::string_view text) {
  if (text.size() % 4 != 0) throw ProtocolError("base64 length is not a multiple of 4");
  std::vector<std::uint8_t> out(text.size() / 4 * 3);
  const int n = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(text.data()),
                                static_cast<int>(text.size()));
  if (n < 0) throw ProtocolError("malformed base64");
  // EVP_DecodeBlock keeps the zero bytes that stand in for padding.
  std::size_t pad = 0;
  if (!text.empty() && text.back() == '=') ++pad;
  if (text.size() > 1 && text[text.size() - 2] == '=') ++pad;
  out.resize(static_cast<std::size_t>(n) - pad);
  return out;
}

namespace {

ImageBuffer DecodeBase64Png(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string()) {
    throw ValidationError(std::string("/") + field + ": expected base64 string");
  }
  const auto bytes = Base64Decode(j[field].get<std::string>());
  return DecodeImage(bytes);
}

}  // namespace

Json EncodeScoreRequest(const ScoreRequest& req) {
  Json j = Json::object();
  j["image"] = Base64Encode(EncodePng(req.image));
  j["question"] = req.question;
  j["choices"] = req.choices;
  return j;
}

ScoreRequest DecodeScoreRequest(const Json& j) {
  if (!j.is_object()) throw ValidationError("/: expected object");
  ScoreRequest req;
  try {
    req.image = DecodeBase64Png(j, "image");
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(std::string("/image: ") + e.what());
  }
  if (!j.contains("question") || !j["question"].is_string()) {
    throw ValidationError("/question: expected string");
  }
  req.question = j["question"].get<std::string>();
  if (!j.contains("choices") || !j["choices"].is_array() || j["choices"].empty()) {
    throw ValidationError("/choices: expected non-empty array");
  }
  for (const auto& c : j["choices"]) {
    if (!c.is_string()) throw ValidationError("/choices: expected strings");
    req.choices.push_back(c.get<std::string>());
  }
  return req;
}

Json EncodeScoreResponse(const std::vector<double>& log_likelihoods) {
  return Json{{"log_likelihoods", log_likelihoods}};
}

std::vector<double> DecodeScoreResponse(const Json& j, std::size_t expected) {
  if (!j.is_object() || !j.contains("log_likelihoods") || !j["log_likelihoods"].is_array()) {
    throw ProtocolError("score response lacks a log_likelihoods array");
  }
  const auto& arr = j["log_likelihoods"];
  if (arr.size() != expected) {
    throw ProtocolError("score response has " + std::to_string(arr.size()) +
                        " values for " + std::to_string(expected) + " choices");
  }
  std::vector<double> out;
  for (const auto& v : arr) {
    if (!v.is_number() || !std::isfinite(v.get<double>())) {
      throw ProtocolError("score response contains a non-finite value");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

Json EncodeGenerateRequest(const GenerateRequest& req) {
  Json j = Json::object();
  j["prompt"] = req.prompt;
  j["seed"] = req.seed;
  j["width"] = req.width;
  j["height"] = req.height;
  return j;
}

GenerateRequest DecodeGenerateRequest(const Json& j) {
  if (!j.is_object()) throw ValidationError("/: expected object");
  GenerateRequest req;
  if (!j.contains("prompt") || !j["prompt"].is_string()) throw ValidationError("/prompt: expected string");
  req.prompt = j["prompt"].get<std::string>();
  if (!j.contains("seed") || !j["seed"].is_number_integer()) throw ValidationError("/seed: expected integer");
  req.seed = j["seed"].get<std::uint64_t>();
  for (const char* k : {"width", "height"}) {
    if (!j.contains(k) || !j[k].is_number_integer()) {
      throw ValidationError(std::string("/") + k + ": expected integer");
    }
    const auto v = j[k].get<std::int64_t>();
    if (v < 1 || v > 4096) throw ValidationError(std::string("/") + k + ": must be in 1..4096");
    (std::string_view(k) == "width" ? req.width : req.height) = static_cast<int>(v);
  }
  return req;
}

Json EncodeGenerateResponse(const ImageBuffer& image) {
  return Json{{"image", Base64Encode(EncodePng(image))}};
}

ImageBuffer DecodeGenerateResponse(const Json& j, int width, int height) {
  ImageBuffer img;
  try {
    img = DecodeBase64Png(j, "image");
  } catch (const ValidationError& e) {
    throw ProtocolError(std::string("generate response: ") + e.what());
  } catch (const Error& e) {
    throw ProtocolError(std::string("generate response image does not decode: ") + e.what());
  }
  if (img.width() != width || img.height() != height) {
    throw ProtocolError("generate response is " + std::to_string(img.width()) + "x" +
                        std::to_string(img.height()) + ", requested " + std::to_string(width) +
                        "x" + std::to_string(height));
  }
  return img;
}

Json PostJson(const Url& base, const std::string& path, const Json& body,
              const HttpOptions& options,
              const std::vector<std::pair<std::string, std::string>>& headers) {
  const std::string payload = body.dump();
  httplib::Headers hdrs;
  for (const auto& [k, v] : headers) hdrs.emplace(k, v);
  std::string last_error;
  auto delay = options.backoff;
  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
    httplib::Client client(base.origin());
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options.timeout);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(options.timeout - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    client.set_write_timeout(secs.count(), usecs.count());
    auto res = client.Post(base.path + path, hdrs, payload, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw TransportError("POST " + base.origin() + base.path + path + ": HTTP " +
                           std::to_string(res->status) + ": " + res->body.substr(0, 500));
    }
    try {
      return Json::parse(res->body);
    } catch (const Json::parse_error&) {
      throw ProtocolError("POST " + base.origin() + base.path + path +
                          ": response body is not JSON");
    }
  }
  throw TransportError("POST " + base.origin() + base.path + path + " failed after " +
                       std::to_string(options.retries + 1) + " attempts: " + last_error);
}

HttpScoreClient::HttpScoreClient(std::string name, const std::string& endpoint,
                                 HttpOptions options)
    : name_(std::move(name)), endpoint_(ParseUrl(endpoint)), options_(options) {}

std::vector<double> HttpScoreClient::Score(const ImageBuffer& image, const std::string& question,
                                           const std::vector<std::string>& choices) {
  const Json body = EncodeScoreRequest({image, question, choices});
  return DecodeScoreResponse(PostJson(endpoint_, "/v1/score", body, options_), choices.size());
}

HttpGenerationClient::HttpGenerationClient(const std::string& endpoint, HttpOptions options)
    : endpoint_(ParseUrl(endpoint)), options_(options) {}

ImageBuffer HttpGenerationClient::Generate(const GenerateRequest& request) {
  if (request.width < 1 || request.height < 1) {
    throw ValidationError("generate: width and height must be positive");
  }
  const Json body = EncodeGenerateRequest(request);
  return DecodeGenerateResponse(PostJson(endpoint_, "/v1/generate", body, options_),
                                request.width, request.height);
}

}  // namespace autobench
