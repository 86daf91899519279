// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "autobench/errors.hpp"
#include "autobench/toolbox.hpp"

namespace autobench {

struct Message {
  std::string role;  // "system", "user" or "assistant"
  std::string content;
  bool operator==(const Message&) const = default;
};

/// A structured-output contract: tool name plus JSON-schema parameters.
struct DecisionSchema {
  std::string name;
  std::string description;
  Json parameters;
};

/// Returns the raw arguments blob for one structured decision.
class OrchestratorBackend {
 public:
  virtual ~OrchestratorBackend() = default;
  virtual std::string Complete(const std::vector<Message>& messages,
                               const DecisionSchema& schema) = 0;
};

/// The script and the session disagree (wrong decision requested, script
/// exhausted). Never healed: it signals a broken fixture.
class ScriptMismatch : public Error {
 public:
  using Error::Error;
};

struct ScriptEntry {
  std::string expect_schema;
  std::optional<Json> payload;       // serialized compactly
  std::optional<std::string> raw;    // returned verbatim
  std::optional<std::string> error;  // raised as TransportError
};

struct RecordedCall {
  std::string schema;
  std::vector<Message> messages;
};

/// Replays a list of entries, one per call, in order. Calls are
/// serialized; every call is recorded.
class ScriptedBackend : public OrchestratorBackend {
 public:
  explicit ScriptedBackend(std::vector<ScriptEntry> entries) : entries_(std::move(entries)) {}

  /// YAML or JSON: a list of entries, or {script: [...]}. ConfigError on
  /// unreadable or malformed files.
  static std::unique_ptr<ScriptedBackend> FromFile(const std::filesystem::path& path);
  static std::vector<ScriptEntry> ParseScript(std::string_view text);

  std::string Complete(const std::vector<Message>& messages, const DecisionSchema& schema) override;
  /// Same as Complete but keyed by schema name only (used by the mock
  /// chat route).
  std::string Next(const std::string& schema_name, const std::vector<Message>& messages);

  std::vector<RecordedCall> calls() const;
  std::size_t remaining() const;

 private:
  mutable std::mutex mu_;
  std::vector<ScriptEntry> entries_;
  std::size_t cursor_ = 0;
  std::vector<RecordedCall> calls_;
};

struct RemoteChatConfig {
  std::string base_url = "https://api.openai.com/v1";
  std::string model = "gpt-4o";
  std::string api_key_env = "OPENAI_API_KEY";  // variable name, never the key
  std::chrono::milliseconds timeout{120000};
};

/// Chat-completions client with one function declaration per call and a
/// forced tool choice, temperature 0. A reply without exactly one call to
/// the requested function is a ValidationError (healable).
class RemoteChatBackend : public OrchestratorBackend {
 public:
  explicit RemoteChatBackend(RemoteChatConfig config);
  std::string Complete(const std::vector<Message>& messages, const DecisionSchema& schema) override;

  /// Request body, exposed for protocol tests.
  Json BuildRequest(const std::vector<Message>& messages, const DecisionSchema& schema) const;
  /// Extracts the arguments blob from a response body.
  static std::string ExtractArguments(const Json& response, const std::string& expected_name);

 private:
  RemoteChatConfig config_;
};

/// YAML (a JSON superset) to JSON. Only true/false are booleans, so answer
/// texts such as "Yes" stay strings.
Json ParseYamlOrJson(std::string_view text);

}  // namespace autobench
