// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/chat.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "autobench/url.hpp"
#include "autobench/wire.hpp"

namespace autobench {
namespace {

Json ScalarToJson(const YAML::Node& node) {
  const std::string& s = node.Scalar();
  if (node.Tag() == "!") return s;  // quoted
  if (s == "true" || s == "True" || s == "TRUE") return true;
  if (s == "false" || s == "False" || s == "FALSE") return false;
  if (s == "~" || s == "null" || s == "Null" || s == "NULL" || s.empty()) return nullptr;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used, 10);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  return s;
}

Json NodeToJson(const YAML::Node& node) {
  switch (node.Type()) {
    case YAML::NodeType::Null:
    case YAML::NodeType::Undefined:
      return nullptr;
    case YAML::NodeType::Scalar:
      return ScalarToJson(node);
    case YAML::NodeType::Sequence: {
      Json arr = Json::array();
      for (const auto& child : node) arr.push_back(NodeToJson(child));
      return arr;
    }
    case YAML::NodeType::Map: {
      Json obj = Json::object();
      for (const auto& kv : node) obj[kv.first.as<std::string>()] = NodeToJson(kv.second);
      return obj;
    }
  }
  return nullptr;
}

}  // namespace

Json ParseYamlOrJson(std::string_view text) {
  try {
    return NodeToJson(YAML::Load(std::string(text)));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("malformed YAML/JSON: ") + e.what());
  }
}

std::vector<ScriptEntry> ScriptedBackend::ParseScript(std::string_view text) {
  Json j = ParseYamlOrJson(text);
  if (j.is_object() && j.contains("script")) j = j["script"];
  if (!j.is_array()) throw ConfigError("script: expected a list of entries");
  std::vector<ScriptEntry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    const std::string where = "script entry " + std::to_string(i);
    if (!e.is_object() || !e.contains("expect_schema") || !e["expect_schema"].is_string()) {
      throw ConfigError(where + ": missing expect_schema");
    }
    ScriptEntry entry;
    entry.expect_schema = e["expect_schema"].get<std::string>();
    int kinds = 0;
    if (e.contains("payload")) {
      entry.payload = e["payload"];
      ++kinds;
    }
    if (e.contains("raw")) {
      if (!e["raw"].is_string()) throw ConfigError(where + ": raw must be a string");
      entry.raw = e["raw"].get<std::string>();
      ++kinds;
    }
    if (e.contains("error")) {
      entry.error = e["error"].is_string() ? e["error"].get<std::string>() : e["error"].dump();
      ++kinds;
    }
    if (kinds != 1) throw ConfigError(where + ": needs exactly one of payload, raw, error");
    out.push_back(std::move(entry));
  }
  return out;
}

std::unique_ptr<ScriptedBackend> ScriptedBackend::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read script " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::make_unique<ScriptedBackend>(ParseScript(ss.str()));
}

std::string ScriptedBackend::Complete(const std::vector<Message>& messages,
                                      const DecisionSchema& schema) {
  return Next(schema.name, messages);
}

std::string ScriptedBackend::Next(const std::string& schema_name,
                                  const std::vector<Message>& messages) {
  std::lock_guard lock(mu_);
  calls_.push_back({schema_name, messages});
  if (cursor_ >= entries_.size()) {
    throw ScriptMismatch("script exhausted: call " + std::to_string(cursor_ + 1) +
                         " requested " + schema_name);
  }
  const ScriptEntry& e = entries_[cursor_];
  if (e.expect_schema != schema_name) {
    throw ScriptMismatch("script entry " + std::to_string(cursor_) + " expects " +
                         e.expect_schema + " but the session requested " + schema_name);
  }
  ++cursor_;
  if (e.error) throw TransportError(*e.error);
  if (e.raw) return *e.raw;
  return e.payload->dump();
}

std::vector<RecordedCall> ScriptedBackend::calls() const {
  std::lock_guard lock(mu_);
  return calls_;
}

std::size_t ScriptedBackend::remaining() const {
  std::lock_guard lock(mu_);
  return entries_.size() - cursor_;
}

RemoteChatBackend::RemoteChatBackend(RemoteChatConfig config) : config_(std::move(config)) {
  ParseUrl(config_.base_url);
  if (config_.api_key_env.empty()) throw ConfigError("chat backend needs an API key variable name");
}

Json RemoteChatBackend::BuildRequest(const std::vector<Message>& messages,
                                     const DecisionSchema& schema) const {
  Json msgs = Json::array();
  for (const auto& m : messages) msgs.push_back(Json{{"role", m.role}, {"content", m.content}});
  Json fn = Json::object();
  fn["name"] = schema.name;
  fn["description"] = schema.description;
  fn["parameters"] = schema.parameters;
  Json body = Json::object();
  body["model"] = config_.model;
  body["messages"] = std::move(msgs);
  body["tools"] = Json::array({Json{{"type", "function"}, {"function", std::move(fn)}}});
  body["tool_choice"] = Json{{"type", "function"}, {"function", {{"name", schema.name}}}};
  body["temperature"] = 0;
  return body;
}

std::string RemoteChatBackend::ExtractArguments(const Json& response,
                                                const std::string& expected_name) {
  const Json* message = nullptr;
  if (response.contains("choices") && response["choices"].is_array() &&
      !response["choices"].empty() && response["choices"][0].contains("message")) {
    message = &response["choices"][0]["message"];
  }
  if (!message) throw ProtocolError("chat response has no choices[0].message");
  const Json* calls = nullptr;
  if (message->contains("tool_calls") && (*message)["tool_calls"].is_array()) {
    calls = &(*message)["tool_calls"];
  }
  if (!calls || calls->size() != 1) {
    throw ValidationError("expected exactly one call to the function " + expected_name + ", got " +
                          std::to_string(calls ? calls->size() : 0));
  }
  const Json& call = (*calls)[0];
  if (!call.contains("function") || !call["function"].contains("name") ||
      call["function"]["name"] != expected_name) {
    throw ValidationError("expected a call to the function " + expected_name);
  }
  const Json& args = call["function"].value("arguments", Json());
  if (args.is_string()) return args.get<std::string>();
  if (args.is_object()) return args.dump();
  throw ValidationError("function call to " + expected_name + " carries no arguments");
}

std::string RemoteChatBackend::Complete(const std::vector<Message>& messages,
                                        const DecisionSchema& schema) {
  const char* key = std::getenv(config_.api_key_env.c_str());
  std::vector<std::pair<std::string, std::string>> headers;
  if (key && *key) headers.emplace_back("Authorization", std::string("Bearer ") + key);
  HttpOptions opts;
  opts.timeout = config_.timeout;
  const Url base = ParseUrl(config_.base_url);
  const Json response = PostJson(base, "/chat/completions", BuildRequest(messages, schema), opts, headers);
  return ExtractArguments(response, schema.name);
}

}  // namespace autobench
