// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "autobench/chat.hpp"
#include "autobench/session.hpp"

namespace autobench {

/// Run configuration file (JSON):
///   {
///     "models": [{"name", "description", "endpoint", "mock"?}],
///     "manifest": "corpus/manifest.json",
///     "generator_endpoint": "http://...",            optional
///     "orchestrator": {"base_url", "model", "api_key_env", "timeout_ms"},
///     "session": {"max_experiments", "max_heal_retries", "max_regenerations",
///                 "samples_per_choice", "rng_seed"},
///     "biased_tables": {"name": "table.json"}        optional
///   }
/// Every key is optional; missing keys keep the defaults. Relative paths
/// resolve against the file's directory.
struct RunConfig {
  SessionConfig session;
  /// Mock route per model name, used with --mock-models.
  std::map<std::string, std::string> mock_routes;
  std::filesystem::path manifest;
  std::optional<std::string> generator_endpoint;
  RemoteChatConfig chat;
  std::map<std::string, std::filesystem::path> biased_tables;

  /// The three reference models and the bundled fixture corpus. Mock
  /// routes: first model "oracle", model i > 0 "random-<i>".
  static RunConfig Default();
  /// ConfigError on unreadable files, bad JSON or bad values.
  static RunConfig Load(const std::filesystem::path& path);
  static RunConfig FromJson(const Json& j, const std::filesystem::path& base_dir);
};

/// Directory holding the bundled fixtures (corpus, scripts).
std::filesystem::path FixtureDir();

}  // namespace autobench
