// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "autobench/url.hpp"

namespace autobench {
namespace {

void DefaultRoutes(RunConfig& c) {
  c.mock_routes.clear();
  for (std::size_t i = 0; i < c.session.model_library.size(); ++i) {
    c.mock_routes[c.session.model_library[i].name] = i == 0 ? "oracle" : "random-" + std::to_string(i);
  }
}

template <typename T>
T Get(const Json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(where + "/" + key + ": missing or wrong type");
  }
}

}  // namespace

std::filesystem::path FixtureDir() {
  if (const char* env = std::getenv("AUTOBENCH_FIXTURE_DIR"); env && *env) return env;
  return AUTOBENCH_FIXTURE_DIR;
}

RunConfig RunConfig::Default() {
  RunConfig c;
  c.manifest = FixtureDir() / "corpus" / "manifest.json";
  DefaultRoutes(c);
  return c;
}

RunConfig RunConfig::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  Json j;
  try {
    j = Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return FromJson(j, path.parent_path());
}

RunConfig RunConfig::FromJson(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  RunConfig c = Default();
  auto resolve = [&](const std::string& p) {
    const std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };

  if (j.contains("models")) {
    const Json& models = j["models"];
    if (!models.is_array() || models.empty()) throw ConfigError("config /models: expected non-empty array");
    c.session.model_library.clear();
    for (std::size_t i = 0; i < models.size(); ++i) {
      const std::string where = "config /models/" + std::to_string(i);
      ModelDescriptor m{Get<std::string>(models[i], "name", where),
                        Get<std::string>(models[i], "description", where),
                        Get<std::string>(models[i], "endpoint", where)};
      c.session.model_library.push_back(std::move(m));
    }
    DefaultRoutes(c);
    for (std::size_t i = 0; i < models.size(); ++i) {
      if (models[i].contains("mock")) {
        c.mock_routes[c.session.model_library[i].name] =
            Get<std::string>(models[i], "mock", "config /models/" + std::to_string(i));
      }
    }
  }
  if (j.contains("manifest")) c.manifest = resolve(Get<std::string>(j, "manifest", "config"));
  if (j.contains("generator_endpoint")) {
    c.generator_endpoint = Get<std::string>(j, "generator_endpoint", "config");
    ParseUrl(*c.generator_endpoint);
  }
  if (j.contains("orchestrator")) {
    const Json& o = j["orchestrator"];
    const std::string where = "config /orchestrator";
    if (o.contains("base_url")) c.chat.base_url = Get<std::string>(o, "base_url", where);
    if (o.contains("model")) c.chat.model = Get<std::string>(o, "model", where);
    if (o.contains("api_key_env")) c.chat.api_key_env = Get<std::string>(o, "api_key_env", where);
    if (o.contains("timeout_ms")) {
      c.chat.timeout = std::chrono::milliseconds(Get<std::int64_t>(o, "timeout_ms", where));
    }
    ParseUrl(c.chat.base_url);
  }
  if (j.contains("session")) {
    const Json& s = j["session"];
    const std::string where = "config /session";
    if (s.contains("max_experiments")) c.session.max_experiments = Get<std::size_t>(s, "max_experiments", where);
    if (s.contains("max_heal_retries")) c.session.max_heal_retries = Get<int>(s, "max_heal_retries", where);
    if (s.contains("max_regenerations")) c.session.max_regenerations = Get<int>(s, "max_regenerations", where);
    if (s.contains("samples_per_choice")) c.session.samples_per_choice = Get<int>(s, "samples_per_choice", where);
    if (s.contains("rng_seed")) c.session.rng_seed = Get<std::uint64_t>(s, "rng_seed", where);
  }
  if (j.contains("biased_tables")) {
    for (auto it = j["biased_tables"].begin(); it != j["biased_tables"].end(); ++it) {
      c.biased_tables[it.key()] = resolve(it.value().get<std::string>());
    }
  }
  c.session.Validate();
  return c;
}

}  // namespace autobench
