// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "autobench/config.hpp"
#include "autobench/errors.hpp"
#include "support.hpp"

using namespace autobench;

TEST_CASE("default configuration uses the bundled corpus and mock routes") {
  const RunConfig c = RunConfig::Default();
  CHECK(std::filesystem::exists(c.manifest));
  CHECK(c.session.max_experiments == 5);
  CHECK(c.session.max_heal_retries == 3);
  CHECK(c.session.max_regenerations == 3);
  CHECK(c.session.samples_per_choice == 50);
  const auto& lib = c.session.model_library;
  CHECK(c.mock_routes.at(lib[0].name) == "oracle");
  CHECK(c.mock_routes.at(lib[1].name) == "random-1");
  CHECK(c.mock_routes.at(lib[2].name) == "random-2");
}

TEST_CASE("configuration files override defaults and resolve paths") {
  const Json j = Json::parse(R"({
    "models": [{"name": "a", "description": "A.", "endpoint": "http://127.0.0.1:9/a", "mock": "biased-t"},
               {"name": "b", "description": "B.", "endpoint": "http://127.0.0.1:9/b"}],
    "manifest": "corpus/manifest.json",
    "session": {"max_experiments": 2, "samples_per_choice": 7, "rng_seed": 99},
    "orchestrator": {"model": "m", "timeout_ms": 500},
    "biased_tables": {"t": "tables/t.json"}
  })");
  const RunConfig c = RunConfig::FromJson(j, "/base");
  CHECK(c.manifest == std::filesystem::path("/base/corpus/manifest.json"));
  CHECK(c.session.max_experiments == 2);
  CHECK(c.session.samples_per_choice == 7);
  CHECK(c.session.rng_seed == 99);
  CHECK(c.chat.model == "m");
  CHECK(c.chat.timeout == std::chrono::milliseconds(500));
  CHECK(c.mock_routes.at("a") == "biased-t");
  CHECK(c.mock_routes.at("b") == "random-1");
  CHECK(c.biased_tables.at("t") == std::filesystem::path("/base/tables/t.json"));
}

TEST_CASE("invalid configurations are rejected") {
  CHECK_THROWS_AS(RunConfig::FromJson(Json::array(), "/"), ConfigError);
  CHECK_THROWS_AS(RunConfig::FromJson(Json{{"session", {{"max_experiments", 6}}}}, "/"), ConfigError);
  CHECK_THROWS_AS(RunConfig::FromJson(Json{{"session", {{"samples_per_choice", 0}}}}, "/"), ConfigError);
  CHECK_THROWS_AS(RunConfig::FromJson(Json{{"models", Json::array()}}, "/"), ConfigError);
  CHECK_THROWS_AS(RunConfig::FromJson(Json{{"models", {{{"name", "x"}}}}}, "/"), ConfigError);
  CHECK_THROWS_AS(RunConfig::FromJson(Json{{"generator_endpoint", "nope"}}, "/"), ConfigError);
  CHECK_THROWS_AS(RunConfig::Load("/nonexistent/config.json"), ConfigError);
}
