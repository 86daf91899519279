// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autobench/dataset.hpp"
#include "autobench/evaluation.hpp"
#include "autobench/orchestrator.hpp"

namespace autobench {

struct SessionConfig {
  std::size_t max_experiments = kMaxExperiments;
  int max_heal_retries = 3;
  int max_regenerations = 3;
  int samples_per_choice = 50;
  std::uint64_t rng_seed = 0;
  std::vector<ModelDescriptor> model_library = DefaultModelLibrary();
  int build_threads = 0;
  int eval_in_flight = 4;

  /// ConfigError on out-of-range values.
  void Validate() const;
};

struct SessionBackends {
  OrchestratorBackend* orchestrator = nullptr;
  const DataSources* sources = nullptr;
  /// Client per model name; must cover every model the session selects.
  std::map<std::string, ModelClient*> models;
  const ToolRegistry* registry = &ToolRegistry::Default();
  const PromptSet* prompts = &PromptSet::Default();
};

struct SessionOutcome {
  /// Absent only when the session failed before the report existed.
  std::optional<Report> report;
  bool completed = false;
  /// null on success, otherwise {stage, entry, type, message[, validator_messages]}.
  Json error;
  std::map<std::string, int> calls;
  int regenerations = 0;
};

/// init, then per entry propose, build, evaluate, discuss, append, judge,
/// until the judgment is true or the cap is reached; then conclude. Every
/// error ends the session with the report as it stood.
SessionOutcome RunSession(const Query& query, const SessionConfig& config,
                          const SessionBackends& backends);

}  // namespace autobench
