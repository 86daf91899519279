// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/session.hpp"

#include <typeinfo>

namespace autobench {
namespace {

std::string ErrorType(const std::exception& e) {
  if (dynamic_cast<const RegenerationExhausted*>(&e)) return "RegenerationExhausted";
  if (dynamic_cast<const HealExhausted*>(&e)) return "HealExhausted";
  if (dynamic_cast<const ScriptMismatch*>(&e)) return "ScriptMismatch";
  if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
  if (dynamic_cast<const LifecycleError*>(&e)) return "LifecycleError";
  if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
  if (dynamic_cast<const ToolError*>(&e)) return "ToolError";
  if (dynamic_cast<const TransportError*>(&e)) return "TransportError";
  if (dynamic_cast<const ProtocolError*>(&e)) return "ProtocolError";
  return "InternalError";
}

}  // namespace

void SessionConfig::Validate() const {
  if (max_experiments < 1 || max_experiments > kMaxExperiments) {
    throw ConfigError("max_experiments must be in 1.." + std::to_string(kMaxExperiments));
  }
  if (max_heal_retries < 0) throw ConfigError("max_heal_retries must be >= 0");
  if (max_regenerations < 0) throw ConfigError("max_regenerations must be >= 0");
  if (samples_per_choice < 1) throw ConfigError("samples_per_choice must be >= 1");
  if (eval_in_flight < 1) throw ConfigError("eval_in_flight must be >= 1");
  if (model_library.empty()) throw ConfigError("model library is empty");
  ValidateModelLibrary(model_library);
}

SessionOutcome RunSession(const Query& query, const SessionConfig& config,
                          const SessionBackends& backends) {
  config.Validate();
  if (!backends.orchestrator || !backends.sources || !backends.registry || !backends.prompts) {
    throw ConfigError("session backends are incomplete");
  }
  Orchestrator orch(*backends.orchestrator, *backends.prompts, *backends.registry,
                    config.model_library,
                    OrchestratorOptions{config.max_heal_retries, config.max_regenerations});

  SessionOutcome out;
  std::string stage = "init";
  std::optional<std::size_t> entry_index;
  try {
    Report report = orch.InitReport(query);
    out.report = report;
    std::vector<ModelClient*> clients;
    for (const auto& name : report.models_to_evaluate()) {
      auto it = backends.models.find(name);
      if (it == backends.models.end() || !it->second) {
        throw ConfigError("no client configured for model \"" + name + "\"");
      }
      clients.push_back(it->second);
    }

    while (true) {
      const std::size_t k = report.entries().size();
      entry_index = k;
      stage = "propose";
      Experiment exp = orch.ProposeExperiment(report);
      exp.sampling = Sampling{config.samples_per_choice, DeriveStream(config.rng_seed, {k})};
      stage = "build";
      const LabeledDataset ds = BuildDataset(exp, *backends.sources, *backends.registry,
                                             BuildOptions{config.build_threads});
      stage = "evaluate";
      ResultSet results = Evaluate(clients, ds, EvalOptions{config.eval_in_flight});
      stage = "discuss";
      Findings findings = orch.Discuss(exp, results);
      report = AppendEntry(report, ReportEntry{std::move(exp), std::move(results), std::move(findings)});
      out.report = report;
      stage = "judge";
      const bool sufficient = orch.JudgeSufficiency(report);
      report = RecordSufficiency(report, sufficient);
      out.report = report;
      if (sufficient || report.entries().size() >= config.max_experiments) break;
    }
    entry_index.reset();
    stage = "conclude";
    report = Conclude(report, orch.Conclude(report), config.max_experiments);
    out.report = report;
    out.completed = true;
    out.error = nullptr;
  } catch (const std::exception& e) {
    out.completed = false;
    Json err = Json::object();
    err["stage"] = stage;
    err["entry"] = entry_index ? Json(*entry_index) : Json(nullptr);
    err["type"] = ErrorType(e);
    err["message"] = e.what();
    if (const auto* heal = dynamic_cast<const HealExhausted*>(&e)) {
      err["validator_messages"] = heal->messages();
    }
    out.error = std::move(err);
  }
  out.calls = orch.call_counts();
  out.regenerations = orch.regenerations();
  return out;
}

}  // namespace autobench
