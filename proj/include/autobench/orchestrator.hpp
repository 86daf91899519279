// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "autobench/chat.hpp"
#include "autobench/errors.hpp"
#include "autobench/prompts.hpp"
#include "autobench/report.hpp"

namespace autobench {

enum class Decision { kInitReport, kDefineExperiment, kDiscuss, kJudgeSufficiency, kConclude };
std::string_view ToString(Decision d);

/// Function schemas; every property is required. The InitReport schema
/// enumerates the library's model names.
DecisionSchema MakeSchema(Decision d, const std::vector<ModelDescriptor>& library);

/// Repeatedly asks `backend` until `validate` accepts the payload. After a
/// rejected payload the assistant output and then the validator message,
/// verbatim, are appended before the next call. At most `max_retries`
/// re-invocations; then HealExhausted with every validator message. A
/// ValidationError thrown by the backend itself (e.g. no function call)
/// counts as a rejected payload with empty output.
template <typename T>
T WithSelfHeal(OrchestratorBackend& backend, std::vector<Message> messages,
               const DecisionSchema& schema, const std::function<T(const std::string&)>& validate,
               int max_retries, int* calls = nullptr) {
  std::vector<std::string> failures;
  for (int attempt = 0;; ++attempt) {
    std::string raw;
    std::string problem;
    if (calls) ++*calls;
    try {
      raw = backend.Complete(messages, schema);
      return validate(raw);
    } catch (const ValidationError& e) {
      problem = e.what();
    }
    failures.push_back(problem);
    if (attempt >= max_retries) throw HealExhausted(std::move(failures));
    if (!raw.empty()) messages.push_back({"assistant", raw});
    messages.push_back({"user", problem});
  }
}

/// All heal cycles of a propose step failed.
class RegenerationExhausted : public HealExhausted {
 public:
  RegenerationExhausted(std::vector<std::string> messages, int cycles)
      : HealExhausted(std::move(messages)), cycles_(cycles) {}
  int cycles() const noexcept { return cycles_; }

 private:
  int cycles_;
};

struct OrchestratorOptions {
  int max_heal_retries = 3;
  int max_regenerations = 3;  // fresh-context retries of a failed proposal
};

/// The five decision points. Each call rebuilds its conversation from
/// scratch: system prompt, then one user message holding the decision
/// prompt and the relevant report state.
class Orchestrator {
 public:
  Orchestrator(OrchestratorBackend& backend, const PromptSet& prompts,
               const ToolRegistry& registry, std::vector<ModelDescriptor> library,
               OrchestratorOptions options = {});

  Report InitReport(const Query& query);
  Experiment ProposeExperiment(const Report& report);
  Findings Discuss(const Experiment& experiment, const ResultSet& results);
  bool JudgeSufficiency(const Report& report);
  std::string Conclude(const Report& report);

  const std::string& system_prompt() const noexcept { return system_prompt_; }
  /// Backend calls made so far, per decision name.
  const std::map<std::string, int>& call_counts() const noexcept { return calls_; }
  int total_calls() const;
  /// Fresh-context regenerations issued so far.
  int regenerations() const noexcept { return regenerations_; }

  // Payload validators; messages are path-qualified.
  std::vector<std::string> ValidateInit(const std::string& raw) const;
  Experiment ValidateExperiment(const std::string& raw) const;
  static Findings ValidateFindings(const std::string& raw);
  static bool ValidateSufficiency(const std::string& raw);
  static std::string ValidateConclusions(const std::string& raw);

 private:
  template <typename T>
  T Ask(Decision d, const std::string& user_text, const std::function<T(const std::string&)>& validate);

  OrchestratorBackend& backend_;
  const PromptSet& prompts_;
  const ToolRegistry& registry_;
  std::vector<ModelDescriptor> library_;
  OrchestratorOptions options_;
  std::string system_prompt_;
  std::map<std::string, int> calls_;
  int regenerations_ = 0;
};

}  // namespace autobench
