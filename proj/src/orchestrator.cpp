// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/orchestrator.hpp"

#include <set>

namespace autobench {
namespace {

Json Object(Json properties) {
  Json required = Json::array();
  for (auto it = properties.begin(); it != properties.end(); ++it) required.push_back(it.key());
  return Json{{"type", "object"},
              {"properties", std::move(properties)},
              {"required", std::move(required)},
              {"additionalProperties", false}};
}

Json StringField() { return Json{{"type", "string"}, {"minLength", 1}}; }

Json ToolCallSchema(std::string_view module_path) {
  return Object(Json{{"module_path", Json{{"type", "string"}, {"enum", {module_path}}}},
                     {"name", StringField()},
                     {"kwargs", Json{{"type", "object"}}}});
}

Json ParsePayload(const std::string& raw) {
  Json j;
  try {
    j = Json::parse(raw);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("/: payload is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("/: payload must be a JSON object");
  return j;
}

std::string UserBlock(const std::string& prompt, const std::string& label, const std::string& body) {
  return prompt + "\n\n" + label + ":\n" + body;
}

}  // namespace

std::string_view ToString(Decision d) {
  switch (d) {
    case Decision::kInitReport: return "InitReport";
    case Decision::kDefineExperiment: return "DefineExperiment";
    case Decision::kDiscuss: return "Discuss";
    case Decision::kJudgeSufficiency: return "JudgeSufficiency";
    case Decision::kConclude: return "Conclude";
  }
  return "";
}

DecisionSchema MakeSchema(Decision d, const std::vector<ModelDescriptor>& library) {
  DecisionSchema s;
  s.name = std::string(ToString(d));
  switch (d) {
    case Decision::kInitReport: {
      Json names = Json::array();
      for (const auto& m : library) names.push_back(m.name);
      s.description = "Initialize the research report with the models to evaluate.";
      s.parameters = Object(Json{{"models_to_evaluate",
                                  Json{{"type", "array"},
                                       {"items", Json{{"type", "string"}, {"enum", names}}},
                                       {"minItems", 1},
                                       {"uniqueItems", true}}}});
      break;
    }
    case Decision::kDefineExperiment: {
      Json answer = Object(Json{
          {"text", StringField()},
          {"image_select_function", ToolCallSchema(kSelectModule)},
          {"image_transform_functions",
           Json{{"type", "array"}, {"items", ToolCallSchema(kTransformModule)}, {"minItems", 1}}}});
      s.description = "Define the next visual question answering experiment.";
      s.parameters = Object(Json{
          {"question", StringField()},
          {"answers", Json{{"type", "array"}, {"items", answer}, {"minItems", 2}}}});
      break;
    }
    case Decision::kDiscuss:
      s.description = "Record the findings of the last experiment.";
      s.parameters = Object(Json{{"findings", StringField()}, {"open_questions", StringField()}});
      break;
    case Decision::kJudgeSufficiency:
      s.description = "Judge whether the report answers the user query.";
      s.parameters = Object(Json{{"sufficient", Json{{"type", "boolean"}}}});
      break;
    case Decision::kConclude:
      s.description = "Write the conclusions answering the user query.";
      s.parameters = Object(Json{{"conclusions", StringField()}});
      break;
  }
  return s;
}

Orchestrator::Orchestrator(OrchestratorBackend& backend, const PromptSet& prompts,
                           const ToolRegistry& registry, std::vector<ModelDescriptor> library,
                           OrchestratorOptions options)
    : backend_(backend),
      prompts_(prompts),
      registry_(registry),
      library_(std::move(library)),
      options_(options),
      system_prompt_(RenderSystemPrompt(registry, library_, prompts.system)) {
  if (options_.max_heal_retries < 0) throw ConfigError("max_heal_retries must be >= 0");
  if (options_.max_regenerations < 0) throw ConfigError("max_regenerations must be >= 0");
  ValidateModelLibrary(library_);
}

int Orchestrator::total_calls() const {
  int n = 0;
  for (const auto& [_, c] : calls_) n += c;
  return n;
}

template <typename T>
T Orchestrator::Ask(Decision d, const std::string& user_text,
                    const std::function<T(const std::string&)>& validate) {
  const DecisionSchema schema = MakeSchema(d, library_);
  std::vector<Message> messages{{"system", system_prompt_}, {"user", user_text}};
  return WithSelfHeal<T>(backend_, std::move(messages), schema, validate,
                         options_.max_heal_retries, &calls_[schema.name]);
}

std::vector<std::string> Orchestrator::ValidateInit(const std::string& raw) const {
  const Json j = ParsePayload(raw);
  if (!j.contains("models_to_evaluate")) {
    throw ValidationError("/models_to_evaluate: missing required field");
  }
  const Json& arr = j["models_to_evaluate"];
  if (!arr.is_array() || arr.empty()) {
    throw ValidationError("/models_to_evaluate: expected a non-empty array of model names");
  }
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "/models_to_evaluate/" + std::to_string(i);
    if (!arr[i].is_string()) throw ValidationError(path + ": expected string");
    const std::string name = arr[i].get<std::string>();
    const bool known = std::any_of(library_.begin(), library_.end(),
                                   [&](const ModelDescriptor& m) { return m.name == name; });
    if (!known) {
      std::string names;
      for (const auto& m : library_) names += (names.empty() ? "" : ", ") + m.name;
      throw ValidationError(path + ": unknown model \"" + name + "\"; available: " + names);
    }
    if (!seen.insert(name).second) throw ValidationError(path + ": duplicate model \"" + name + "\"");
    out.push_back(name);
  }
  return out;
}

Experiment Orchestrator::ValidateExperiment(const std::string& raw) const {
  Experiment e = Experiment::FromJson(ParsePayload(raw), registry_, "");
  e.sampling.reset();  // sampling is owned by the session
  return e;
}

Findings Orchestrator::ValidateFindings(const std::string& raw) {
  return Findings::FromJson(ParsePayload(raw), "");
}

bool Orchestrator::ValidateSufficiency(const std::string& raw) {
  const Json j = ParsePayload(raw);
  if (!j.contains("sufficient")) throw ValidationError("/sufficient: missing required field");
  if (!j["sufficient"].is_boolean()) throw ValidationError("/sufficient: expected boolean");
  return j["sufficient"].get<bool>();
}

std::string Orchestrator::ValidateConclusions(const std::string& raw) {
  const Json j = ParsePayload(raw);
  if (!j.contains("conclusions")) throw ValidationError("/conclusions: missing required field");
  if (!j["conclusions"].is_string() || CollapseWhitespace(j["conclusions"].get<std::string>()).empty()) {
    throw ValidationError("/conclusions: must be a non-empty string");
  }
  return j["conclusions"].get<std::string>();
}

Report Orchestrator::InitReport(const Query& query) {
  const auto models = Ask<std::vector<std::string>>(
      Decision::kInitReport, UserBlock(prompts_.init, "USER QUERY", query.text),
      [this](const std::string& raw) { return ValidateInit(raw); });
  return NewReport(query, models, library_);
}

Experiment Orchestrator::ProposeExperiment(const Report& report) {
  const std::string user = UserBlock(prompts_.experiment, "REPORT", SerializeReport(report));
  std::vector<std::string> all_failures;
  for (int cycle = 0;; ++cycle) {
    try {
      return Ask<Experiment>(Decision::kDefineExperiment, user,
                             [this](const std::string& raw) { return ValidateExperiment(raw); });
    } catch (const HealExhausted& e) {
      all_failures.insert(all_failures.end(), e.messages().begin(), e.messages().end());
      if (cycle >= options_.max_regenerations) {
        throw RegenerationExhausted(std::move(all_failures), cycle + 1);
      }
      ++regenerations_;
    }
  }
}

Findings Orchestrator::Discuss(const Experiment& experiment, const ResultSet& results) {
  const std::string user = prompts_.findings + "\n\nEXPERIMENT:\n" + experiment.ToJson().dump(2) +
                           "\n\nRESULTS:\n" + results.ToJson().dump(2);
  return Ask<Findings>(Decision::kDiscuss, user, &Orchestrator::ValidateFindings);
}

bool Orchestrator::JudgeSufficiency(const Report& report) {
  return Ask<bool>(Decision::kJudgeSufficiency,
                   UserBlock(prompts_.sufficiency, "REPORT", SerializeReport(report)),
                   &Orchestrator::ValidateSufficiency);
}

std::string Orchestrator::Conclude(const Report& report) {
  return Ask<std::string>(Decision::kConclude,
                          UserBlock(prompts_.conclusions, "REPORT", SerializeReport(report)),
                          &Orchestrator::ValidateConclusions);
}

}  // namespace autobench
