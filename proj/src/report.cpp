// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "autobench/errors.hpp"
#include "autobench/url.hpp"

namespace autobench {
namespace {

std::string Sub(std::string_view path, std::string_view key) {
  return std::string(path) + "/" + std::string(key);
}
std::string Sub(std::string_view path, std::size_t index) {
  return std::string(path) + "/" + std::to_string(index);
}

const Json& Require(const Json& obj, std::string_view path, const char* key) {
  if (!obj.is_object()) {
    throw ValidationError((path.empty() ? std::string("/") : std::string(path)) +
                          ": expected object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(Sub(path, key) + ": missing required field");
  return *it;
}

std::string RequireString(const Json& obj, std::string_view path, const char* key,
                          bool non_empty = true) {
  const Json& v = Require(obj, path, key);
  if (!v.is_string()) throw ValidationError(Sub(path, key) + ": expected string");
  std::string s = v.get<std::string>();
  if (non_empty && CollapseWhitespace(s).empty()) {
    throw ValidationError(Sub(path, key) + ": must be a non-empty string");
  }
  return s;
}

double RequireFraction(const Json& obj, std::string_view path, const char* key) {
  const Json& v = Require(obj, path, key);
  if (!v.is_number()) throw ValidationError(Sub(path, key) + ": expected number");
  const double d = v.get<double>();
  if (!(d >= 0.0 && d <= 1.0)) throw ValidationError(Sub(path, key) + ": must lie in [0, 1]");
  return d;
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

Query::Query(std::string t) : text(std::move(t)) {
  if (CollapseWhitespace(text).empty()) throw ValidationError("/query: must be non-empty");
}

void ValidateModelLibrary(const std::vector<ModelDescriptor>& library) {
  std::set<std::string> seen;
  for (const auto& m : library) {
    if (m.name.empty()) throw ConfigError("model library entry with empty name");
    if (!seen.insert(m.name).second) throw ConfigError("duplicate model name " + m.name);
    ParseUrl(m.endpoint);
  }
}

std::vector<ModelDescriptor> DefaultModelLibrary() {
  return {
      {"blip2-opt-2.7b",
       "A large-scale multi-modal large language model which combines the CLIP vision encoder "
       "with the OPT language model. It belongs to the BLIP family of models and consists of "
       "2.7 billion parameters.",
       "http://127.0.0.1:8600/blip2-opt-2.7b"},
      {"idefics-9b-instruct",
       "A large-scale multi-modal large language model trained on interleaved data. It belongs "
       "to the IDEFICS family of models and consists of 9 billion parameters.",
       "http://127.0.0.1:8600/idefics-9b-instruct"},
      {"llava-1.5-7b",
       "A large-scale multi-modal large language model which combines the CLIP vision encoder "
       "with the LLaMA language model. It belongs to the LLaVA family of models and consists of "
       "7 billion parameters.",
       "http://127.0.0.1:8600/llava-1.5-7b"},
  };
}

// --- Experiment ---------------------------------------------------------------

std::vector<std::string> Experiment::choices() const {
  std::vector<std::string> out;
  out.reserve(answers.size());
  for (const auto& a : answers) out.push_back(a.text);
  return out;
}

Json Experiment::ToJson() const {
  Json j = Json::object();
  j["question"] = question;
  Json answers_json = Json::array();
  for (const auto& a : answers) {
    Json aj = Json::object();
    aj["text"] = a.text;
    aj["image_select_function"] = a.select.ToJson();
    Json chain = Json::array();
    for (const auto& t : a.transforms) chain.push_back(t.ToJson());
    aj["image_transform_functions"] = std::move(chain);
    answers_json.push_back(std::move(aj));
  }
  j["answers"] = std::move(answers_json);
  if (sampling) {
    j["sampling"] = Json{{"samples_per_choice", sampling->samples_per_choice},
                         {"seed", sampling->seed}};
  }
  return j;
}

Experiment Experiment::FromJson(const Json& j, const ToolRegistry& registry,
                                std::string_view path) {
  Experiment e;
  e.question = RequireString(j, path, "question");
  const Json& answers = Require(j, path, "answers");
  const std::string answers_path = Sub(path, "answers");
  if (!answers.is_array()) throw ValidationError(answers_path + ": expected array");
  if (answers.size() < 2) {
    throw ValidationError(answers_path + ": an experiment needs at least 2 answers, got " +
                          std::to_string(answers.size()));
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    const std::string ap = Sub(answers_path, i);
    const Json& aj = answers[i];
    Answer a;
    a.text = RequireString(aj, ap, "text");
    const std::string key = Lower(CollapseWhitespace(a.text));
    if (key == Lower(std::string(kUnknownChoice))) {
      throw ValidationError(Sub(ap, "text") +
                            ": \"Unknown\" is reserved for abstention and is added automatically");
    }
    if (!seen.insert(key).second) {
      throw ValidationError(Sub(ap, "text") + ": duplicate answer \"" + a.text + "\"");
    }
    const std::string sp = Sub(ap, "image_select_function");
    a.select = registry.Canonicalize(registry.Parse(Require(aj, ap, "image_select_function"), sp),
                                     ToolKind::kSelect, sp);

    // The chain may be given as a list, or as the single-object form.
    const Json* chain = nullptr;
    std::string chain_path;
    if (auto it = aj.find("image_transform_functions"); it != aj.end()) {
      chain = &*it;
      chain_path = Sub(ap, "image_transform_functions");
    } else if (auto it1 = aj.find("image_transform_function"); it1 != aj.end()) {
      chain = &*it1;
      chain_path = Sub(ap, "image_transform_function");
    } else {
      throw ValidationError(Sub(ap, "image_transform_functions") + ": missing required field");
    }
    if (chain->is_array()) {
      if (chain->empty()) {
        throw ValidationError(chain_path + ": needs at least one transform (use Identity)");
      }
      for (std::size_t k = 0; k < chain->size(); ++k) {
        const std::string tp = Sub(chain_path, k);
        a.transforms.push_back(registry.Canonicalize(registry.Parse((*chain)[k], tp),
                                                     ToolKind::kTransform, tp));
      }
    } else {
      a.transforms.push_back(registry.Canonicalize(registry.Parse(*chain, chain_path),
                                                   ToolKind::kTransform, chain_path));
    }
    e.answers.push_back(std::move(a));
  }
  if (auto it = j.find("sampling"); it != j.end() && !it->is_null()) {
    const std::string sp = Sub(path, "sampling");
    const Json& spc = Require(*it, sp, "samples_per_choice");
    const Json& seed = Require(*it, sp, "seed");
    if (!spc.is_number_integer() || spc.get<std::int64_t>() < 1) {
      throw ValidationError(Sub(sp, "samples_per_choice") + ": expected positive integer");
    }
    if (!seed.is_number_integer()) throw ValidationError(Sub(sp, "seed") + ": expected integer");
    e.sampling = Sampling{static_cast<int>(spc.get<std::int64_t>()), seed.get<std::uint64_t>()};
  }
  return e;
}

// --- Results / findings -------------------------------------------------------

const ModelResult* ResultSet::Find(std::string_view model) const {
  for (const auto& [name, r] : models) {
    if (name == model) return &r;
  }
  return nullptr;
}

Json ResultSet::ToJson() const {
  Json j = Json::object();
  for (const auto& [name, r] : models) {
    Json m = Json::object();
    m["accuracy"] = r.accuracy;
    Json cw = Json::object();
    for (const auto& [choice, acc] : r.class_wise) cw[choice] = acc;
    m["class_wise"] = std::move(cw);
    m["abstention_rate"] = r.abstention_rate;
    if (r.error) m["error"] = *r.error;
    j[name] = std::move(m);
  }
  return j;
}

ResultSet ResultSet::FromJson(const Json& j, std::string_view path) {
  if (!j.is_object()) throw ValidationError(std::string(path) + ": expected object");
  ResultSet rs;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string mp = Sub(path, it.key());
    ModelResult r;
    r.accuracy = RequireFraction(*it, mp, "accuracy");
    const Json& cw = Require(*it, mp, "class_wise");
    if (!cw.is_object()) throw ValidationError(Sub(mp, "class_wise") + ": expected object");
    for (auto c = cw.begin(); c != cw.end(); ++c) {
      r.class_wise.emplace_back(c.key(), RequireFraction(cw, Sub(mp, "class_wise"),
                                                         c.key().c_str()));
    }
    r.abstention_rate = RequireFraction(*it, mp, "abstention_rate");
    if (auto e = it->find("error"); e != it->end() && e->is_string()) r.error = e->get<std::string>();
    rs.models.emplace_back(it.key(), std::move(r));
  }
  return rs;
}

Json Findings::ToJson() const {
  Json j = Json::object();
  j["findings"] = findings;
  j["open_questions"] = open_questions;
  return j;
}

Findings Findings::FromJson(const Json& j, std::string_view path) {
  Findings f;
  f.findings = RequireString(j, path, "findings");
  if (auto it = j.find("open_questions"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw ValidationError(Sub(path, "open_questions") + ": expected string");
    f.open_questions = it->get<std::string>();
  }
  if (CollapseWhitespace(f.open_questions).empty()) f.open_questions = "None";
  return f;
}

// --- Report lifecycle ---------------------------------------------------------

Report NewReport(const Query& query, const std::vector<std::string>& models,
                 const std::vector<ModelDescriptor>& library) {
  if (models.empty()) throw ConfigError("models_to_evaluate must not be empty");
  std::set<std::string> seen;
  for (const auto& name : models) {
    const bool known = std::any_of(library.begin(), library.end(),
                                   [&](const ModelDescriptor& m) { return m.name == name; });
    if (!known) throw ConfigError("unknown model \"" + name + "\" (not in the model library)");
    if (!seen.insert(name).second) throw ConfigError("model \"" + name + "\" listed twice");
  }
  Report r(query);
  r.models_ = models;
  return r;
}

Report AppendEntry(const Report& report, ReportEntry entry) {
  if (report.concluded()) throw LifecycleError("cannot append to a concluded report");
  if (report.entries_.size() >= kMaxExperiments) {
    throw LifecycleError("experiment cap of " + std::to_string(kMaxExperiments) +
                         " reached; cannot append");
  }
  if (entry.results.models.size() != report.models_.size()) {
    throw ValidationError("results must cover exactly the models to evaluate");
  }
  for (const auto& name : report.models_) {
    if (!entry.results.Find(name)) {
      throw ValidationError("results are missing model \"" + name + "\"");
    }
  }
  Report next = report;
  next.entries_.push_back(std::move(entry));
  return next;
}

Report RecordSufficiency(const Report& report, bool sufficient) {
  if (report.concluded()) throw LifecycleError("report already concluded");
  if (report.entries_.empty()) throw LifecycleError("sufficiency needs at least one entry");
  if (report.sufficiency_.size() >= report.entries_.size()) {
    throw LifecycleError("the latest entry has already been judged");
  }
  Report next = report;
  next.sufficiency_.push_back(sufficient);
  return next;
}

Report Conclude(const Report& report, std::string conclusions, std::size_t max_experiments) {
  if (report.concluded()) throw LifecycleError("report already concluded");
  const bool judged_sufficient =
      !report.sufficiency_.empty() && report.sufficiency_.back() &&
      report.sufficiency_.size() == report.entries_.size();
  const bool at_cap = !report.entries_.empty() && report.entries_.size() >= max_experiments;
  if (!judged_sufficient && !at_cap) {
    throw LifecycleError("conclusions require a sufficient judgment or the experiment cap");
  }
  if (CollapseWhitespace(conclusions).empty()) {
    throw ValidationError("/conclusions: must be a non-empty string");
  }
  Report next = report;
  next.conclusions_ = std::move(conclusions);
  return next;
}

Json Report::ToJson() const {
  Json j = Json::object();
  j["schema_version"] = kReportSchemaVersion;
  j["query"] = query_.text;
  j["models_to_evaluate"] = models_;
  Json entries = Json::array();
  for (const auto& e : entries_) {
    Json ej = Json::object();
    ej["experiment"] = e.experiment.ToJson();
    ej["results"] = e.results.ToJson();
    ej["findings"] = e.findings.ToJson();
    entries.push_back(std::move(ej));
  }
  j["entries"] = std::move(entries);
  Json history = Json::array();
  for (bool b : sufficiency_) history.push_back(b);
  j["sufficiency_history"] = std::move(history);
  j["conclusions"] = conclusions_ ? Json(*conclusions_) : Json(nullptr);
  return j;
}

std::string SerializeReport(const Report& report) { return report.ToJson().dump(2) + "\n"; }

Report ParseReport(std::string_view bytes, const ToolRegistry& registry) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("/: report is not valid JSON: ") + e.what());
  }
  const Json& version = Require(j, "", "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kReportSchemaVersion) {
    throw ValidationError("/schema_version: unsupported version (expected " +
                          std::to_string(kReportSchemaVersion) + ")");
  }
  Report r(Query(RequireString(j, "", "query")));
  const Json& models = Require(j, "", "models_to_evaluate");
  if (!models.is_array() || models.empty()) {
    throw ValidationError("/models_to_evaluate: expected non-empty array");
  }
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (!models[i].is_string()) throw ValidationError(Sub("/models_to_evaluate", i) + ": expected string");
    r.models_.push_back(models[i].get<std::string>());
  }
  const Json& entries = Require(j, "", "entries");
  if (!entries.is_array()) throw ValidationError("/entries: expected array");
  if (entries.size() > kMaxExperiments) {
    throw ValidationError("/entries: at most " + std::to_string(kMaxExperiments) +
                          " entries allowed");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string ep = Sub("/entries", i);
    ReportEntry e{Experiment::FromJson(Require(entries[i], ep, "experiment"), registry,
                                       Sub(ep, "experiment")),
                  ResultSet::FromJson(Require(entries[i], ep, "results"), Sub(ep, "results")),
                  Findings::FromJson(Require(entries[i], ep, "findings"), Sub(ep, "findings"))};
    for (const auto& name : r.models_) {
      if (!e.results.Find(name)) {
        throw ValidationError(Sub(ep, "results") + ": missing model \"" + name + "\"");
      }
    }
    if (e.results.models.size() != r.models_.size()) {
      throw ValidationError(Sub(ep, "results") + ": results for a model not under evaluation");
    }
    r.entries_.push_back(std::move(e));
  }
  const Json& history = Require(j, "", "sufficiency_history");
  if (!history.is_array()) throw ValidationError("/sufficiency_history: expected array");
  if (history.size() > r.entries_.size()) {
    throw ValidationError("/sufficiency_history: more judgments than entries");
  }
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (!history[i].is_boolean()) throw ValidationError(Sub("/sufficiency_history", i) + ": expected bool");
    r.sufficiency_.push_back(history[i].get<bool>());
  }
  const Json& conclusions = Require(j, "", "conclusions");
  if (!conclusions.is_null()) {
    if (!conclusions.is_string() || CollapseWhitespace(conclusions.get<std::string>()).empty()) {
      throw ValidationError("/conclusions: expected non-empty string or null");
    }
    r.conclusions_ = conclusions.get<std::string>();
  }
  return r;
}

namespace {

Json NormalizedForComparison(const Report& r) {
  Json j = r.ToJson();
  j["query"] = CollapseWhitespace(j["query"].get<std::string>());
  for (auto& e : j["entries"]) {
    for (const char* key : {"findings", "open_questions"}) {
      e["findings"][key] = CollapseWhitespace(e["findings"][key].get<std::string>());
    }
  }
  if (j["conclusions"].is_string()) {
    j["conclusions"] = CollapseWhitespace(j["conclusions"].get<std::string>());
  }
  return j;
}

}  // namespace

bool StructurallyEqual(const Report& a, const Report& b) {
  return NormalizedForComparison(a) == NormalizedForComparison(b);
}

}  // namespace autobench
