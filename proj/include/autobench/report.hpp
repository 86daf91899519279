// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autobench/toolbox.hpp"

namespace autobench {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::size_t kMaxExperiments = 5;
inline constexpr std::string_view kUnknownChoice = "Unknown";

struct Query {
  std::string text;

  /// Throws ValidationError when the text is blank.
  explicit Query(std::string text);
};

struct ModelDescriptor {
  std::string name;
  std::string description;
  std::string endpoint;
};

/// Checks name uniqueness and that endpoints are absolute URLs.
void ValidateModelLibrary(const std::vector<ModelDescriptor>& library);

/// The three hosted models of the reference setup, with their hand-curated
/// prompt descriptions. Endpoints default to a local shim.
std::vector<ModelDescriptor> DefaultModelLibrary();

struct Answer {
  std::string text;
  ToolCall select;
  std::vector<ToolCall> transforms;  // applied in order, at least one
};

struct Sampling {
  int samples_per_choice = 0;
  std::uint64_t seed = 0;
};

struct Experiment {
  std::string question;
  std::vector<Answer> answers;
  std::optional<Sampling> sampling;

  std::vector<std::string> choices() const;

  Json ToJson() const;
  /// Validates against `registry`; every error message is path-qualified
  /// relative to `path`.
  static Experiment FromJson(const Json& j, const ToolRegistry& registry,
                             std::string_view path = "");
};

struct ModelResult {
  double accuracy = 0.0;
  std::vector<std::pair<std::string, double>> class_wise;  // choice order
  double abstention_rate = 0.0;
  std::optional<std::string> error;  // endpoint failure diagnostic

  bool operator==(const ModelResult&) const = default;
};

struct ResultSet {
  std::vector<std::pair<std::string, ModelResult>> models;  // report model order

  const ModelResult* Find(std::string_view model) const;
  Json ToJson() const;
  static ResultSet FromJson(const Json& j, std::string_view path = "");
  bool operator==(const ResultSet&) const = default;
};

struct Findings {
  std::string findings;
  std::string open_questions = "None";

  Json ToJson() const;
  static Findings FromJson(const Json& j, std::string_view path = "");
};

struct ReportEntry {
  Experiment experiment;
  ResultSet results;
  Findings findings;
};

/// Append-only session document. Values are immutable; every mutation
/// returns a new Report.
class Report {
 public:
  const Query& query() const noexcept { return query_; }
  const std::vector<std::string>& models_to_evaluate() const noexcept { return models_; }
  const std::vector<ReportEntry>& entries() const noexcept { return entries_; }
  const std::vector<bool>& sufficiency_history() const noexcept { return sufficiency_; }
  const std::optional<std::string>& conclusions() const noexcept { return conclusions_; }
  bool concluded() const noexcept { return conclusions_.has_value(); }

  friend Report NewReport(const Query& query, const std::vector<std::string>& models,
                          const std::vector<ModelDescriptor>& library);
  friend Report AppendEntry(const Report& report, ReportEntry entry);
  friend Report RecordSufficiency(const Report& report, bool sufficient);
  friend Report Conclude(const Report& report, std::string conclusions,
                         std::size_t max_experiments);
  friend Report ParseReport(std::string_view bytes, const ToolRegistry& registry);

  Json ToJson() const;

 private:
  explicit Report(Query q) : query_(std::move(q)) {}

  Query query_;
  std::vector<std::string> models_;
  std::vector<ReportEntry> entries_;
  std::vector<bool> sufficiency_;
  std::optional<std::string> conclusions_;
};

/// Errors: ConfigError when `models` is empty or names a model missing from
/// `library`.
Report NewReport(const Query& query, const std::vector<std::string>& models,
                 const std::vector<ModelDescriptor>& library);

/// Errors: LifecycleError after conclusion or at the experiment cap;
/// ValidationError when the results do not cover exactly the report's models.
Report AppendEntry(const Report& report, ReportEntry entry);

/// Errors: LifecycleError when concluded or when there is no entry to judge.
Report RecordSufficiency(const Report& report, bool sufficient);

/// Requires the halt condition: last judgment true or `max_experiments`
/// entries present.
Report Conclude(const Report& report, std::string conclusions,
                std::size_t max_experiments = kMaxExperiments);

/// Canonical serialization: schema field order, two-space indent, trailing
/// newline.
std::string SerializeReport(const Report& report);
Report ParseReport(std::string_view bytes,
                   const ToolRegistry& registry = ToolRegistry::Default());

/// Structural equality; prose fields compare with whitespace collapsed.
bool StructurallyEqual(const Report& a, const Report& b);

/// Trims and collapses internal whitespace runs to single spaces.
std::string CollapseWhitespace(std::string_view text);

}  // namespace autobench
