// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "autobench/report.hpp"

namespace autobench {

/// (v - min) / (max - min); a constant series maps to 0.5 everywhere.
/// Throws std::invalid_argument on empty or non-finite input.
std::vector<double> MinMaxNormalize(std::span<const double> values);

/// One finite value per (model, label).
class MetricSeries {
 public:
  void Set(const std::string& model, const std::string& label, double value);
  double Get(const std::string& model, const std::string& label) const;
  bool Has(const std::string& model, const std::string& label) const;

  const std::vector<std::string>& models() const noexcept { return models_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Normalized per model across its labels.
  MetricSeries Normalized() const;

 private:
  std::vector<std::string> models_;  // first-seen order
  std::vector<std::string> labels_;
  std::map<std::pair<std::string, std::string>, double> values_;
};

/// Ordered group -> member labels. No label may appear in two groups.
using GroupingScheme = std::vector<std::pair<std::string, std::vector<std::string>>>;

struct GroupScore {
  std::string group;
  double mean = 0.0;
  bool operator==(const GroupScore&) const = default;
};

/// Mean over member labels per model, then over models. Sorted by mean
/// descending, ties by group name ascending. Throws std::invalid_argument
/// for empty groups, unknown labels, overlapping groups or missing values.
std::vector<GroupScore> RankGroups(const MetricSeries& series, const GroupingScheme& grouping);

/// Accuracy per (model, experiment) with labels "experiment_1", ...
MetricSeries AccuracySeries(const Report& report);

/// CSV with header model,label,metric,normalized,group. `normalized`
/// follows MetricSeries::Normalized; group is empty for ungrouped labels.
std::string MetricsCsv(const MetricSeries& series, const GroupingScheme& grouping = {});

}  // namespace autobench
