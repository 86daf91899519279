// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace autobench {

std::vector<double> MinMaxNormalize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("cannot normalize an empty series");
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("cannot normalize a non-finite value");
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double min = *lo;
  const double range = *hi - *lo;
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(range > 0.0 ? (v - min) / range : 0.5);
  return out;
}

void MetricSeries::Set(const std::string& model, const std::string& label, double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("metric values must be finite");
  if (std::find(models_.begin(), models_.end(), model) == models_.end()) models_.push_back(model);
  if (std::find(labels_.begin(), labels_.end(), label) == labels_.end()) labels_.push_back(label);
  values_[{model, label}] = value;
}

double MetricSeries::Get(const std::string& model, const std::string& label) const {
  auto it = values_.find({model, label});
  if (it == values_.end()) {
    throw std::invalid_argument("no value for (" + model + ", " + label + ")");
  }
  return it->second;
}

bool MetricSeries::Has(const std::string& model, const std::string& label) const {
  return values_.count({model, label}) > 0;
}

MetricSeries MetricSeries::Normalized() const {
  MetricSeries out;
  for (const auto& m : models_) {
    std::vector<std::string> present;
    std::vector<double> vals;
    for (const auto& l : labels_) {
      if (Has(m, l)) {
        present.push_back(l);
        vals.push_back(Get(m, l));
      }
    }
    const auto norm = MinMaxNormalize(vals);
    for (std::size_t i = 0; i < present.size(); ++i) out.Set(m, present[i], norm[i]);
  }
  return out;
}

std::vector<GroupScore> RankGroups(const MetricSeries& series, const GroupingScheme& grouping) {
  std::set<std::string> labels(series.labels().begin(), series.labels().end());
  std::set<std::string> used;
  std::vector<GroupScore> out;
  for (const auto& [group, members] : grouping) {
    if (members.empty()) throw std::invalid_argument("group " + group + " has no members");
    for (const auto& l : members) {
      if (!labels.count(l)) throw std::invalid_argument("group " + group + ": unknown label " + l);
      if (!used.insert(l).second) throw std::invalid_argument("label " + l + " in two groups");
    }
    if (series.models().empty()) throw std::invalid_argument("series has no models");
    double over_models = 0.0;
    for (const auto& m : series.models()) {
      double sum = 0.0;
      for (const auto& l : members) sum += series.Get(m, l);
      over_models += sum / static_cast<double>(members.size());
    }
    out.push_back({group, over_models / static_cast<double>(series.models().size())});
  }
  std::stable_sort(out.begin(), out.end(), [](const GroupScore& a, const GroupScore& b) {
    if (a.mean != b.mean) return a.mean > b.mean;
    return a.group < b.group;
  });
  return out;
}

MetricSeries AccuracySeries(const Report& report) {
  MetricSeries s;
  for (std::size_t i = 0; i < report.entries().size(); ++i) {
    const std::string label = "experiment_" + std::to_string(i + 1);
    for (const auto& [model, result] : report.entries()[i].results.models) {
      s.Set(model, label, result.accuracy);
    }
  }
  return s;
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string Number(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << v;
  return os.str();
}

}  // namespace

std::string MetricsCsv(const MetricSeries& series, const GroupingScheme& grouping) {
  std::map<std::string, std::string> group_of;
  for (const auto& [g, members] : grouping) {
    for (const auto& l : members) group_of[l] = g;
  }
  const MetricSeries norm = series.models().empty() ? MetricSeries{} : series.Normalized();
  std::string out = "model,label,metric,normalized,group\n";
  for (const auto& m : series.models()) {
    for (const auto& l : series.labels()) {
      if (!series.Has(m, l)) continue;
      auto g = group_of.find(l);
      out += CsvField(m) + "," + CsvField(l) + "," + Number(series.Get(m, l)) + "," +
             Number(norm.Get(m, l)) + "," + (g == group_of.end() ? "" : CsvField(g->second)) +
             "\n";
    }
  }
  return out;
}

}  // namespace autobench
