// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/evaluation.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "autobench/errors.hpp"

namespace autobench {

Prediction RankAnswer(std::span<const double> scores) {
  if (scores.empty()) throw ProtocolError("empty score vector");
  std::size_t best = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw ProtocolError("non-finite score at index " + std::to_string(i));
    }
    if (scores[i] > scores[best]) best = i;
  }
  return Prediction{0, best, best + 1 == scores.size()};
}

std::vector<std::string> PresentedChoices(const LabeledDataset& dataset) {
  std::vector<std::string> out = dataset.choices;
  out.emplace_back(kUnknownChoice);
  return out;
}

ModelResult ComputeMetrics(const std::vector<Prediction>& predictions,
                           const LabeledDataset& dataset) {
  if (predictions.size() != dataset.items.size()) {
    throw std::logic_error("prediction count does not match item count");
  }
  const std::size_t k = dataset.choices.size();
  std::vector<std::size_t> hits(k, 0), totals(k, 0);
  std::size_t correct = 0, abstained = 0;
  for (const auto& p : predictions) {
    const int truth = dataset.items.at(p.item).truth_index;
    ++totals[truth];
    if (p.abstained) ++abstained;
    if (!p.abstained && p.selected == static_cast<std::size_t>(truth)) {
      ++correct;
      ++hits[truth];
    }
  }
  ModelResult r;
  const double n = static_cast<double>(predictions.size());
  r.accuracy = n > 0 ? correct / n : 0.0;
  r.abstention_rate = n > 0 ? abstained / n : 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    r.class_wise.emplace_back(dataset.choices[c],
                              totals[c] ? static_cast<double>(hits[c]) / totals[c] : 0.0);
  }
  return r;
}

namespace {

ModelResult EvaluateOne(ModelClient& model, const LabeledDataset& dataset, int in_flight) {
  const auto presented = PresentedChoices(dataset);
  const std::size_t n = dataset.items.size();
  std::vector<std::optional<Prediction>> preds(n);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex mu;
  std::optional<std::pair<std::size_t, std::string>> first_error;

  auto worker = [&] {
    for (std::size_t i = next++; i < n && !failed; i = next++) {
      try {
        const auto scores = model.Score(dataset.items[i].sample.image, dataset.question, presented);
        if (scores.size() != presented.size()) {
          throw ProtocolError("expected " + std::to_string(presented.size()) +
                              " log-likelihoods, got " + std::to_string(scores.size()));
        }
        Prediction p = RankAnswer(scores);
        p.item = i;
        preds[i] = p;
      } catch (const std::exception& e) {
        failed = true;
        std::lock_guard lock(mu);
        if (!first_error || i < first_error->first) first_error.emplace(i, e.what());
      }
    }
  };
  const int threads = std::max(1, std::min<int>(in_flight, static_cast<int>(n)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  if (!first_error) {
    std::vector<Prediction> all;
    all.reserve(n);
    for (auto& p : preds) all.push_back(*p);
    return ComputeMetrics(all, dataset);
  }
  // Partial metrics over whatever completed.
  LabeledDataset partial{dataset.question, dataset.choices, {}};
  std::vector<Prediction> done;
  for (std::size_t i = 0; i < n; ++i) {
    if (!preds[i]) continue;
    Prediction p = *preds[i];
    p.item = partial.items.size();
    partial.items.push_back(LabeledItem{{}, dataset.items[i].truth_index});
    done.push_back(p);
  }
  ModelResult r = ComputeMetrics(done, partial);
  r.error = "endpoint failed at item " + std::to_string(first_error->first) + " (" +
            std::to_string(done.size()) + " of " + std::to_string(n) +
            " items scored): " + first_error->second;
  return r;
}

}  // namespace

ResultSet Evaluate(const std::vector<ModelClient*>& models, const LabeledDataset& dataset,
                   const EvalOptions& options) {
  if (dataset.items.empty()) throw ValidationError("cannot evaluate an empty dataset");
  std::vector<ModelResult> results(models.size());
  {
    std::vector<std::jthread> per_model;
    for (std::size_t m = 0; m < models.size(); ++m) {
      per_model.emplace_back(
          [&, m] { results[m] = EvaluateOne(*models[m], dataset, options.in_flight); });
    }
  }
  ResultSet rs;
  for (std::size_t m = 0; m < models.size(); ++m) {
    rs.models.emplace_back(models[m]->name(), std::move(results[m]));
  }
  return rs;
}

}  // namespace autobench
