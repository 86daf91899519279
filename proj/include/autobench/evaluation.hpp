// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "autobench/dataset.hpp"
#include "autobench/image.hpp"
#include "autobench/report.hpp"

namespace autobench {

/// One candidate model behind the score protocol. Implementations must be
/// safe for concurrent calls.
class ModelClient {
 public:
  virtual ~ModelClient() = default;
  virtual const std::string& name() const = 0;
  /// One log-likelihood per presented choice, same order.
  virtual std::vector<double> Score(const ImageBuffer& image, const std::string& question,
                                    const std::vector<std::string>& choices) = 0;
};

struct Prediction {
  std::size_t item = 0;
  std::size_t selected = 0;
  bool abstained = false;
};

/// Argmax with ties to the lowest index; the last slot is "Unknown".
/// Throws ProtocolError on an empty vector or a non-finite value.
Prediction RankAnswer(std::span<const double> scores);

/// Abstentions count as incorrect. Throws std::logic_error when the
/// prediction count does not match the item count.
ModelResult ComputeMetrics(const std::vector<Prediction>& predictions,
                           const LabeledDataset& dataset);

/// Ground-truth choices followed by "Unknown".
std::vector<std::string> PresentedChoices(const LabeledDataset& dataset);

struct EvalOptions {
  int in_flight = 4;  // concurrent score requests per model
};

/// Scores every item with every model. A model that fails on any item gets
/// an `error` diagnostic and metrics over the items it did score; the
/// other models are unaffected. Output follows `models` order.
ResultSet Evaluate(const std::vector<ModelClient*>& models, const LabeledDataset& dataset,
                   const EvalOptions& options = {});

}  // namespace autobench
