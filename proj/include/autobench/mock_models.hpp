// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "autobench/evaluation.hpp"
#include "autobench/manifest.hpp"
#include "autobench/toolbox.hpp"

namespace autobench {

/// Reads the corner barcode and scores the choice naming that class 0,
/// other choices -5. A trailing "Unknown" gets -10 when some choice
/// matched and 0 otherwise, so an unreadable image abstains.
class OracleModel : public ModelClient {
 public:
  OracleModel(std::string name, Codebook codebook)
      : name_(std::move(name)), codebook_(std::move(codebook)) {}
  const std::string& name() const override { return name_; }
  std::vector<double> Score(const ImageBuffer& image, const std::string& question,
                            const std::vector<std::string>& choices) override;

 private:
  std::string name_;
  Codebook codebook_;
};

/// Uniform(-10, 0) per choice from a stream keyed by (seed, image digest,
/// question): repeat requests get identical answers.
class RandomModel : public ModelClient {
 public:
  RandomModel(std::string name, std::uint64_t seed) : name_(std::move(name)), seed_(seed) {}
  const std::string& name() const override { return name_; }
  std::vector<double> Score(const ImageBuffer& image, const std::string& question,
                            const std::vector<std::string>& choices) override;

 private:
  std::string name_;
  std::uint64_t seed_;
};

/// Replays a score table. Lookup order: (question, image digest, choice),
/// then (question, choice), then -10.
class BiasedTable {
 public:
  void Set(const std::string& question, const std::string& choice, double score);
  void Set(const std::string& question, const std::string& image_digest,
           const std::string& choice, double score);
  double Lookup(const std::string& question, const std::string& image_digest,
                const std::string& choice) const;

  /// [{question, choice, log_likelihood, image_digest?}, ...]
  static BiasedTable FromJson(const Json& j);
  Json ToJson() const;

 private:
  std::map<std::tuple<std::string, std::string, std::string>, double> exact_;
  std::map<std::pair<std::string, std::string>, double> by_choice_;
};

class BiasedModel : public ModelClient {
 public:
  BiasedModel(std::string name, std::shared_ptr<const BiasedTable> table)
      : name_(std::move(name)), table_(std::move(table)) {}
  const std::string& name() const override { return name_; }
  std::vector<double> Score(const ImageBuffer& image, const std::string& question,
                            const std::vector<std::string>& choices) override;

 private:
  std::string name_;
  std::shared_ptr<const BiasedTable> table_;
};

/// Everything the mock routes need besides the request.
struct MockFixtures {
  Codebook codebook;
  std::uint64_t random_seed = 0;
  std::map<std::string, std::shared_ptr<const BiasedTable>> biased;
};

/// Route names: "oracle", "random", "random-<seed>", "biased-<table>".
/// Returns nullptr for unknown routes. "unavailable" is a server-only
/// route and also yields nullptr here.
std::unique_ptr<ModelClient> MakeMockModel(const std::string& route,
                                           const std::string& display_name,
                                           const MockFixtures& fixtures);

}  // namespace autobench
