// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "autobench/image.hpp"
#include "autobench/manifest.hpp"
#include "autobench/report.hpp"
#include "autobench/rng.hpp"
#include "autobench/toolbox.hpp"

namespace autobench {

enum class Provenance { kRetrieval, kGeneration, kMock };
std::string_view ToString(Provenance p);

struct DatasetSample {
  ImageBuffer image;  // always kCanvasSize x kCanvasSize
  std::optional<std::string> class_name;
  std::string image_type = "photo";
  Provenance provenance = Provenance::kRetrieval;
};

/// The two select tools over a manifest-indexed corpus and a generation
/// backend. Thread-safe; decoded corpus images are cached.
class DataSources {
 public:
  DataSources(std::shared_ptr<const DatasetManifest> manifest, ImageGenerator* generator);

  /// Dispatches a canonical select call.
  DatasetSample Select(const ToolCall& call, Rng& rng) const;

  /// Exact class, then metaclass member, then generation. "random" draws a
  /// class uniformly.
  DatasetSample Retrieve(std::string_view class_name, std::string_view image_type,
                         Rng& rng) const;
  DatasetSample Generate(std::string_view class_name, std::string_view image_type,
                         Rng& rng) const;

  const DatasetManifest& manifest() const noexcept { return *manifest_; }
  ImageGenerator* generator() const noexcept { return generator_; }

 private:
  std::optional<ImageBuffer> LoadCached(const ImageRecord& record) const;
  const std::string& RandomClass(Rng& rng) const;

  std::shared_ptr<const DatasetManifest> manifest_;
  ImageGenerator* generator_;
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<std::string, std::optional<ImageBuffer>> cache_;
};

struct LabeledItem {
  DatasetSample sample;
  int truth_index = 0;
};

struct LabeledDataset {
  std::string question;
  std::vector<std::string> choices;  // ground-truth options only
  std::vector<LabeledItem> items;    // choice-major, then repetition
};

struct BuildOptions {
  /// 0 picks min(hardware threads, 8).
  int threads = 0;
};

/// Runs every answer's select call and transform chain samples_per_choice
/// times. The experiment must carry its sampling block. Each item draws
/// from its own stream DeriveStream(sampling.seed, {choice, repetition}),
/// so the output does not depend on the thread count. Failures are
/// rethrown with their (choice, repetition) coordinates; when several
/// items fail, the first in item order is reported.
LabeledDataset BuildDataset(const Experiment& experiment, const DataSources& sources,
                            const ToolRegistry& registry, const BuildOptions& options = {});

}  // namespace autobench
