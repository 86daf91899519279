// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include <boost/random/uniform_int_distribution.hpp>

#include "autobench/errors.hpp"

namespace autobench {
namespace {

[[noreturn]] void RethrowWithPrefix(std::exception_ptr ep, const std::string& prefix) {
  try {
    std::rethrow_exception(ep);
  } catch (const HealExhausted&) {
    throw;
  } catch (const ConfigError& e) {
    throw ConfigError(prefix + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(prefix + e.what());
  } catch (const ToolError& e) {
    throw ToolError(prefix + e.what());
  } catch (const TransportError& e) {
    throw TransportError(prefix + e.what());
  } catch (const ProtocolError& e) {
    throw ProtocolError(prefix + e.what());
  } catch (const std::exception& e) {
    throw ToolError(prefix + e.what());
  }
}

std::size_t Uniform(Rng& rng, std::size_t n) {
  boost::random::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(rng);
}

}  // namespace

std::string_view ToString(Provenance p) {
  switch (p) {
    case Provenance::kRetrieval: return "retrieval";
    case Provenance::kGeneration: return "generation";
    case Provenance::kMock: return "mock";
  }
  return "unknown";
}

DataSources::DataSources(std::shared_ptr<const DatasetManifest> manifest,
                         ImageGenerator* generator)
    : manifest_(std::move(manifest)), generator_(generator) {
  if (!manifest_) throw ConfigError("data sources need a manifest");
}

DatasetSample DataSources::Select(const ToolCall& call, Rng& rng) const {
  const std::string class_name = call.kwargs.at("class_name").get<std::string>();
  std::string image_type = "photo";
  if (auto it = call.kwargs.find("image_type"); it != call.kwargs.end() && it->is_string()) {
    image_type = it->get<std::string>();
  }
  if (call.name == "TextToImageRetrieval") return Retrieve(class_name, image_type, rng);
  if (call.name == "TextToImageGeneration") return Generate(class_name, image_type, rng);
  throw ToolError("not a select tool: " + call.full_name());
}

const std::string& DataSources::RandomClass(Rng& rng) const {
  const auto& classes = manifest_->classes();
  return classes[Uniform(rng, classes.size())].name;
}

std::optional<ImageBuffer> DataSources::LoadCached(const ImageRecord& record) const {
  const std::string key = record.path.string();
  {
    std::lock_guard lock(cache_mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::optional<ImageBuffer> img;
  try {
    img = Standardize(ReadImageFile(record.path));
  } catch (const Error&) {
    img.reset();
  }
  std::lock_guard lock(cache_mu_);
  return cache_.emplace(key, std::move(img)).first->second;
}

DatasetSample DataSources::Retrieve(std::string_view class_name, std::string_view image_type,
                                    Rng& rng) const {
  std::string name = NormalizeName(class_name);
  const std::string type = NormalizeName(image_type);
  if (name == "random") name = RandomClass(rng);

  const ClassEntry* entry = manifest_->FindClass(name);
  if (!entry) {
    if (const auto* members = manifest_->FindMetaclass(name)) {
      name = (*members)[Uniform(rng, members->size())];
      entry = manifest_->FindClass(name);
    }
  }
  if (entry) {
    std::vector<const ImageRecord*> candidates;
    for (const auto& r : entry->images) {
      if (r.image_type == type) candidates.push_back(&r);
    }
    // Draw in a random order until one decodes; unusable files fall through
    // to generation.
    while (!candidates.empty()) {
      const std::size_t k = Uniform(rng, candidates.size());
      if (auto img = LoadCached(*candidates[k])) {
        return DatasetSample{std::move(*img), entry->name, type, Provenance::kRetrieval};
      }
      candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  return Generate(name, type, rng);
}

DatasetSample DataSources::Generate(std::string_view class_name, std::string_view image_type,
                                    Rng& rng) const {
  if (!generator_) {
    throw ToolError("no generation backend configured for \"" + std::string(class_name) + "\"");
  }
  std::string name = NormalizeName(class_name);
  if (name == "random") name = RandomClass(rng);
  const std::string type = NormalizeName(image_type).empty() ? "photo" : NormalizeName(image_type);
  GenerateRequest req;
  req.prompt = "a " + type + " of a " + name;
  req.seed = rng();
  ImageBuffer img = generator_->Generate(req);
  if (img.width() != kCanvasSize || img.height() != kCanvasSize) img = Standardize(img);
  return DatasetSample{std::move(img), name, type,
                       generator_->is_mock() ? Provenance::kMock : Provenance::kGeneration};
}

LabeledDataset BuildDataset(const Experiment& experiment, const DataSources& sources,
                            const ToolRegistry& registry, const BuildOptions& options) {
  if (!experiment.sampling) throw ValidationError("experiment has no sampling block");
  const int per_choice = experiment.sampling->samples_per_choice;
  const std::uint64_t seed = experiment.sampling->seed;
  if (per_choice < 1) throw ValidationError("samples_per_choice must be positive");

  LabeledDataset ds;
  ds.question = experiment.question;
  ds.choices = experiment.choices();
  const std::size_t n = experiment.answers.size() * static_cast<std::size_t>(per_choice);
  std::vector<std::optional<LabeledItem>> slots(n);
  std::vector<std::exception_ptr> errors(n);

  ToolCall companion_call{std::string(kSelectModule), "TextToImageRetrieval",
                          Json{{"class_name", "random"}, {"image_type", "photo"}}};

  auto build_one = [&](std::size_t i) {
    const std::size_t choice = i / per_choice;
    const std::size_t rep = i % per_choice;
    const Answer& answer = experiment.answers[choice];
    TransformContext ctx;
    ctx.rng = Rng(DeriveStream(seed, {choice, rep}));
    DatasetSample sample = sources.Select(answer.select, ctx.rng);
    ctx.generator = sources.generator();
    ctx.companion_sampler = [&](Rng& r) { return sources.Select(companion_call, r).image; };
    ctx.sample_label = sample.class_name;
    for (const auto& t : answer.transforms) sample.image = registry.Apply(t, sample.image, ctx);
    slots[i] = LabeledItem{std::move(sample), static_cast<int>(choice)};
  };

  int threads = options.threads;
  if (threads <= 0) threads = static_cast<int>(std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
  threads = static_cast<int>(std::min<std::size_t>(threads, n));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        build_one(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) {
      RethrowWithPrefix(errors[i], "build failed at choice " + std::to_string(i / per_choice) +
                                       ", repetition " + std::to_string(i % per_choice) + ": ");
    }
  }
  ds.items.reserve(n);
  for (auto& s : slots) ds.items.push_back(std::move(*s));
  return ds;
}

}  // namespace autobench
