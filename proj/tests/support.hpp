// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures and independent reference computations for the tests.
// Nothing here calls into the code under test's numeric helpers.

#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "autobench/chat.hpp"
#include "autobench/config.hpp"
#include "autobench/dataset.hpp"
#include "autobench/image.hpp"
#include "autobench/manifest.hpp"
#include "autobench/mock_generator.hpp"
#include "autobench/report.hpp"

namespace testing {

using autobench::ImageBuffer;
using autobench::Json;

inline std::filesystem::path TestFixtures() { return AUTOBENCH_TEST_FIXTURES; }

inline std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Sum of sinusoids plus seeded jitter, values kept inside [lo, hi] so
/// additive perturbations rarely clamp.
inline ImageBuffer TexturedImage(std::uint32_t seed, int size = 512, int lo = 48, int hi = 207) {
  ImageBuffer img(size, size);
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  const double mid = (lo + hi) / 2.0;
  const double amp = (hi - lo) / 2.0;
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      for (int c = 0; c < 3; ++c) {
        const double v = 0.45 * std::sin(x * (0.07 + 0.02 * c)) * std::cos(y * 0.05) +
                         0.3 * std::sin((x + y) * 0.31 + c) + 0.25 * jitter(gen);
        img.at(x, y, c) = static_cast<std::uint8_t>(std::lround(mid + amp * v));
      }
    }
  }
  return img;
}

/// PSNR over all channels with peak 255.
inline double RefPsnr(const ImageBuffer& a, const ImageBuffer& b) {
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  double se = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const double d = static_cast<double>(pa[i]) - static_cast<double>(pb[i]);
    se += d * d;
  }
  const double mse = se / static_cast<double>(pa.size());
  if (mse == 0.0) return INFINITY;
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

/// Variance of the 4-neighbour Laplacian of Rec. 601 luma in [0,1] over
/// interior pixels.
inline double RefLaplacianVariance(const ImageBuffer& img) {
  const int w = img.width();
  const int h = img.height();
  std::vector<double> luma(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      luma[static_cast<std::size_t>(y) * w + x] =
          (0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) + 0.114 * img.at(x, y, 2)) / 255.0;
    }
  }
  auto L = [&](int x, int y) { return luma[static_cast<std::size_t>(y) * w + x]; };
  double sum = 0.0;
  double sq = 0.0;
  std::size_t n = 0;
  for (int y = 1; y < h - 1; ++y) {
    for (int x = 1; x < w - 1; ++x) {
      const double v = L(x - 1, y) + L(x + 1, y) + L(x, y - 1) + L(x, y + 1) - 4.0 * L(x, y);
      sum += v;
      sq += v * v;
      ++n;
    }
  }
  const double mean = sum / static_cast<double>(n);
  return sq / static_cast<double>(n) - mean * mean;
}

inline int MaxAbsDiff(const ImageBuffer& a, const ImageBuffer& b) {
  int m = 0;
  for (std::size_t i = 0; i < a.pixels().size(); ++i) {
    m = std::max(m, std::abs(int(a.pixels()[i]) - int(b.pixels()[i])));
  }
  return m;
}

// --- scripted orchestrator payloads ------------------------------------------

inline autobench::ScriptEntry Entry(std::string schema, Json payload) {
  autobench::ScriptEntry e;
  e.expect_schema = std::move(schema);
  e.payload = std::move(payload);
  return e;
}

inline autobench::ScriptEntry RawEntry(std::string schema, std::string raw) {
  autobench::ScriptEntry e;
  e.expect_schema = std::move(schema);
  e.raw = std::move(raw);
  return e;
}

inline Json SelectCall(const std::string& tool, const std::string& cls,
                       const std::string& type = "photo") {
  return Json{{"module_path", "src.tools.select"},
              {"name", tool},
              {"kwargs", Json{{"class_name", cls}, {"image_type", type}}}};
}

inline Json TransformCall(const std::string& tool, Json kwargs = Json::object()) {
  return Json{{"module_path", "src.tools.transform"}, {"name", tool}, {"kwargs", std::move(kwargs)}};
}

inline Json InitPayload(std::vector<std::string> models) {
  return Json{{"models_to_evaluate", std::move(models)}};
}

/// Two-choice car/truck experiment; generation gives each item a distinct
/// image.
inline Json ExperimentPayload(const std::string& select_tool = "TextToImageGeneration",
                              Json transform = TransformCall("Identity")) {
  Json answers = Json::array();
  for (const char* cls : {"car", "truck"}) {
    answers.push_back(Json{{"text", std::string("A ") + cls},
                           {"image_select_function", SelectCall(select_tool, cls)},
                           {"image_transform_functions", Json::array({transform})}});
  }
  return Json{{"question", "What vehicle is shown in the image?"}, {"answers", answers}};
}

inline Json FindingsPayload(const std::string& text = "The oracle is perfect.") {
  return Json{{"findings", text}, {"open_questions", "None"}};
}

inline Json SufficiencyPayload(bool v) { return Json{{"sufficient", v}}; }

inline Json ConclusionsPayload() { return Json{{"conclusions", "Done."}}; }

inline std::shared_ptr<const autobench::DatasetManifest> CorpusManifest() {
  static const auto manifest = std::make_shared<const autobench::DatasetManifest>(
      autobench::DatasetManifest::Load(autobench::FixtureDir() / "corpus" / "manifest.json"));
  return manifest;
}

inline autobench::Codebook CorpusCodebook() {
  return autobench::Codebook(CorpusManifest()->ClassNames());
}

}  // namespace testing
