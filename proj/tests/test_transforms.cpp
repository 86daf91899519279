// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include <opencv2/core.hpp>

#include "autobench/errors.hpp"
#include "autobench/mock_generator.hpp"
#include "autobench/toolbox.hpp"
#include "cv_bridge.hpp"
#include "support.hpp"

using namespace autobench;
using testing::TexturedImage;

namespace {

const ToolRegistry& R() { return ToolRegistry::Default(); }

ImageBuffer Run(const std::string& call, const ImageBuffer& img, std::uint64_t seed = 1) {
  MockGenerator gen(testing::CorpusCodebook());
  TransformContext ctx;
  ctx.rng = Rng(seed);
  ctx.generator = &gen;
  ctx.companion_sampler = [](Rng&) { return TexturedImage(77); };
  ctx.sample_label = "car";
  return R().Apply(R().Parse(Json(call)), img, ctx);
}

std::vector<std::vector<std::uint8_t>> Tiles(const ImageBuffer& img, int grid) {
  const int t = img.width() / grid;
  std::vector<std::vector<std::uint8_t>> out;
  for (int ty = 0; ty < grid; ++ty) {
    for (int tx = 0; tx < grid; ++tx) {
      std::vector<std::uint8_t> tile;
      for (int y = ty * t; y < (ty + 1) * t; ++y) {
        for (int x = tx * t; x < (tx + 1) * t; ++x) {
          for (int c = 0; c < 3; ++c) tile.push_back(img.at(x, y, c));
        }
      }
      out.push_back(std::move(tile));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("PSNR agrees with two independent computations") {
  const ImageBuffer a = TexturedImage(1);
  const ImageBuffer b = TexturedImage(2);
  const double ours = transforms::Psnr(a, b);
  CHECK(ours == Catch::Approx(testing::RefPsnr(a, b)).epsilon(1e-12));
  CHECK(ours == Catch::Approx(cv::PSNR(detail::View(a), detail::View(b))).epsilon(1e-9));
  CHECK(std::isinf(transforms::Psnr(a, a)));
}

TEST_CASE("JPEG compression lands on the first quality at or below the target") {
  const ImageBuffer img = TexturedImage(11);
  const auto result = transforms::CompressToTargetPsnr(img, 26.0);
  const double psnr = testing::RefPsnr(img, result.image);
  CHECK(psnr <= 26.0);
  CHECK(result.psnr == Catch::Approx(psnr));
  const auto ladder = transforms::JpegQualityLadder();
  const auto it = std::find(ladder.begin(), ladder.end(), result.quality);
  REQUIRE(it != ladder.end());
  REQUIRE(it != ladder.begin());
  const ImageBuffer higher = DecodeImage(EncodeJpeg(img, *(it - 1)));
  CHECK(testing::RefPsnr(img, higher) > 26.0);
}

TEST_CASE("JPEG ladder is 95 down to 5 by 5 then 1") {
  const auto ladder = transforms::JpegQualityLadder();
  REQUIRE(ladder.size() == 20);
  CHECK(ladder.front() == 95);
  CHECK(ladder[18] == 5);
  CHECK(ladder.back() == 1);
}

TEST_CASE("unreachable PSNR target returns the quality-1 result") {
  const ImageBuffer flat = ImageBuffer::Filled(512, 512, 90, 90, 90);
  const auto result = transforms::CompressToTargetPsnr(flat, 5.0);
  CHECK(result.quality == 1);
}

TEST_CASE("Gaussian noise scales the variance by the requested factor") {
  const ImageBuffer img = TexturedImage(12, 512, 96, 160);
  const ImageBuffer out = Run("src.tools.transform.AddGaussianNoise(1.4)", img, 5);
  double mean_in = 0.0, mean_d = 0.0;
  const auto pi = img.pixels();
  const auto po = out.pixels();
  const double n = static_cast<double>(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    mean_in += pi[i];
    mean_d += double(po[i]) - pi[i];
  }
  mean_in /= n;
  mean_d /= n;
  double var_in = 0.0, var_d = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    var_in += (pi[i] - mean_in) * (pi[i] - mean_in);
    const double d = double(po[i]) - pi[i] - mean_d;
    var_d += d * d;
  }
  CHECK(var_d / var_in == Catch::Approx(0.4).epsilon(0.10));
}

TEST_CASE("noise on a constant image is a no-op") {
  const ImageBuffer flat = ImageBuffer::Filled(512, 512, 90, 90, 90);
  CHECK(Run("src.tools.transform.AddGaussianNoise(3.0)", flat) == flat);
}

TEST_CASE("defocus stops at the first sigma reaching the sharpness target") {
  const ImageBuffer img = TexturedImage(13);
  const auto result = transforms::DefocusToTarget(img, 10.0);
  const double initial = testing::RefLaplacianVariance(img);
  CHECK(result.initial_sharpness == Catch::Approx(initial).epsilon(1e-9));
  CHECK(testing::RefLaplacianVariance(result.image) <= initial / 10.0);
  const auto schedule = transforms::BlurSigmaSchedule();
  const auto it = std::find(schedule.begin(), schedule.end(), result.sigma);
  REQUIRE(it != schedule.end());
  REQUIRE(it != schedule.begin());
  CHECK(testing::RefLaplacianVariance(transforms::GaussianBlur(img, *(it - 1))) > initial / 10.0);
}

TEST_CASE("sigma schedule grows by 1.25 and caps at 32") {
  const auto s = transforms::BlurSigmaSchedule();
  CHECK(s.front() == 0.5);
  for (std::size_t i = 1; i + 1 < s.size(); ++i) CHECK(s[i] == Catch::Approx(s[i - 1] * 1.25));
  CHECK(s.back() == 32.0);
}

TEST_CASE("involutions and identities reproduce the input") {
  const ImageBuffer img = TexturedImage(14);
  for (const char* o : {"horizontal", "vertical"}) {
    const std::string call = std::string("src.tools.transform.FlipImage('") + o + "')";
    CHECK(Run(call, Run(call, img)) == img);
    CHECK_FALSE(Run(call, img) == img);
  }
  ImageBuffer r = img;
  for (int i = 0; i < 4; ++i) r = Run("src.tools.transform.RotateImage(90)", r);
  CHECK(r == img);
  CHECK(Run("src.tools.transform.RotateImage(0)", img) == img);
  CHECK(Run("src.tools.transform.Identity()", img) == img);
  CHECK(testing::MaxAbsDiff(Run("src.tools.transform.OverlayColor((255, 0, 0), 0)", img), img) <= 1);
  CHECK(testing::MaxAbsDiff(Run("src.tools.transform.ApplyMixUp(1.0)", img), img) <= 1);
}

TEST_CASE("shuffle preserves the tile multiset") {
  const ImageBuffer img = TexturedImage(15);
  for (int grid : {2, 4, 8}) {
    Rng rng(static_cast<std::uint64_t>(grid));
    std::vector<int> perm;
    const ImageBuffer out = transforms::ShuffleTiles(img, grid, rng, &perm);
    CHECK(Tiles(out, grid) == Tiles(img, grid));
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < grid * grid; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
  }
}

TEST_CASE("brightness and contrast behave at their neutral points") {
  const ImageBuffer img = TexturedImage(16);
  CHECK(Run("src.tools.transform.ChangeBrightness(1.0)", img) == img);
  CHECK(testing::MaxAbsDiff(Run("src.tools.transform.ChangeContrast(1.0)", img), img) <= 1);
  const ImageBuffer gray = Run("src.tools.transform.ChangeContrast(0.0)", img);
  CHECK(testing::MaxAbsDiff(gray, ImageBuffer::Filled(512, 512, gray.at(0, 0, 0), gray.at(0, 0, 0),
                                                      gray.at(0, 0, 0))) <= 1);
  const ImageBuffer dark = Run("src.tools.transform.ChangeBrightness(0.0)", img);
  CHECK(dark == ImageBuffer::Filled(512, 512, 0, 0, 0));
}

TEST_CASE("overlay at full opacity paints the colour") {
  const ImageBuffer out = Run("src.tools.transform.OverlayColor((10, 20, 30), 1.0)", TexturedImage(17));
  CHECK(out == ImageBuffer::Filled(512, 512, 10, 20, 30));
}

TEST_CASE("every transform is deterministic for a seed and keeps the canvas size") {
  const ImageBuffer img = TexturedImage(18);
  const std::map<std::string, std::string> calls = {
      {"AddGaussianNoise", "()"},
      {"AddJPEGCompression", "()"},
      {"ApplyCutMix", "()"},
      {"ApplyMixUp", "()"},
      {"ChangeBrightness", "(1.3)"},
      {"ChangeContrast", "(0.5)"},
      {"CropRandomShuffleAndRecompose", "(4)"},
      {"DefocusBlurImage", "()"},
      {"EditImageStyle", "('sketch')"},
      {"EditImageWeather", "('snowy')"},
      {"FlipImage", "('vertical')"},
      {"Identity", "()"},
      {"OverlayColor", "((0, 0, 255), 0.3)"},
      {"PasteGeneratedObjectAtRandomPosition", "('dog', 64, 2)"},
      {"PasteGeometricShapeAtRandomPosition", "('circle', 64, (255, 0, 0), True, 2)"},
      {"PasteTextAtRandomPosition", "('hello', 32, (0, 0, 0), 2)"},
      {"RotateImage", "(33)"},
      {"ZoomAtRandomPosition", "()"},
  };
  REQUIRE(calls.size() == R().OfKind(ToolKind::kTransform).size());
  for (const auto& [name, args] : calls) {
    INFO(name);
    const std::string call = "src.tools.transform." + name + args;
    const ImageBuffer a = Run(call, img, 9);
    CHECK(a.width() == 512);
    CHECK(a.height() == 512);
    CHECK(a == Run(call, img, 9));
  }
}

TEST_CASE("label-dependent transforms need a label and a generator") {
  TransformContext ctx;
  const ToolCall call = R().Parse(Json("src.tools.transform.EditImageStyle('sketch')"));
  CHECK_THROWS_AS(R().Apply(call, TexturedImage(1), ctx), ToolError);
  const ToolCall mix = R().Parse(Json("src.tools.transform.ApplyMixUp()"));
  CHECK_THROWS_AS(R().Apply(mix, TexturedImage(1), ctx), ToolError);
}

TEST_CASE("style edits keep the class barcode") {
  const ImageBuffer out = Run("src.tools.transform.EditImageStyle('painting')", TexturedImage(19));
  CHECK(DecodeBarcode(out) == testing::CorpusCodebook().IndexOf("car"));
}
