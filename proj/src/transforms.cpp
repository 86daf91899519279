// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

// Native implementations of the transform tools. Pixel math runs in [0,1]
// floats and is quantized back to 8 bits with round-to-nearest.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/random/beta_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <opencv2/imgproc.hpp>

#include "autobench/errors.hpp"
#include "cv_bridge.hpp"
#include "transform_impl.hpp"

namespace autobench::transforms {
namespace {

double GetDouble(const ToolCall& call, const char* name) {
  return call.kwargs.at(name).get<double>();
}
int GetInt(const ToolCall& call, const char* name) {
  return static_cast<int>(call.kwargs.at(name).get<std::int64_t>());
}
std::string GetString(const ToolCall& call, const char* name) {
  return call.kwargs.at(name).get<std::string>();
}
cv::Scalar GetColor(const ToolCall& call, const char* name) {
  const auto& c = call.kwargs.at(name);
  return cv::Scalar(c[0].get<int>(), c[1].get<int>(), c[2].get<int>());
}

int UniformInt(Rng& rng, int lo, int hi) {
  return boost::random::uniform_int_distribution<int>(lo, hi)(rng);
}

ImageGenerator& RequireGenerator(const TransformContext& ctx, const char* tool) {
  if (!ctx.generator) {
    throw ToolError(std::string(tool) + " requires a generation backend");
  }
  return *ctx.generator;
}

const std::string& RequireLabel(const TransformContext& ctx, const char* tool) {
  if (!ctx.sample_label || ctx.sample_label->empty()) {
    throw ToolError(std::string(tool) + " requires a sample label, but the sample has none");
  }
  return *ctx.sample_label;
}

ImageBuffer GenerateCanvas(TransformContext& ctx, const char* tool, std::string prompt) {
  auto& gen = RequireGenerator(ctx, tool);
  GenerateRequest req{std::move(prompt), ctx.rng(), kCanvasSize, kCanvasSize};
  return Standardize(gen.Generate(req));
}

double Luma(const ImageBuffer& img, int x, int y) {
  return (0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) + 0.114 * img.at(x, y, 2)) / 255.0;
}

}  // namespace

// --- numeric building blocks ------------------------------------------------

double Psnr(const ImageBuffer& a, const ImageBuffer& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error("PSNR needs images of equal size");
  }
  double sse = 0.0;
  auto pa = a.pixels();
  auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const double d = static_cast<double>(pa[i]) - pb[i];
    sse += d * d;
  }
  const double mse = sse / static_cast<double>(pa.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

std::vector<int> JpegQualityLadder() {
  std::vector<int> ladder;
  for (int q = 95; q >= 5; q -= 5) ladder.push_back(q);
  ladder.push_back(1);
  return ladder;
}

JpegResult CompressToTargetPsnr(const ImageBuffer& image, double target_psnr) {
  JpegResult last;
  for (int q : JpegQualityLadder()) {
    ImageBuffer decoded = DecodeImage(EncodeJpeg(image, q));
    const double psnr = Psnr(decoded, image);
    last = JpegResult{std::move(decoded), q, psnr};
    if (psnr <= target_psnr) break;
  }
  return last;
}

double LaplacianSharpness(const ImageBuffer& image) {
  const int w = image.width();
  const int h = image.height();
  if (w < 3 || h < 3) return 0.0;
  std::vector<double> luma(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) luma[static_cast<std::size_t>(y) * w + x] = Luma(image, x, y);
  }
  double sum = 0.0, sum_sq = 0.0;
  std::size_t n = 0;
  for (int y = 1; y < h - 1; ++y) {
    for (int x = 1; x < w - 1; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      const double r = luma[i - 1] + luma[i + 1] + luma[i - w] + luma[i + w] - 4.0 * luma[i];
      sum += r;
      sum_sq += r * r;
      ++n;
    }
  }
  const double mean = sum / static_cast<double>(n);
  return std::max(0.0, sum_sq / static_cast<double>(n) - mean * mean);
}

ImageBuffer GaussianBlur(const ImageBuffer& image, double sigma) {
  cv::Mat f = detail::ToFloat(image);
  cv::Mat out;
  cv::GaussianBlur(f, out, cv::Size(0, 0), sigma, sigma, cv::BORDER_REFLECT_101);
  return detail::FromFloat(out);
}

std::vector<double> BlurSigmaSchedule() {
  constexpr double kStart = 0.5;
  constexpr double kGrowth = 1.25;
  constexpr double kCap = 32.0;
  std::vector<double> sigmas;
  for (double s = kStart; s <= kCap; s *= kGrowth) sigmas.push_back(s);
  if (sigmas.back() < kCap) sigmas.push_back(kCap);
  return sigmas;
}

BlurResult DefocusToTarget(const ImageBuffer& image, double blur_factor) {
  const double initial = LaplacianSharpness(image);
  const double target = initial / blur_factor;
  BlurResult result;
  result.initial_sharpness = initial;
  for (double sigma : BlurSigmaSchedule()) {
    result.image = GaussianBlur(image, sigma);
    result.sigma = sigma;
    result.sharpness = LaplacianSharpness(result.image);
    if (result.sharpness <= target) break;
  }
  return result;
}

ImageBuffer Flip(const ImageBuffer& image, bool horizontal) {
  cv::Mat out;
  cv::flip(detail::View(image), out, horizontal ? 1 : 0);
  return detail::FromMat(out);
}

ImageBuffer Rotate(const ImageBuffer& image, double angle) {
  double a = std::fmod(angle, 360.0);
  if (a < 0) a += 360.0;
  cv::Mat out;
  if (a == 0.0) return image;
  if (a == 90.0) {
    cv::rotate(detail::View(image), out, cv::ROTATE_90_CLOCKWISE);
  } else if (a == 180.0) {
    cv::rotate(detail::View(image), out, cv::ROTATE_180);
  } else if (a == 270.0) {
    cv::rotate(detail::View(image), out, cv::ROTATE_90_COUNTERCLOCKWISE);
  } else {
    const cv::Point2f center((image.width() - 1) / 2.0f, (image.height() - 1) / 2.0f);
    // OpenCV's positive angle is counter-clockwise.
    cv::Mat m = cv::getRotationMatrix2D(center, -a, 1.0);
    cv::warpAffine(detail::View(image), out, m, cv::Size(image.width(), image.height()),
                   cv::INTER_LINEAR, cv::BORDER_CONSTANT, cv::Scalar(0, 0, 0));
  }
  return detail::FromMat(out);
}

ImageBuffer ShuffleTiles(const ImageBuffer& image, int grid_size, Rng& rng,
                         std::vector<int>* perm_out) {
  if (grid_size < 1) throw ToolError("grid_size must be positive");
  const int tile_w = image.width() / grid_size;
  const int tile_h = image.height() / grid_size;
  const int tiles = grid_size * grid_size;
  std::vector<int> perm(tiles);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = tiles - 1; i > 0; --i) std::swap(perm[i], perm[UniformInt(rng, 0, i)]);

  // Pixels beyond grid_size * tile (when the side is not divisible) stay put.
  ImageBuffer out = image;
  cv::Mat src = detail::View(image);
  cv::Mat dst = detail::MutableView(out);
  for (int i = 0; i < tiles; ++i) {
    const int sx = (perm[i] % grid_size) * tile_w, sy = (perm[i] / grid_size) * tile_h;
    const int dx = (i % grid_size) * tile_w, dy = (i / grid_size) * tile_h;
    src(cv::Rect(sx, sy, tile_w, tile_h)).copyTo(dst(cv::Rect(dx, dy, tile_w, tile_h)));
  }
  if (perm_out) *perm_out = std::move(perm);
  return out;
}

// --- tools ------------------------------------------------------------------

ImageBuffer ApplyAddGaussianNoise(const ToolCall& call, const ImageBuffer& image,
                                  TransformContext& ctx) {
  const double factor = GetDouble(call, "variance_factor");
  cv::Mat f = detail::ToFloat(image);
  cv::Scalar mean, stddev;
  cv::meanStdDev(f.reshape(1), mean, stddev);
  const double variance = stddev[0] * stddev[0];
  const double noise_sd = std::sqrt(std::max(0.0, (factor - 1.0) * variance));
  if (noise_sd == 0.0) return image;
  boost::random::normal_distribution<double> normal(0.0, noise_sd);
  auto* p = f.ptr<float>();
  const std::size_t n = f.total() * f.channels();
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<float>(p[i] + normal(ctx.rng));
  return detail::FromFloat(f);
}

ImageBuffer ApplyAddJPEGCompression(const ToolCall& call, const ImageBuffer& image,
                                    TransformContext&) {
  return CompressToTargetPsnr(image, GetDouble(call, "target_psnr")).image;
}

ImageBuffer ApplyApplyCutMix(const ToolCall& call, const ImageBuffer& image,
                             TransformContext& ctx) {
  if (!ctx.companion_sampler) throw ToolError("ApplyCutMix requires a companion sampler");
  const ImageBuffer companion = Standardize(ctx.companion_sampler(ctx.rng));
  const double alpha = GetDouble(call, "alpha");
  const double lambda = boost::random::beta_distribution<double>(alpha, alpha)(ctx.rng);
  const int w = image.width();
  const int h = image.height();
  const int cut_w = std::clamp(static_cast<int>(std::lround(w * std::sqrt(1.0 - lambda))), 0, w);
  const int cut_h = std::clamp(static_cast<int>(std::lround(h * std::sqrt(1.0 - lambda))), 0, h);
  ImageBuffer out = image;
  if (cut_w == 0 || cut_h == 0) return out;
  const int x0 = UniformInt(ctx.rng, 0, w - cut_w);
  const int y0 = UniformInt(ctx.rng, 0, h - cut_h);
  const cv::Rect box(x0, y0, cut_w, cut_h);
  cv::Mat dst = detail::MutableView(out);
  detail::View(companion)(box).copyTo(dst(box));
  return out;
}

ImageBuffer ApplyApplyMixUp(const ToolCall& call, const ImageBuffer& image,
                            TransformContext& ctx) {
  if (!ctx.companion_sampler) throw ToolError("ApplyMixUp requires a companion sampler");
  const ImageBuffer companion = Standardize(ctx.companion_sampler(ctx.rng));
  const double alpha = GetDouble(call, "alpha");
  cv::Mat mixed;
  cv::addWeighted(detail::ToFloat(image), alpha, detail::ToFloat(companion), 1.0 - alpha, 0.0,
                  mixed);
  return detail::FromFloat(mixed);
}

ImageBuffer ApplyChangeBrightness(const ToolCall& call, const ImageBuffer& image,
                                  TransformContext&) {
  cv::Mat f = detail::ToFloat(image) * GetDouble(call, "brightness_factor");
  return detail::FromFloat(f);
}

ImageBuffer ApplyChangeContrast(const ToolCall& call, const ImageBuffer& image,
                                TransformContext&) {
  const double factor = GetDouble(call, "contrast_factor");
  double luma_sum = 0.0;
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) luma_sum += Luma(image, x, y);
  }
  const double gray = luma_sum / (static_cast<double>(image.width()) * image.height());
  cv::Mat f = detail::ToFloat(image);
  cv::Mat out = f * factor + cv::Scalar::all(gray * (1.0 - factor));
  return detail::FromFloat(out);
}

ImageBuffer ApplyCropRandomShuffleAndRecompose(const ToolCall& call, const ImageBuffer& image,
                                               TransformContext& ctx) {
  return ShuffleTiles(image, GetInt(call, "grid_size"), ctx.rng);
}

ImageBuffer ApplyDefocusBlurImage(const ToolCall& call, const ImageBuffer& image,
                                  TransformContext&) {
  return DefocusToTarget(image, GetDouble(call, "blur_factor")).image;
}

ImageBuffer ApplyEditImageStyle(const ToolCall& call, const ImageBuffer&,
                                TransformContext& ctx) {
  const std::string& label = RequireLabel(ctx, "EditImageStyle");
  RequireGenerator(ctx, "EditImageStyle");
  return GenerateCanvas(ctx, "EditImageStyle",
                        "a " + GetString(call, "style") + " of a " + label);
}

ImageBuffer ApplyEditImageWeather(const ToolCall& call, const ImageBuffer&,
                                  TransformContext& ctx) {
  const std::string& label = RequireLabel(ctx, "EditImageWeather");
  RequireGenerator(ctx, "EditImageWeather");
  return GenerateCanvas(ctx, "EditImageWeather",
                        "a photo of a " + label + " in " + GetString(call, "weather") +
                            " weather");
}

ImageBuffer ApplyFlipImage(const ToolCall& call, const ImageBuffer& image, TransformContext&) {
  return Flip(image, GetString(call, "orientation") == "horizontal");
}

ImageBuffer ApplyIdentity(const ToolCall&, const ImageBuffer& image, TransformContext&) {
  return image;
}

ImageBuffer ApplyOverlayColor(const ToolCall& call, const ImageBuffer& image,
                              TransformContext&) {
  const double opacity = GetDouble(call, "opacity");
  const cv::Scalar color = GetColor(call, "color") * (opacity / 255.0);
  cv::Mat out = detail::ToFloat(image) * (1.0 - opacity) + color;
  return detail::FromFloat(out);
}

ImageBuffer ApplyPasteGeneratedObjectAtRandomPosition(const ToolCall& call,
                                                      const ImageBuffer& image,
                                                      TransformContext& ctx) {
  constexpr const char* kTool = "PasteGeneratedObjectAtRandomPosition";
  const auto& name_arg = call.kwargs.at("class_name");
  const std::string class_name =
      name_arg.is_null() ? RequireLabel(ctx, kTool) : name_arg.get<std::string>();
  const int size = GetInt(call, "size");
  const int repeat = GetInt(call, "repeat");
  const ImageBuffer object = Resize(
      GenerateCanvas(ctx, kTool, "a photo of a " + class_name + " on a plain white background"),
      size, size);
  ImageBuffer out = image;
  cv::Mat dst = detail::MutableView(out);
  for (int i = 0; i < repeat; ++i) {
    const int x = UniformInt(ctx.rng, 0, image.width() - size);
    const int y = UniformInt(ctx.rng, 0, image.height() - size);
    detail::View(object).copyTo(dst(cv::Rect(x, y, size, size)));
  }
  return out;
}

ImageBuffer ApplyPasteGeometricShapeAtRandomPosition(const ToolCall& call,
                                                     const ImageBuffer& image,
                                                     TransformContext& ctx) {
  const std::string shape = GetString(call, "shape");
  const int size = GetInt(call, "size");
  const cv::Scalar color = GetColor(call, "color");
  const bool fill = call.kwargs.at("fill").get<bool>();
  const int repeat = GetInt(call, "repeat");
  const int thickness = fill ? cv::FILLED : std::max(1, size / 16);

  ImageBuffer out = image;
  cv::Mat dst = detail::MutableView(out);
  for (int i = 0; i < repeat; ++i) {
    const int x = UniformInt(ctx.rng, 0, image.width() - size);
    const int y = UniformInt(ctx.rng, 0, image.height() - size);
    const int last = size - 1;
    if (shape == "circle") {
      cv::circle(dst, cv::Point(x + last / 2, y + last / 2), last / 2, color, thickness,
                 cv::LINE_8);
    } else if (shape == "square") {
      cv::rectangle(dst, cv::Point(x, y), cv::Point(x + last, y + last), color, thickness,
                    cv::LINE_8);
    } else {
      std::vector<cv::Point> tri{{x + last / 2, y}, {x, y + last}, {x + last, y + last}};
      if (fill) {
        cv::fillPoly(dst, std::vector<std::vector<cv::Point>>{tri}, color, cv::LINE_8);
      } else {
        cv::polylines(dst, tri, true, color, thickness, cv::LINE_8);
      }
    }
  }
  return out;
}

ImageBuffer ApplyPasteTextAtRandomPosition(const ToolCall& call, const ImageBuffer& image,
                                           TransformContext& ctx) {
  const std::string text = GetString(call, "text");
  const int font_size = GetInt(call, "font_size");
  const cv::Scalar color = GetColor(call, "font_color");
  const int repeat = GetInt(call, "repeat");
  constexpr int kFont = cv::FONT_HERSHEY_SIMPLEX;
  const int thickness = std::max(1, font_size / 16);
  const double scale = cv::getFontScaleFromHeight(kFont, font_size, thickness);
  int baseline = 0;
  const cv::Size box = cv::getTextSize(text, kFont, scale, thickness, &baseline);

  ImageBuffer out = image;
  cv::Mat dst = detail::MutableView(out);
  for (int i = 0; i < repeat; ++i) {
    const int x = UniformInt(ctx.rng, 0, std::max(0, image.width() - box.width));
    const int y = UniformInt(ctx.rng, std::min(box.height, image.height() - 1),
                             std::max(box.height, image.height() - 1 - baseline));
    cv::putText(dst, text, cv::Point(x, y), kFont, scale, color, thickness, cv::LINE_8);
  }
  return out;
}

ImageBuffer ApplyRotateImage(const ToolCall& call, const ImageBuffer& image, TransformContext&) {
  return Rotate(image, GetInt(call, "angle"));
}

ImageBuffer ApplyZoomAtRandomPosition(const ToolCall& call, const ImageBuffer& image,
                                      TransformContext& ctx) {
  const double zoom = GetDouble(call, "zoom_factor");
  const int window =
      std::clamp(static_cast<int>(std::lround(image.width() / zoom)), 1, image.width());
  const int x0 = UniformInt(ctx.rng, 0, image.width() - window);
  const int y0 = UniformInt(ctx.rng, 0, image.height() - window);
  cv::Mat out;
  cv::resize(detail::View(image)(cv::Rect(x0, y0, window, window)), out,
             cv::Size(image.width(), image.height()), 0, 0, cv::INTER_LINEAR);
  return detail::FromMat(out);
}

}  // namespace autobench::transforms
