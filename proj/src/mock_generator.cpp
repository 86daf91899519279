// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/mock_generator.hpp"

#include <array>
#include <bit>
#include <regex>

#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>
#include <opencv2/imgproc.hpp>

#include "autobench/errors.hpp"
#include "autobench/rng.hpp"
#include "cv_bridge.hpp"

namespace autobench {
namespace {

constexpr int kCell = kBarcodeSize / kBarcodeCells;

// (row, col) of the fixed cells and their colours.
constexpr std::array<std::array<int, 3>, 6> kFixed = {{
    {0, 0, 1}, {0, 1, 1}, {1, 0, 0}, {0, 3, 0}, {3, 0, 0}, {3, 3, 0}}};

constexpr std::array<int, 10> kDataCells = {2, 5, 6, 7, 8, 9, 10, 11, 13, 14};

bool Parity(unsigned v) { return std::popcount(v) % 2 == 1; }

// Maps canonical (r, c) through dihedral element `t` (0..7).
std::pair<int, int> Dihedral(int t, int r, int c) {
  constexpr int n = kBarcodeCells - 1;
  if (t & 4) std::swap(r, c);
  switch (t & 3) {
    case 1: return {c, n - r};
    case 2: return {n - r, n - c};
    case 3: return {n - c, r};
    default: return {r, c};
  }
}

std::optional<int> ReadPattern(const std::array<bool, 16>& grid) {
  for (const auto& f : kFixed) {
    if (grid[f[0] * 4 + f[1]] != (f[2] == 1)) return std::nullopt;
  }
  unsigned value = 0;
  for (int i = 0; i < 8; ++i) value = (value << 1) | grid[kDataCells[i]];
  if (grid[kDataCells[8]] != Parity(value >> 4) || grid[kDataCells[9]] != Parity(value & 0xF)) {
    return std::nullopt;
  }
  return static_cast<int>(value);
}

}  // namespace

std::array<bool, 16> BarcodePattern(int index) {
  if (index < 0 || index > 255) throw ToolError("barcode index out of range");
  std::array<bool, 16> grid{};
  for (const auto& f : kFixed) grid[f[0] * 4 + f[1]] = f[2] == 1;
  const unsigned v = static_cast<unsigned>(index);
  for (int i = 0; i < 8; ++i) grid[kDataCells[i]] = (v >> (7 - i)) & 1;
  grid[kDataCells[8]] = Parity(v >> 4);
  grid[kDataCells[9]] = Parity(v & 0xF);
  return grid;
}

void StampBarcode(ImageBuffer& image, int index) {
  const auto grid = BarcodePattern(index);
  const int w = image.width();
  const int h = image.height();
  for (int corner = 0; corner < 4; ++corner) {
    const bool right = corner & 1;
    const bool bottom = corner & 2;
    for (int r = 0; r < kBarcodeCells; ++r) {
      for (int c = 0; c < kBarcodeCells; ++c) {
        const std::uint8_t v = grid[r * 4 + c] ? 0 : 255;
        for (int dy = 0; dy < kCell; ++dy) {
          for (int dx = 0; dx < kCell; ++dx) {
            const int x = c * kCell + dx;
            const int y = r * kCell + dy;
            const int px = right ? w - 1 - x : x;
            const int py = bottom ? h - 1 - y : y;
            for (int ch = 0; ch < 3; ++ch) image.at(px, py, ch) = v;
          }
        }
      }
    }
  }
}

std::optional<int> DecodeBarcode(const ImageBuffer& image) {
  if (image.width() < kBarcodeSize || image.height() < kBarcodeSize) return std::nullopt;
  const int w = image.width();
  const int h = image.height();
  const int corners[4][2] = {{0, 0}, {w - kBarcodeSize, 0}, {0, h - kBarcodeSize},
                             {w - kBarcodeSize, h - kBarcodeSize}};
  for (const auto& origin : corners) {
    std::array<bool, 16> sampled{};
    for (int r = 0; r < kBarcodeCells; ++r) {
      for (int c = 0; c < kBarcodeCells; ++c) {
        double sum = 0.0;
        int n = 0;
        for (int y = r * kCell + kCell / 4; y < (r + 1) * kCell - kCell / 4; ++y) {
          for (int x = c * kCell + kCell / 4; x < (c + 1) * kCell - kCell / 4; ++x) {
            const int px = origin[0] + x;
            const int py = origin[1] + y;
            sum += 0.299 * image.at(px, py, 0) + 0.587 * image.at(px, py, 1) +
                   0.114 * image.at(px, py, 2);
            ++n;
          }
        }
        sampled[r * 4 + c] = sum / n / 255.0 < 0.5;
      }
    }
    for (int t = 0; t < 8; ++t) {
      std::array<bool, 16> grid{};
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          const auto [sr, sc] = Dihedral(t, r, c);
          grid[r * 4 + c] = sampled[sr * 4 + sc];
        }
      }
      if (auto v = ReadPattern(grid)) return v;
    }
  }
  return std::nullopt;
}

ImageBuffer MockGenerate(const Codebook& codebook, std::string_view class_name,
                         std::string_view image_type, std::uint64_t seed) {
  const int index = codebook.IndexOf(class_name);
  Rng rng(DeriveStream(seed, {HashString(NormalizeName(class_name)),
                              HashString(NormalizeName(image_type))}));
  const int hue = (index * 37) % 180;

  cv::Mat hsv(kCanvasSize, kCanvasSize, CV_8UC3);
  boost::random::uniform_int_distribution<int> sat_dist(110, 200);
  const int sat = sat_dist(rng);
  boost::random::uniform_int_distribution<int> dir_dist(0, 1);
  const bool vertical = dir_dist(rng) == 1;
  for (int y = 0; y < kCanvasSize; ++y) {
    for (int x = 0; x < kCanvasSize; ++x) {
      const int t = vertical ? y : x;
      hsv.at<cv::Vec3b>(y, x) =
          cv::Vec3b(static_cast<std::uint8_t>(hue), static_cast<std::uint8_t>(sat),
                    static_cast<std::uint8_t>(120 + t * 110 / kCanvasSize));
    }
  }
  boost::random::uniform_int_distribution<int> count_dist(3, 6);
  boost::random::uniform_int_distribution<int> pos_dist(96, kCanvasSize - 96);
  boost::random::uniform_int_distribution<int> radius_dist(12, 64);
  boost::random::uniform_int_distribution<int> shift_dist(-12, 12);
  boost::random::uniform_int_distribution<int> value_dist(60, 250);
  const int circles = count_dist(rng);
  for (int i = 0; i < circles; ++i) {
    const cv::Point center(pos_dist(rng), pos_dist(rng));
    const int radius = radius_dist(rng);
    const int h = ((hue + shift_dist(rng)) % 180 + 180) % 180;
    cv::circle(hsv, center, radius, cv::Scalar(h, sat, value_dist(rng)), cv::FILLED, cv::LINE_8);
  }
  cv::Mat rgb;
  cv::cvtColor(hsv, rgb, cv::COLOR_HSV2RGB);
  ImageBuffer out = detail::FromMat(rgb);
  StampBarcode(out, index);
  return out;
}

ImageBuffer MockGenerator::Generate(const GenerateRequest& request) {
  if (request.width <= 0 || request.height <= 0) {
    throw ValidationError("generate: width and height must be positive");
  }
  const std::string name = codebook_.FindInText(request.prompt).value_or("");
  static const std::regex kTypePrefix(R"(^\s*an? (.+?) of an? )", std::regex::icase);
  std::smatch m;
  std::string image_type = "photo";
  const std::string prompt = request.prompt;
  if (std::regex_search(prompt, m, kTypePrefix)) image_type = m[1].str();
  ImageBuffer img = MockGenerate(codebook_, name.empty() ? request.prompt : name, image_type,
                                 request.seed);
  if (request.width != kCanvasSize || request.height != kCanvasSize) {
    img = Resize(img, request.width, request.height);
  }
  return img;
}

}  // namespace autobench
