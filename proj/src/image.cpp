// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/image.hpp"

#include <fstream>
#include <iterator>

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "autobench/errors.hpp"
#include "cv_bridge.hpp"

namespace autobench {

ImageBuffer::ImageBuffer(int width, int height)
    : width_(width), height_(height),
      pixels_(static_cast<std::size_t>(width) * height * 3, 0) {
  if (width <= 0 || height <= 0) throw Error("image dimensions must be positive");
}

ImageBuffer::ImageBuffer(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width <= 0 || height <= 0) throw Error("image dimensions must be positive");
  if (pixels_.size() != static_cast<std::size_t>(width) * height * 3) {
    throw Error("pixel buffer size does not match dimensions");
  }
}

ImageBuffer ImageBuffer::Filled(int width, int height, std::uint8_t r, std::uint8_t g,
                                std::uint8_t b) {
  ImageBuffer out(width, height);
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); i += 3) {
    px[i] = r;
    px[i + 1] = g;
    px[i + 2] = b;
  }
  return out;
}

std::vector<std::uint8_t> EncodePng(const ImageBuffer& image) {
  cv::Mat bgr;
  cv::cvtColor(detail::View(image), bgr, cv::COLOR_RGB2BGR);
  std::vector<std::uint8_t> out;
  // Fixed compression level keeps the byte stream stable across runs.
  if (!cv::imencode(".png", bgr, out, {cv::IMWRITE_PNG_COMPRESSION, 3})) {
    throw Error("PNG encoding failed");
  }
  return out;
}

std::vector<std::uint8_t> EncodeJpeg(const ImageBuffer& image, int quality) {
  cv::Mat bgr;
  cv::cvtColor(detail::View(image), bgr, cv::COLOR_RGB2BGR);
  std::vector<std::uint8_t> out;
  if (!cv::imencode(".jpg", bgr, out, {cv::IMWRITE_JPEG_QUALITY, quality})) {
    throw Error("JPEG encoding failed");
  }
  return out;
}

ImageBuffer DecodeImage(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw Error("cannot decode an empty image buffer");
  cv::Mat raw(1, static_cast<int>(bytes.size()), CV_8UC1,
              const_cast<std::uint8_t*>(bytes.data()));
  cv::Mat bgr = cv::imdecode(raw, cv::IMREAD_COLOR);
  if (bgr.empty()) throw Error("image bytes could not be decoded");
  cv::Mat rgb;
  cv::cvtColor(bgr, rgb, cv::COLOR_BGR2RGB);
  return detail::FromMat(rgb);
}

ImageBuffer ReadImageFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open image file " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return DecodeImage(bytes);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void WritePng(const ImageBuffer& image, const std::filesystem::path& path) {
  auto bytes = EncodePng(image);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

ImageBuffer Resize(const ImageBuffer& image, int width, int height) {
  if (image.width() == width && image.height() == height) return image;
  cv::Mat out;
  cv::resize(detail::View(image), out, cv::Size(width, height), 0, 0, cv::INTER_LINEAR);
  return detail::FromMat(out);
}

ImageBuffer Standardize(const ImageBuffer& image) {
  const int side = std::min(image.width(), image.height());
  if (image.width() == kCanvasSize && image.height() == kCanvasSize) return image;
  const int x0 = (image.width() - side) / 2;
  const int y0 = (image.height() - side) / 2;
  cv::Mat square = detail::View(image)(cv::Rect(x0, y0, side, side));
  cv::Mat out;
  cv::resize(square, out, cv::Size(kCanvasSize, kCanvasSize), 0, 0, cv::INTER_LINEAR);
  return detail::FromMat(out);
}

std::string PixelDigest(const ImageBuffer& image) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint8_t b) {
    h ^= b;
    h *= 0x100000001b3ULL;
  };
  for (int v : {image.width(), image.height()}) {
    for (int s = 0; s < 32; s += 8) mix(static_cast<std::uint8_t>((v >> s) & 0xff));
  }
  for (auto b : image.pixels()) mix(b);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace autobench
