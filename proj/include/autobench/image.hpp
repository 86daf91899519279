// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace autobench {

/// Side length every sample is standardized to before transforms run.
inline constexpr int kCanvasSize = 512;

/// 8-bit interleaved RGB image, row-major.
class ImageBuffer {
 public:
  ImageBuffer() = default;
  ImageBuffer(int width, int height);
  ImageBuffer(int width, int height, std::vector<std::uint8_t> pixels);

  static ImageBuffer Filled(int width, int height, std::uint8_t r, std::uint8_t g,
                            std::uint8_t b);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  static constexpr int channels() noexcept { return 3; }
  bool empty() const noexcept { return pixels_.empty(); }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }
  std::uint8_t* data() noexcept { return pixels_.data(); }
  const std::uint8_t* data() const noexcept { return pixels_.data(); }

  std::uint8_t at(int x, int y, int c) const {
    return pixels_[(static_cast<std::size_t>(y) * width_ + x) * 3 + c];
  }
  std::uint8_t& at(int x, int y, int c) {
    return pixels_[(static_cast<std::size_t>(y) * width_ + x) * 3 + c];
  }

  bool operator==(const ImageBuffer&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Codec helpers. PNG is the only wire codec; JPEG is used by the
// compression transform and for reading corpus files.
std::vector<std::uint8_t> EncodePng(const ImageBuffer& image);
ImageBuffer DecodeImage(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> EncodeJpeg(const ImageBuffer& image, int quality);
ImageBuffer ReadImageFile(const std::filesystem::path& path);
void WritePng(const ImageBuffer& image, const std::filesystem::path& path);

/// Center-crop to a square, then bilinear resize to kCanvasSize.
ImageBuffer Standardize(const ImageBuffer& image);

/// Bilinear resize to an arbitrary size.
ImageBuffer Resize(const ImageBuffer& image, int width, int height);

/// FNV-1a over dimensions and pixels, as 16 lowercase hex digits.
std::string PixelDigest(const ImageBuffer& image);

}  // namespace autobench
