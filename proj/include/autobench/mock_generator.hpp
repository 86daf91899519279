// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "autobench/generation.hpp"
#include "autobench/image.hpp"
#include "autobench/manifest.hpp"

namespace autobench {

// Barcode layout: a 4x4 grid of square cells in each image corner. Six
// cells are fixed so the orientation is recoverable under any flip or
// quarter-turn; the other ten carry 8 data bits and 2 parity bits.
inline constexpr int kBarcodeCells = 4;
inline constexpr int kBarcodeSize = 64;  // pixels, on a kCanvasSize image

/// 4x4 cell pattern (row-major, true = black) for a class index.
std::array<bool, 16> BarcodePattern(int index);

/// Draws the barcode into all four corners, each copy mirrored so that
/// cell (0,0) sits at the image corner.
void StampBarcode(ImageBuffer& image, int index);

/// Scans the corners in all 8 orientations; the first copy whose fixed
/// cells and parity check out wins. nullopt when nothing decodes.
std::optional<int> DecodeBarcode(const ImageBuffer& image);

/// Deterministic in (class_name, image_type, seed). Unknown classes get
/// Codebook::kUnknownIndex.
ImageBuffer MockGenerate(const Codebook& codebook, std::string_view class_name,
                         std::string_view image_type, std::uint64_t seed);

/// Generator backend that reads the class from the prompt (longest
/// codebook name on word boundaries) and the image type from the
/// "a {type} of a ..." prefix when present.
class MockGenerator : public ImageGenerator {
 public:
  explicit MockGenerator(Codebook codebook) : codebook_(std::move(codebook)) {}

  ImageBuffer Generate(const GenerateRequest& request) override;
  bool is_mock() const noexcept override { return true; }
  const Codebook& codebook() const noexcept { return codebook_; }

 private:
  Codebook codebook_;
};

}  // namespace autobench
