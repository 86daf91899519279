// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "autobench/image.hpp"

namespace autobench {

struct GenerateRequest {
  std::string prompt;
  std::uint64_t seed = 0;
  int width = kCanvasSize;
  int height = kCanvasSize;
};

/// Text-to-image backend. Implemented by the HTTP client and the in-process
/// mock generator. Implementations must be safe for concurrent calls.
class ImageGenerator {
 public:
  virtual ~ImageGenerator() = default;
  virtual ImageBuffer Generate(const GenerateRequest& request) = 0;
  /// True for the in-process barcode generator (recorded as sample provenance).
  virtual bool is_mock() const noexcept { return false; }
};

}  // namespace autobench
