// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

// Private bridge between ImageBuffer and cv::Mat. Not installed.

#pragma once

#include <cstring>

#include <opencv2/core.hpp>

#include "autobench/image.hpp"

namespace autobench::detail {

/// Non-owning CV_8UC3 view. The returned Mat must not outlive `image`.
inline cv::Mat View(const ImageBuffer& image) {
  return cv::Mat(image.height(), image.width(), CV_8UC3,
                 const_cast<std::uint8_t*>(image.data()));
}

inline cv::Mat MutableView(ImageBuffer& image) {
  return cv::Mat(image.height(), image.width(), CV_8UC3, image.data());
}

inline ImageBuffer FromMat(const cv::Mat& mat) {
  CV_Assert(mat.type() == CV_8UC3);
  ImageBuffer out(mat.cols, mat.rows);
  const std::size_t row_bytes = static_cast<std::size_t>(mat.cols) * 3;
  for (int y = 0; y < mat.rows; ++y) {
    std::memcpy(out.data() + y * row_bytes, mat.ptr<std::uint8_t>(y), row_bytes);
  }
  return out;
}

/// CV_32FC3 in [0,1].
inline cv::Mat ToFloat(const ImageBuffer& image) {
  cv::Mat f;
  View(image).convertTo(f, CV_32FC3, 1.0 / 255.0);
  return f;
}

/// Round-to-nearest quantization with saturation.
inline ImageBuffer FromFloat(const cv::Mat& f) {
  cv::Mat u8;
  f.convertTo(u8, CV_8UC3, 255.0);
  return FromMat(u8);
}

}  // namespace autobench::detail
