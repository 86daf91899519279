// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "autobench/toolbox.hpp"

namespace autobench::transforms {

#define AUTOBENCH_DECLARE_TRANSFORM(Name) \
  ImageBuffer Apply##Name(const ToolCall& call, const ImageBuffer& image, TransformContext& ctx)

AUTOBENCH_DECLARE_TRANSFORM(AddGaussianNoise);
AUTOBENCH_DECLARE_TRANSFORM(AddJPEGCompression);
AUTOBENCH_DECLARE_TRANSFORM(ApplyCutMix);
AUTOBENCH_DECLARE_TRANSFORM(ApplyMixUp);
AUTOBENCH_DECLARE_TRANSFORM(ChangeBrightness);
AUTOBENCH_DECLARE_TRANSFORM(ChangeContrast);
AUTOBENCH_DECLARE_TRANSFORM(CropRandomShuffleAndRecompose);
AUTOBENCH_DECLARE_TRANSFORM(DefocusBlurImage);
AUTOBENCH_DECLARE_TRANSFORM(EditImageStyle);
AUTOBENCH_DECLARE_TRANSFORM(EditImageWeather);
AUTOBENCH_DECLARE_TRANSFORM(FlipImage);
AUTOBENCH_DECLARE_TRANSFORM(Identity);
AUTOBENCH_DECLARE_TRANSFORM(OverlayColor);
AUTOBENCH_DECLARE_TRANSFORM(PasteGeneratedObjectAtRandomPosition);
AUTOBENCH_DECLARE_TRANSFORM(PasteGeometricShapeAtRandomPosition);
AUTOBENCH_DECLARE_TRANSFORM(PasteTextAtRandomPosition);
AUTOBENCH_DECLARE_TRANSFORM(RotateImage);
AUTOBENCH_DECLARE_TRANSFORM(ZoomAtRandomPosition);

#undef AUTOBENCH_DECLARE_TRANSFORM

}  // namespace autobench::transforms
