// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

// Shipped tool catalogue. Docstring text is reproduced character for
// character because it is injected into the orchestrator's system prompt.

#include "autobench/toolbox.hpp"
#include "transform_impl.hpp"

namespace autobench {
namespace {

ArgSpec Arg(std::string name, ArgType type, std::string doc,
            std::optional<Json> default_value = std::nullopt,
            std::optional<double> min = std::nullopt,
            std::optional<double> max = std::nullopt) {
  ArgSpec a;
  a.name = std::move(name);
  a.type = type;
  a.doc = std::move(doc);
  a.default_value = std::move(default_value);
  a.min = min;
  a.max = max;
  return a;
}

ArgSpec EnumArg(std::string name, std::vector<std::string> choices, std::string doc) {
  ArgSpec a = Arg(std::move(name), ArgType::kEnum, std::move(doc));
  a.choices = std::move(choices);
  return a;
}

ToolSpec Select(std::string name, std::string summary, std::string description,
                std::string examples) {
  ToolSpec s;
  s.module_path = std::string(kSelectModule);
  s.name = std::move(name);
  s.kind = ToolKind::kSelect;
  s.summary = std::move(summary);
  s.description = std::move(description);
  s.args = {
      Arg("class_name", ArgType::kString,
          R"doc(class_name (str | "random"): The class name of the object to generate. If "random", the
class name is randomly selected from the dataset.)doc"),
      Arg("image_type", ArgType::kString,
          R"doc(image_type (str): The type of image. Default to "photo".)doc", Json("photo")),
  };
  s.examples = std::move(examples);
  return s;
}

ToolSpec Transform(std::string name, std::string summary, std::vector<ArgSpec> args,
                   std::string examples, TransformFn apply) {
  ToolSpec s;
  s.module_path = std::string(kTransformModule);
  s.name = std::move(name);
  s.kind = ToolKind::kTransform;
  s.summary = std::move(summary);
  s.args = std::move(args);
  s.examples = std::move(examples);
  s.apply = std::move(apply);
  return s;
}

}  // namespace

std::vector<ToolSpec> BuiltinToolSpecs() {
  using namespace transforms;
  std::vector<ToolSpec> specs;

  specs.push_back(Select("TextToImageGeneration", "Generate an image with a class and image type.", "",
                         R"doc(Generate an oil painting of a dog:
>>> generate_dog = TextToImageGeneration("dog", "oil painting")
>>> dataset = ...
>>> sample_generation = generate_dog(sample)

Generate a pencil sketch of a labrador:
>>> generate_dog = TextToImageGeneration("labrador", "pencil sketch")
>>> dataset = ...
>>> sample_generation = generate_dog(sample))doc"));

  specs.push_back(Select("TextToImageRetrieval",
                         "Retrieve an image from a dataset with a class and an image type.",
                         R"doc(If the class name or the image type are not defined for the dataset, retrieval is replaced
by generation.)doc",
                         R"doc(Retrieve an image of a random class name:
>>> retrieve_random = TextToImageRetrieval("random")
>>> dataset = ...
>>> sample_selection = retrieve_random(dataset)

Retrieve an image of a siamese cat:
>>> retrieve_cat = TextToImageRetrieval("siamese cat")
>>> dataset = ...
>>> sample_selection = retrieve_cat(dataset))doc"));

  specs.push_back(Transform(
      "AddGaussianNoise", "Add Gaussian noise to the input sample.",
      {Arg("variance_factor", ArgType::kFloat,
           R"doc(variance_factor (float): The factor to multiply the variance of the sample.
Defaults to 1.4.)doc",
           Json(1.4), 1.0)},
      R"doc(Add Gaussian noise to the sample:
>>> noise = AddGaussianNoise()
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_noise = noise(sample))doc",
      ApplyAddGaussianNoise));

  specs.push_back(Transform(
      "AddJPEGCompression",
      "Iteratively compress the sample until its peak signal-to-noise ratio reaches a target.",
      {Arg("target_psnr", ArgType::kFloat,
           R"doc(target_psnr (float): The target PSNR. Defaults to 26.0.)doc", Json(26.0), 1.0,
           100.0)},
      R"doc(Apply JPEG compression to the sample:
>>> jpeg = AddJPEGCompression()
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_jpeg = jpeg(sample))doc",
      ApplyAddJPEGCompression));

  specs.push_back(Transform(
      "ApplyCutMix", "Paste on the input sample a random region of another sample.",
      {Arg("alpha", ArgType::kFloat,
           R"doc(alpha (float): Beta distribution parameter. Defaults to 1.0.)doc", Json(1.0),
           1e-3)},
      R"doc(Paste a random region of another sample on the sample:
>>> cutmix = ApplyCutMix()
>>> sample = {"_parent": src.data.ImageDataset(), "images_tensor": torch.rand(3, 256, 256)}
>>> sample_cutmix = cutmix(sample))doc",
      ApplyApplyCutMix));

  specs.push_back(Transform(
      "ApplyMixUp", "Mix the input sample with another sample randomly chosen from the dataset.",
      {Arg("alpha", ArgType::kFloat,
           R"doc(alpha (float): The mixing coefficient. Defaults to 0.7.)doc", Json(0.7), 0.0,
           1.0)},
      R"doc(Mix the sample with another sample:
>>> mixup = ApplyMixUp()
>>> sample = {"_parent": src.data.ImageDataset(), "images_tensor": torch.rand(3, 256, 256)}
>>> sample_mixup = mixup(sample))doc",
      ApplyApplyMixUp));

  specs.push_back(Transform(
      "ChangeBrightness", "Adjust the brightness of the input sample.",
      {Arg("brightness_factor", ArgType::kFloat,
           R"doc(brightness_factor (float): How much to adjust the brightness. Can be any non-negative
number. 0 gives a black image, 1 gives the original image while 2 increases the
brightness by a factor of 2.)doc",
           std::nullopt, 0.0)},
      R"doc(Increase the brightness of the sample:
>>> bright = ChangeBrightness(1.5)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_bright = bright(sample)

Decrease the brightness of the sample:
>>> bright = ChangeBrightness(0.5)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_bright = bright(sample))doc",
      ApplyChangeBrightness));

  specs.push_back(Transform(
      "ChangeContrast", "Adjust the contrast of the input sample.",
      {Arg("contrast_factor", ArgType::kFloat,
           R"doc(contrast_factor (float): How much to adjust the contrast. Can be any non-negative number.
0 gives a solid gray image, 1 gives the original image while 2 increases the contrast
by a factor of 2.)doc",
           std::nullopt, 0.0)},
      R"doc(Increase the contrast of the sample:
>>> contrast = ChangeContrast(1.5)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_contrast = contrast(sample)

Decrease the contrast of the sample:
>>> contrast = ChangeContrast(0.5)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_contrast = contrast(sample))doc",
      ApplyChangeContrast));

  specs.push_back(Transform(
      "CropRandomShuffleAndRecompose",
      "Crop the sample into a grid of patches and randomly shuffle them spatially.",
      {Arg("grid_size", ArgType::kInt,
           R"doc(grid_size (int): The size of the grid. Defaults to 2.)doc", Json(2), 1.0, 8.0)},
      R"doc(Crop the sample into a 3x3 grid and reshuffle the patches:
>>> patch = CropRandomShuffleAndRecompose(3)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> img_patch = patch(img))doc",
      ApplyCropRandomShuffleAndRecompose));

  specs.push_back(Transform(
      "DefocusBlurImage", "Blur the input sample using a Gaussian filter.",
      {Arg("blur_factor", ArgType::kFloat,
           R"doc(blur_factor (float): Estimate the target blur level as the initial sharpness level divided
by the blur factor. Defaults to 10.0.)doc",
           Json(10.0), 1.0)},
      R"doc(Apply gaussian blur to the sample:
>>> blur = DefocusBlurImage()
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_blur = blur(sample))doc",
      ApplyDefocusBlurImage));

  specs.push_back(Transform(
      "EditImageStyle", "Regenerate an image with the input sample label and a specific style.",
      {Arg("style", ArgType::kString,
           R"doc(style (str): The visual style to apply to the sample.)doc")},
      R"doc(Generate an image given a label name in the style of a sculpture:
>>> style = EditImageStyle("sculpture")
>>> sample = {"labels_class_name": "cat"}
>>> sample_style = style(sample)

Generate an image given a label name in the style of a tattoo:
>>> style = EditImageStyle("tattoo")
>>> sample = {"labels_class_name": "dog"}
>>> sample_style = style(sample))doc",
      ApplyEditImageStyle));

  specs.push_back(Transform(
      "EditImageWeather",
      "Regenerate an image with the input sample label and a specific weather.",
      {Arg("weather", ArgType::kString,
           R"doc(weather (str): The weather to apply to the sample.)doc")},
      R"doc(Generate an image given a label name in a rainy weather:
>>> weather = EditImageWeather("rainy")
>>> sample = {"labels_class_name": "cat"}
>>> sample_weather = weather(sample)

Generate an image given a label name in a snowy weather:
>>> weather = EditImageWeather("snowy")
>>> sample = {"labels_class_name": "dog"}
>>> sample_weather = weather(sample))doc",
      ApplyEditImageWeather));

  specs.push_back(Transform(
      "FlipImage", "Flip the input sample.",
      {EnumArg("orientation", {"horizontal", "vertical"},
               R"doc(orientation ("horizontal" | "vertical"): The orientation of the flip.)doc")},
      R"doc(Flip the sample horizontally:
>>> flip = FlipImage("horizontal")
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_flip = flip(sample)

Flip the sample vertically:
>>> flip = FlipImage("vertical")
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_flip = flip(sample))doc",
      ApplyFlipImage));

  specs.push_back(Transform(
      "Identity", "Do not apply any transform and return the input sample.", {},
      R"doc(Apply the identity transformation to the sample:
>>> identity = Identity()
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_identity = identity(sample))doc",
      ApplyIdentity));

  specs.push_back(Transform(
      "OverlayColor", "Overlay a color on the input sample.",
      {Arg("color", ArgType::kColor,
           R"doc(color (tuple[int, int, int]): The RGB color to apply to the sample.)doc"),
       Arg("opacity", ArgType::kFloat,
           R"doc(opacity (float): The opacity of the color, between 0 and 1.)doc", Json(1.0), 0.0,
           1.0)},
      R"doc(Add a red color with 50
>>> color = OverlayColor((255, 0, 0), 0.5)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_color = color(sample)

Add a blue color with 100
>>> color = OverlayColor((0, 0, 255))
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_color = color(sample))doc",
      ApplyOverlayColor));

  specs.push_back(Transform(
      "PasteGeneratedObjectAtRandomPosition",
      "Paste a generated object on a random region of the input sample.",
      {Arg("class_name", ArgType::kStringOrNone,
           R"doc(class_name (str | None): The name of the object to paste on the sample.)doc"),
       Arg("size", ArgType::kInt, R"doc(size (int): The size of the object.)doc", std::nullopt,
           1.0, kCanvasSize),
       Arg("repeat", ArgType::kInt, R"doc(repeat (int): The number of objects to paste.)doc",
           std::nullopt, 1.0, 64.0)},
      R"doc(Paste one cat object on the sample:
>>> paste_object = PasteGeneratedObjectAtRandomPosition("cat", 256, 1)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_paste_object = paste_object(sample)

Paste two dogs on the sample:
>>> paste_object = PasteGeneratedObjectAtRandomPosition("dog", 256, 2)
>>> sample = {"_parent": src.data.ImageDataset(), "images_tensor": torch.rand(3, 256, 256)}
>>> sample_paste_object = paste_object(sample))doc",
      ApplyPasteGeneratedObjectAtRandomPosition));

  specs.push_back(Transform(
      "PasteGeometricShapeAtRandomPosition", "Paste a shape on a random region of the input sample.",
      {EnumArg("shape", {"circle", "square", "triangle"},
               R"doc(shape ("circle", "square", "triangle"): The shape to paste on the sample.)doc"),
       Arg("size", ArgType::kInt, R"doc(size (int): The size of the object.)doc", std::nullopt,
           1.0, kCanvasSize),
       Arg("color", ArgType::kColor,
           R"doc(color (tuple[int, int, int]): The RGB color of the object.)doc"),
       Arg("fill", ArgType::kBool, R"doc(fill (bool): Whether to fill the object.)doc"),
       Arg("repeat", ArgType::kInt, R"doc(repeat (int): The number of shapes to paste.)doc",
           std::nullopt, 1.0, 64.0)},
      R"doc(Paste a green circle on the sample:
>>> paste_shape = PasteGeometricShapeAtRandomPosition("circle", 48, (0, 255, 0), False, 1)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_paste_shape = paste_shape(sample)

Paste three red square on the sample:
>>> paste_shape = PasteGeometricShapeAtRandomPosition("square", 48, (255, 0, 0), False, 3)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_paste_shape = paste_shape(sample))doc",
      ApplyPasteGeometricShapeAtRandomPosition));

  specs.push_back(Transform(
      "PasteTextAtRandomPosition", "Paste text on a random region of the input sample.",
      {Arg("text", ArgType::kString, R"doc(text (str): The text to paste on the sample.)doc"),
       Arg("font_size", ArgType::kInt, R"doc(font_size (int): The font size of the text.)doc",
           std::nullopt, 1.0, kCanvasSize),
       Arg("font_color", ArgType::kColor,
           R"doc(font_color (tuple[int, int, int]): The RGB color of the text.)doc"),
       Arg("repeat", ArgType::kInt, R"doc(repeat (int): The number of text to paste.)doc",
           std::nullopt, 1.0, 64.0)},
      R"doc(Paste a blue "Hello, world!" text once on the sample:
>>> paste_text = PasteTextAtRandomPosition("Hello, world!", 48, (0, 0, 255), 1)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_paste_text = paste_text(sample))doc",
      ApplyPasteTextAtRandomPosition));

  specs.push_back(Transform(
      "RotateImage", "Rotate the input sample.",
      {Arg("angle", ArgType::kInt, R"doc(angle (int): The angle of rotation.)doc")},
      R"doc(Rotate the sample to the right:
>>> rotate = RotateImage(90)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_rotate = rotate(sample)

Rotate the sample to the left:
>>> rotate = RotateImage(-90)
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_rotate = rotate(sample))doc",
      ApplyRotateImage));

  specs.push_back(Transform(
      "ZoomAtRandomPosition", "Zoom on a random region of the input sample.",
      {Arg("zoom_factor", ArgType::kFloat,
           R"doc(zoom_factor (float): The zoom factor. Defaults to 2.0.)doc", Json(2.0), 1.0,
           kCanvasSize)},
      R"doc(Zoom on a random region of the sample:
>>> zoom = ZoomAtRandomPosition()
>>> sample = {"images_tensor": torch.rand(3, 256, 256)}
>>> sample_zoom = zoom(sample))doc",
      ApplyZoomAtRandomPosition));

  return specs;
}

}  // namespace autobench
