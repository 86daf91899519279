// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "autobench/generation.hpp"
#include "autobench/image.hpp"
#include "autobench/rng.hpp"

namespace autobench {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSelectModule = "src.tools.select";
inline constexpr std::string_view kTransformModule = "src.tools.transform";

/// A dotted-path tool invocation. kwargs are kept in the tool's declared
/// argument order once canonicalized.
struct ToolCall {
  std::string module_path;
  std::string name;
  Json kwargs = Json::object();

  std::string full_name() const { return module_path + "." + name; }
  Json ToJson() const;
  bool operator==(const ToolCall&) const = default;
};

enum class ToolKind { kSelect, kTransform };

enum class ArgType {
  kFloat,
  kInt,
  kString,
  kBool,
  kColor,          // [r, g, b] with 0..255 integer components
  kEnum,           // one of ArgSpec::choices
  kStringOrNone,   // string or null
};

struct ArgSpec {
  std::string name;
  ArgType type = ArgType::kString;
  std::optional<Json> default_value;  // absent means required
  std::vector<std::string> choices;   // kEnum only
  std::optional<double> min;
  std::optional<double> max;
  /// Verbatim docstring text for this argument; may span several lines.
  std::string doc;
};

struct TransformContext;

using TransformFn =
    std::function<ImageBuffer(const ToolCall&, const ImageBuffer&, TransformContext&)>;

/// Registry entry: identity, docstring parts and argument schema.
struct ToolSpec {
  std::string module_path;
  std::string name;
  ToolKind kind = ToolKind::kTransform;
  std::string summary;
  std::string description;  // optional extended paragraph
  std::vector<ArgSpec> args;
  std::string examples;     // verbatim "Examples:" body
  TransformFn apply;        // transforms only

  std::string full_name() const { return module_path + "." + name; }
};

/// Renders the docstring block: summary, optional description, Args and
/// Examples sections.
std::string Docstring(const ToolSpec& spec);

/// Everything a transform may touch besides its input image.
struct TransformContext {
  Rng rng;
  ImageGenerator* generator = nullptr;
  /// Draws another dataset sample (standardized) for CutMix / MixUp.
  std::function<ImageBuffer(Rng&)> companion_sampler;
  std::optional<std::string> sample_label;
};

class ToolRegistry {
 public:
  ToolRegistry() = default;
  explicit ToolRegistry(std::vector<ToolSpec> specs);

  /// The 2 select and 18 transform tools.
  static const ToolRegistry& Default();

  void Add(ToolSpec spec);
  const ToolSpec* Find(std::string_view full_name) const;
  const std::vector<ToolSpec>& specs() const noexcept { return specs_; }
  std::vector<const ToolSpec*> OfKind(ToolKind kind) const;
  std::vector<std::string> Names() const;
  bool empty() const noexcept { return specs_.empty(); }

  /// Throws ValidationError when a tool has an empty summary.
  void ValidateDocs() const;

  /// Accepts the object form {module_path, name, kwargs} or a compact call
  /// string "src.tools.transform.Name(arg, key=value)". Returns the call
  /// with defaults filled and kwargs in schema order. `path` prefixes error
  /// messages.
  ToolCall Parse(const Json& raw, std::string_view path = "") const;
  ToolCall ParseCompact(std::string_view text, std::string_view path = "") const;

  /// Validates kind and arguments of an already structured call.
  ToolCall Canonicalize(const ToolCall& call, std::optional<ToolKind> expected,
                        std::string_view path = "") const;

  ImageBuffer Apply(const ToolCall& call, const ImageBuffer& image,
                    TransformContext& ctx) const;

 private:
  std::vector<ToolSpec> specs_;
};

/// Parses a python-style literal list "1, 'a', [2, 3], key=True" into
/// positional and keyword values.
struct CallArguments {
  std::vector<Json> positional;
  std::vector<std::pair<std::string, Json>> keyword;
};
CallArguments ParseCallArguments(std::string_view text);

/// Builds the shipped tool specs (used by ToolRegistry::Default()).
std::vector<ToolSpec> BuiltinToolSpecs();

// Numeric building blocks exposed for tests and diagnostics.
namespace transforms {

double Psnr(const ImageBuffer& a, const ImageBuffer& b);

struct JpegResult {
  ImageBuffer image;
  int quality = 0;
  double psnr = 0.0;
};
/// 95, 90, ..., 5, 1.
std::vector<int> JpegQualityLadder();
JpegResult CompressToTargetPsnr(const ImageBuffer& image, double target_psnr);

/// Variance of the 4-neighbour Laplacian of Rec. 601 luma (in [0,1]) over
/// interior pixels.
double LaplacianSharpness(const ImageBuffer& image);
ImageBuffer GaussianBlur(const ImageBuffer& image, double sigma);

struct BlurResult {
  ImageBuffer image;
  double sigma = 0.0;
  double sharpness = 0.0;
  double initial_sharpness = 0.0;
};
/// 0.5, 0.625, ... (x1.25) while <= 32, then 32.
std::vector<double> BlurSigmaSchedule();
BlurResult DefocusToTarget(const ImageBuffer& image, double blur_factor);

ImageBuffer Flip(const ImageBuffer& image, bool horizontal);
ImageBuffer Rotate(const ImageBuffer& image, double angle_degrees_clockwise);

/// Returns the permutation used: output tile i holds input tile perm[i].
ImageBuffer ShuffleTiles(const ImageBuffer& image, int grid_size, Rng& rng,
                         std::vector<int>* perm_out = nullptr);

}  // namespace transforms

}  // namespace autobench
