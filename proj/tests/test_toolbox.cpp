// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <set>

#include "autobench/errors.hpp"
#include "autobench/toolbox.hpp"
#include "support.hpp"

using namespace autobench;
using Catch::Matchers::ContainsSubstring;

namespace {
const ToolRegistry& R() { return ToolRegistry::Default(); }
}  // namespace

TEST_CASE("default registry holds 2 select and 18 transform tools") {
  CHECK(R().specs().size() == 20);
  CHECK(R().OfKind(ToolKind::kSelect).size() == 2);
  CHECK(R().OfKind(ToolKind::kTransform).size() == 18);
  const auto names = R().Names();
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == 20);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK_NOTHROW(R().ValidateDocs());
}

TEST_CASE("every transform tool is executable") {
  for (const ToolSpec* s : R().OfKind(ToolKind::kTransform)) {
    INFO(s->full_name());
    CHECK(static_cast<bool>(s->apply));
  }
}

TEST_CASE("docstrings carry the documented argument text") {
  auto doc = [](const char* name) { return Docstring(*R().Find(name)); };
  CHECK_THAT(doc("src.tools.transform.ApplyMixUp"),
             ContainsSubstring("The mixing coefficient. Defaults to 0.7."));
  CHECK_THAT(doc("src.tools.transform.AddGaussianNoise"),
             ContainsSubstring("The factor to multiply the variance of the sample."));
  CHECK_THAT(doc("src.tools.transform.AddJPEGCompression"),
             ContainsSubstring(
                 "Iteratively compress the sample until its peak signal-to-noise ratio reaches a target."));
  for (const auto& s : R().specs()) {
    const std::string d = Docstring(s);
    INFO(s.full_name());
    CHECK(d.rfind(s.summary, 0) == 0);
    CHECK_THAT(d, ContainsSubstring("Examples:\n--------"));
  }
}

TEST_CASE("an empty registry fails doc validation") {
  CHECK_THROWS_AS(ToolRegistry().ValidateDocs(), ValidationError);
  ToolSpec s;
  s.module_path = "x";
  s.name = "Y";
  CHECK_THROWS_AS(ToolRegistry({s}).ValidateDocs(), ValidationError);
}

TEST_CASE("compact calls parse positional and keyword arguments") {
  const ToolCall a = R().Parse(Json("src.tools.transform.RotateImage(90)"));
  CHECK(a.name == "RotateImage");
  CHECK(a.kwargs["angle"] == 90);

  const ToolCall b = R().Parse(Json("src.tools.transform.OverlayColor(color=(255, 0, 0), opacity=0.25)"));
  CHECK(b.kwargs["color"] == Json::array({255, 0, 0}));
  CHECK(b.kwargs["opacity"] == 0.25);

  const ToolCall c = R().Parse(Json("src.tools.select.TextToImageRetrieval('car')"));
  CHECK(c.kwargs["class_name"] == "car");
  CHECK(c.kwargs["image_type"] == "photo");
}

TEST_CASE("object form fills defaults in schema order") {
  const ToolCall call = R().Parse(testing::TransformCall("ApplyMixUp"));
  CHECK(call.kwargs == Json{{"alpha", 0.7}});
  const ToolCall shuffle = R().Parse(testing::TransformCall("CropRandomShuffleAndRecompose"));
  CHECK(shuffle.kwargs["grid_size"] == 2);
}

TEST_CASE("identity has no defaulted arguments and accepts none") {
  const ToolCall call = R().Parse(Json("src.tools.transform.Identity()"));
  CHECK(call.kwargs.empty());
  CHECK_THROWS_AS(R().Parse(Json("src.tools.transform.Identity(3)")), ValidationError);
}

TEST_CASE("parse errors are path-qualified") {
  auto message = [](const Json& raw, std::string_view path) {
    try {
      R().Parse(raw, path);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK_THAT(message(Json("src.tools.transform.Nope()"), "/answers/0"),
             ContainsSubstring("/answers/0: unknown tool"));
  CHECK_THAT(message(testing::TransformCall("RotateImage", Json{{"angle", "x"}}), "/t"),
             ContainsSubstring("/t/kwargs/angle"));
  CHECK_THAT(message(testing::TransformCall("RotateImage"), "/t"),
             ContainsSubstring("missing required argument"));
  CHECK_THAT(message(testing::TransformCall("FlipImage", Json{{"orientation", "diagonal"}}), "/t"),
             ContainsSubstring("/t/kwargs/orientation"));
  CHECK_THAT(message(testing::TransformCall("OverlayColor", Json{{"color", {1, 2, 3}}, {"opacity", 2.0}}), "/t"),
             ContainsSubstring("must be <= 1"));
  CHECK_THAT(message(testing::TransformCall("RotateImage", Json{{"angle", 1}, {"bogus", 2}}), "/t"),
             ContainsSubstring("/t/kwargs/bogus"));
  CHECK_THAT(message(Json(42), "/x"), ContainsSubstring("/x"));
  CHECK_THAT(message(Json("src.tools.transform.RotateImage(90, angle=90)"), "/x"),
             ContainsSubstring("given more than once"));
}

TEST_CASE("canonicalize enforces the expected kind") {
  const ToolCall select = R().Parse(testing::SelectCall("TextToImageRetrieval", "car"));
  CHECK_THROWS_AS(R().Canonicalize(select, ToolKind::kTransform), ValidationError);
  CHECK_NOTHROW(R().Canonicalize(select, ToolKind::kSelect));
}

TEST_CASE("canonical form round trips through JSON") {
  for (const char* text : {"src.tools.transform.RotateImage(45)", "src.tools.transform.AddJPEGCompression()",
                           "src.tools.transform.OverlayColor((1, 2, 3), 0.5)"}) {
    const ToolCall call = R().Parse(Json(text));
    CHECK(R().Parse(call.ToJson()) == call);
  }
}

TEST_CASE("call-argument lexer handles python literals") {
  const CallArguments args = ParseCallArguments("1, -2.5, 'a,b', [1, 2], None, True, key=\"v\"");
  REQUIRE(args.positional.size() == 6);
  CHECK(args.positional[0] == 1);
  CHECK(args.positional[1] == -2.5);
  CHECK(args.positional[2] == "a,b");
  CHECK(args.positional[3] == Json::array({1, 2}));
  CHECK(args.positional[4].is_null());
  CHECK(args.positional[5] == true);
  REQUIRE(args.keyword.size() == 1);
  CHECK(args.keyword[0].second == "v");
  CHECK_THROWS_AS(ParseCallArguments("1, ("), ValidationError);
}

TEST_CASE("apply refuses unstandardized input") {
  TransformContext ctx;
  const ToolCall call = R().Parse(Json("src.tools.transform.Identity()"));
  CHECK_THROWS_AS(R().Apply(call, testing::TexturedImage(1, 64), ctx), ToolError);
  const ToolCall select = R().Parse(testing::SelectCall("TextToImageRetrieval", "car"));
  CHECK_THROWS_AS(R().Apply(select, testing::TexturedImage(1), ctx), ToolError);
}
