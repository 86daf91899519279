// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "autobench/errors.hpp"
#include "autobench/report.hpp"
#include "support.hpp"

using namespace autobench;
using Catch::Matchers::ContainsSubstring;

namespace {

const std::vector<ModelDescriptor>& Lib() {
  static const auto lib = DefaultModelLibrary();
  return lib;
}

std::vector<std::string> TwoModels() { return {Lib()[0].name, Lib()[2].name}; }

ResultSet Results(const std::vector<std::string>& models, double acc = 0.5) {
  ResultSet rs;
  for (const auto& m : models) {
    rs.models.push_back({m, ModelResult{acc, {{"A car", acc}, {"A truck", acc}}, 0.0, std::nullopt}});
  }
  return rs;
}

ReportEntry MakeEntry(const std::vector<std::string>& models) {
  return ReportEntry{Experiment::FromJson(testing::ExperimentPayload(), ToolRegistry::Default()),
                     Results(models), Findings{"f", "None"}};
}

std::string ErrorOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("blank queries are rejected") {
  CHECK_THROWS_AS(Query("   \n"), ValidationError);
  CHECK(Query(" ok ").text == " ok ");
}

TEST_CASE("default model library is valid and has three models") {
  CHECK(Lib().size() == 3);
  CHECK_NOTHROW(ValidateModelLibrary(Lib()));
  auto dup = Lib();
  dup.push_back(dup[0]);
  CHECK_THROWS_AS(ValidateModelLibrary(dup), ConfigError);
  auto bad = Lib();
  bad[0].endpoint = "not a url";
  CHECK_THROWS_AS(ValidateModelLibrary(bad), ConfigError);
}

TEST_CASE("NewReport validates the model selection") {
  const Query q("q");
  CHECK_THROWS_AS(NewReport(q, {}, Lib()), ConfigError);
  CHECK_THROWS_AS(NewReport(q, {"nope"}, Lib()), ConfigError);
  CHECK_THROWS_AS(NewReport(q, {Lib()[0].name, Lib()[0].name}, Lib()), ConfigError);
  const Report r = NewReport(q, TwoModels(), Lib());
  CHECK(r.entries().empty());
  CHECK_FALSE(r.concluded());
}

TEST_CASE("report lifecycle enforces ordering") {
  Report r = NewReport(Query("q"), TwoModels(), Lib());
  CHECK_THROWS_AS(RecordSufficiency(r, true), LifecycleError);
  CHECK_THROWS_AS(Conclude(r, "c"), LifecycleError);
  r = AppendEntry(r, MakeEntry(TwoModels()));
  CHECK_THROWS_AS(Conclude(r, "c"), LifecycleError);
  r = RecordSufficiency(r, false);
  CHECK_THROWS_AS(RecordSufficiency(r, true), LifecycleError);
  CHECK_THROWS_AS(Conclude(r, "c"), LifecycleError);
  r = AppendEntry(r, MakeEntry(TwoModels()));
  r = RecordSufficiency(r, true);
  CHECK_THROWS_AS(Conclude(r, "   "), ValidationError);
  const Report done = Conclude(r, "c");
  CHECK(done.concluded());
  CHECK_THROWS_AS(AppendEntry(done, MakeEntry(TwoModels())), LifecycleError);
  CHECK_THROWS_AS(RecordSufficiency(done, true), LifecycleError);
  // The original value is untouched.
  CHECK_FALSE(r.concluded());
}

TEST_CASE("reaching the cap allows conclusion and blocks appends") {
  Report r = NewReport(Query("q"), TwoModels(), Lib());
  for (std::size_t i = 0; i < kMaxExperiments; ++i) {
    r = RecordSufficiency(AppendEntry(r, MakeEntry(TwoModels())), false);
  }
  CHECK_THROWS_AS(AppendEntry(r, MakeEntry(TwoModels())), LifecycleError);
  CHECK_NOTHROW(Conclude(r, "c"));
  Report small = NewReport(Query("q"), TwoModels(), Lib());
  small = RecordSufficiency(AppendEntry(small, MakeEntry(TwoModels())), false);
  CHECK_NOTHROW(Conclude(small, "c", 1));
}

TEST_CASE("entries must cover exactly the selected models") {
  const Report r = NewReport(Query("q"), TwoModels(), Lib());
  CHECK_THROWS_AS(AppendEntry(r, MakeEntry({Lib()[0].name})), ValidationError);
  CHECK_THROWS_AS(AppendEntry(r, MakeEntry({Lib()[0].name, Lib()[1].name})), ValidationError);
}

TEST_CASE("experiment validation reports JSON paths") {
  const auto& reg = ToolRegistry::Default();
  Json one = testing::ExperimentPayload();
  one["answers"].erase(1);
  CHECK_THAT(ErrorOf([&] { Experiment::FromJson(one, reg); }), ContainsSubstring("/answers"));

  Json dup = testing::ExperimentPayload();
  dup["answers"][1]["text"] = "a CAR";
  CHECK_THAT(ErrorOf([&] { Experiment::FromJson(dup, reg); }), ContainsSubstring("/answers/1/text"));

  Json unknown = testing::ExperimentPayload();
  unknown["answers"][0]["text"] = "unknown";
  CHECK_THAT(ErrorOf([&] { Experiment::FromJson(unknown, reg); }), ContainsSubstring("/answers/0/text"));

  Json swapped = testing::ExperimentPayload();
  swapped["answers"][0]["image_select_function"] = testing::TransformCall("Identity");
  CHECK_THAT(ErrorOf([&] { Experiment::FromJson(swapped, reg); }),
             ContainsSubstring("/answers/0/image_select_function"));

  Json empty = testing::ExperimentPayload();
  empty["answers"][1]["image_transform_functions"] = Json::array();
  CHECK_THAT(ErrorOf([&] { Experiment::FromJson(empty, reg); }),
             ContainsSubstring("/answers/1/image_transform_functions"));

  Json no_q = testing::ExperimentPayload();
  no_q.erase("question");
  CHECK_THAT(ErrorOf([&] { Experiment::FromJson(no_q, reg); }), ContainsSubstring("/question"));
}

TEST_CASE("single transform object form is accepted") {
  Json j = testing::ExperimentPayload();
  for (auto& a : j["answers"]) {
    a["image_transform_function"] = a["image_transform_functions"][0];
    a.erase("image_transform_functions");
  }
  const Experiment e = Experiment::FromJson(j, ToolRegistry::Default());
  CHECK(e.answers[0].transforms.size() == 1);
  CHECK(e.choices() == std::vector<std::string>{"A car", "A truck"});
}

TEST_CASE("findings default open questions to None") {
  CHECK(Findings::FromJson(Json{{"findings", "x"}}).open_questions == "None");
  CHECK(Findings::FromJson(Json{{"findings", "x"}, {"open_questions", " "}}).open_questions == "None");
  CHECK_THROWS_AS(Findings::FromJson(Json{{"open_questions", "x"}}), ValidationError);
}

TEST_CASE("result fractions must lie in [0, 1]") {
  Json j = Results({"m"}).ToJson();
  j["m"]["accuracy"] = 1.5;
  CHECK_THAT(ErrorOf([&] { ResultSet::FromJson(j); }), ContainsSubstring("/m/accuracy"));
}

TEST_CASE("serialization round trips and is canonical") {
  Report r = NewReport(Query("Can models see?"), TwoModels(), Lib());
  r = RecordSufficiency(AppendEntry(r, MakeEntry(TwoModels())), true);
  r = Conclude(r, "They can.");
  const std::string bytes = SerializeReport(r);
  CHECK(bytes.back() == '\n');
  const Report back = ParseReport(bytes);
  CHECK(SerializeReport(back) == bytes);
  CHECK(StructurallyEqual(back, r));
  const Json j = Json::parse(bytes);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema_version", "query", "models_to_evaluate", "entries",
                                         "sufficiency_history", "conclusions"});
}

TEST_CASE("golden session report parses and re-serializes byte for byte") {
  const std::string bytes = testing::Slurp(FixtureDir() / "golden" / "session1_report.json");
  CHECK(SerializeReport(ParseReport(bytes)) == bytes);
}

TEST_CASE("parse errors name the offending field") {
  CHECK_THAT(ErrorOf([] { ParseReport("{\"schema_version\": 1}"); }), ContainsSubstring("/query"));
  CHECK_THAT(ErrorOf([] { ParseReport("{\"schema_version\": 9, \"query\": \"q\"}"); }),
             ContainsSubstring("/schema_version"));
  CHECK_THROWS_AS(ParseReport("not json"), ValidationError);
}

TEST_CASE("structural equality ignores whitespace in prose only") {
  Report a = NewReport(Query("one  two"), TwoModels(), Lib());
  Report b = NewReport(Query("one two\n"), TwoModels(), Lib());
  CHECK(StructurallyEqual(a, b));
  Report c = NewReport(Query("one three"), TwoModels(), Lib());
  CHECK_FALSE(StructurallyEqual(a, c));
  CHECK(CollapseWhitespace("  a \t b\n\nc ") == "a b c");
}
