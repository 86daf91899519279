// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "autobench/errors.hpp"
#include "autobench/evaluation.hpp"
#include "autobench/mock_generator.hpp"
#include "autobench/mock_models.hpp"
#include "support.hpp"

using namespace autobench;
using Catch::Matchers::ContainsSubstring;

namespace {

/// Dataset whose items only carry labels; images are tiny placeholders.
LabeledDataset Labels(std::vector<std::string> choices, const std::vector<int>& truths) {
  LabeledDataset ds;
  ds.question = "q";
  ds.choices = std::move(choices);
  for (int t : truths) ds.items.push_back({DatasetSample{ImageBuffer::Filled(4, 4, 0, 0, 0)}, t});
  return ds;
}

LabeledDataset Barcoded(int per_choice) {
  const Codebook book = testing::CorpusCodebook();
  LabeledDataset ds;
  ds.question = "What vehicle is shown in the image?";
  ds.choices = {"A car", "A truck"};
  for (int c = 0; c < 2; ++c) {
    for (int r = 0; r < per_choice; ++r) {
      ds.items.push_back({DatasetSample{MockGenerate(book, c == 0 ? "car" : "truck", "photo",
                                                     static_cast<std::uint64_t>(r))},
                          c});
    }
  }
  return ds;
}

class FailingModel : public ModelClient {
 public:
  explicit FailingModel(std::size_t fail_at, bool short_vector = false)
      : fail_at_(fail_at), short_(short_vector) {}
  const std::string& name() const override { return name_; }
  std::vector<double> Score(const ImageBuffer&, const std::string&,
                            const std::vector<std::string>& choices) override {
    std::lock_guard lock(mu_);
    if (calls_++ >= fail_at_) {
      if (short_) return std::vector<double>(choices.size() - 1, 0.0);
      throw TransportError("connection refused");
    }
    std::vector<double> s(choices.size(), -1.0);
    s[0] = 0.0;
    return s;
  }

 private:
  std::string name_ = "flaky";
  std::size_t fail_at_;
  bool short_;
  std::mutex mu_;
  std::size_t calls_ = 0;
};

}  // namespace

TEST_CASE("argmax breaks ties toward the lowest index") {
  const std::vector<double> s{-1.0, 0.0, 0.0};
  CHECK(RankAnswer(s).selected == 1);
  CHECK_FALSE(RankAnswer(s).abstained);
  const std::vector<double> u{-1.0, -2.0, 0.0};
  CHECK(RankAnswer(u).abstained);
  CHECK_THROWS_AS(RankAnswer(std::vector<double>{}), ProtocolError);
  CHECK_THROWS_AS(RankAnswer(std::vector<double>{0.0, NAN}), ProtocolError);
  CHECK_THROWS_AS(RankAnswer(std::vector<double>{0.0, INFINITY}), ProtocolError);
}

TEST_CASE("argmax is invariant under strictly increasing transforms") {
  std::mt19937_64 gen(2026);
  std::uniform_int_distribution<int> len(2, 8);
  std::uniform_real_distribution<double> val(-30.0, 0.0);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> s(static_cast<std::size_t>(len(gen)));
    for (auto& v : s) v = std::round(val(gen) * 4.0) / 4.0;  // coarse grid forces ties
    const double a = scale(gen);
    const double b = val(gen);
    const std::size_t base = RankAnswer(s).selected;
    std::vector<double> t = s;
    std::transform(s.begin(), s.end(), t.begin(), [&](double v) { return a * v + b; });
    REQUIRE(RankAnswer(t).selected == base);
    std::transform(s.begin(), s.end(), t.begin(), [](double v) { return std::exp(v / 10.0); });
    REQUIRE(RankAnswer(t).selected == base);
    std::transform(s.begin(), s.end(), t.begin(), [](double v) { return v * v * v; });
    REQUIRE(RankAnswer(t).selected == base);
  }
}

TEST_CASE("metrics on a hand-worked example") {
  const LabeledDataset ds = Labels({"x", "y"}, {0, 0, 1, 1});
  const std::vector<Prediction> preds{{0, 0, false}, {1, 2, true}, {2, 1, false}, {3, 0, false}};
  const ModelResult r = ComputeMetrics(preds, ds);
  CHECK(r.accuracy == 0.5);
  CHECK(r.abstention_rate == 0.25);
  REQUIRE(r.class_wise.size() == 2);
  CHECK(r.class_wise[0] == std::pair<std::string, double>{"x", 0.5});
  CHECK(r.class_wise[1] == std::pair<std::string, double>{"y", 0.5});
  CHECK_THROWS_AS(ComputeMetrics({}, ds), std::logic_error);
}

TEST_CASE("class-wise accuracy is equivariant under choice permutation") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(gen() % 4);
    std::vector<std::string> choices;
    for (int i = 0; i < k; ++i) choices.push_back("c" + std::to_string(i));
    std::vector<int> truths;
    std::vector<Prediction> preds;
    for (std::size_t i = 0; i < 40; ++i) {
      truths.push_back(static_cast<int>(gen() % k));
      const std::size_t sel = gen() % (k + 1);
      preds.push_back({i, sel, sel == static_cast<std::size_t>(k)});
    }
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    // Choice i moves to position perm[i].
    std::vector<std::string> pchoices(choices.size());
    for (int i = 0; i < k; ++i) pchoices[perm[i]] = choices[i];
    std::vector<int> ptruths;
    for (int t : truths) ptruths.push_back(perm[t]);
    std::vector<Prediction> ppreds = preds;
    for (auto& p : ppreds) {
      if (!p.abstained) p.selected = static_cast<std::size_t>(perm[p.selected]);
    }
    const ModelResult a = ComputeMetrics(preds, Labels(choices, truths));
    const ModelResult b = ComputeMetrics(ppreds, Labels(pchoices, ptruths));
    CHECK(a.accuracy == b.accuracy);
    CHECK(a.abstention_rate == b.abstention_rate);
    for (int i = 0; i < k; ++i) CHECK(a.class_wise[i].second == b.class_wise[perm[i]].second);
  }
}

TEST_CASE("presented choices append Unknown") {
  CHECK(PresentedChoices(Labels({"a", "b"}, {})) == std::vector<std::string>{"a", "b", "Unknown"});
}

TEST_CASE("oracle and random mocks behave as documented") {
  const LabeledDataset ds = Barcoded(5);
  OracleModel oracle("o", testing::CorpusCodebook());
  RandomModel random("r", 3);
  const auto choices = PresentedChoices(ds);
  for (const auto& item : ds.items) {
    const auto s = oracle.Score(item.sample.image, ds.question, choices);
    CHECK(RankAnswer(s).selected == static_cast<std::size_t>(item.truth_index));
    CHECK(random.Score(item.sample.image, ds.question, choices) ==
          random.Score(item.sample.image, ds.question, choices));
  }
  const auto blank = oracle.Score(ImageBuffer::Filled(512, 512, 255, 255, 255), ds.question, choices);
  CHECK(RankAnswer(blank).abstained);
}

TEST_CASE("biased tables prefer digest rows over choice rows") {
  const ImageBuffer img = testing::TexturedImage(1, 8);
  BiasedTable t;
  t.Set("q", "a", -1.0);
  t.Set("q", PixelDigest(img), "a", -3.0);
  CHECK(t.Lookup("q", PixelDigest(img), "a") == -3.0);
  CHECK(t.Lookup("q", "other", "a") == -1.0);
  CHECK(t.Lookup("q", "other", "b") == -10.0);
  const BiasedTable back = BiasedTable::FromJson(t.ToJson());
  CHECK(back.Lookup("q", PixelDigest(img), "a") == -3.0);
  CHECK_THROWS(BiasedTable::FromJson(Json::array({Json{{"question", "q"}}})));
}

TEST_CASE("mock routes resolve by name") {
  MockFixtures f;
  f.codebook = testing::CorpusCodebook();
  f.biased["t"] = std::make_shared<BiasedTable>();
  CHECK(MakeMockModel("oracle", "m", f) != nullptr);
  CHECK(MakeMockModel("random", "m", f) != nullptr);
  CHECK(MakeMockModel("random-12", "m", f) != nullptr);
  CHECK(MakeMockModel("biased-t", "m", f) != nullptr);
  CHECK(MakeMockModel("biased-missing", "m", f) == nullptr);
  CHECK(MakeMockModel("random-x", "m", f) == nullptr);
  CHECK(MakeMockModel("unavailable", "m", f) == nullptr);
  CHECK(MakeMockModel("oracle", "shown", f)->name() == "shown");
}

TEST_CASE("evaluate scores every model in order") {
  const LabeledDataset ds = Barcoded(10);
  OracleModel oracle("oracle", testing::CorpusCodebook());
  RandomModel random("random", 9);
  const ResultSet rs = Evaluate({&oracle, &random}, ds, EvalOptions{3});
  REQUIRE(rs.models.size() == 2);
  CHECK(rs.models[0].first == "oracle");
  CHECK(rs.models[0].second.accuracy == 1.0);
  CHECK(rs.models[0].second.abstention_rate == 0.0);
  CHECK_FALSE(rs.models[0].second.error.has_value());
  const ResultSet again = Evaluate({&oracle, &random}, ds, EvalOptions{1});
  CHECK(again == rs);
}

TEST_CASE("a failing model gets partial metrics and an error") {
  const LabeledDataset ds = Barcoded(5);
  OracleModel oracle("oracle", testing::CorpusCodebook());
  FailingModel flaky(4);
  const ResultSet rs = Evaluate({&flaky, &oracle}, ds, EvalOptions{1});
  const ModelResult* f = rs.Find("flaky");
  REQUIRE(f);
  REQUIRE(f->error.has_value());
  CHECK_THAT(*f->error, ContainsSubstring("endpoint failed at item 4"));
  CHECK_THAT(*f->error, ContainsSubstring("4 of 10 items scored"));
  CHECK(rs.Find("oracle")->accuracy == 1.0);

  FailingModel wrong(0, true);
  const ResultSet bad = Evaluate({&wrong}, ds, EvalOptions{2});
  REQUIRE(bad.models[0].second.error.has_value());
  CHECK_THAT(*bad.models[0].second.error, ContainsSubstring("expected 3 log-likelihoods, got 2"));
}
