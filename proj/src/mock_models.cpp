// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/mock_models.hpp"

#include <boost/random/uniform_real_distribution.hpp>

#include "autobench/errors.hpp"
#include "autobench/mock_generator.hpp"
#include "autobench/report.hpp"
#include "autobench/rng.hpp"

namespace autobench {
namespace {

bool IsUnknown(const std::string& choice) { return NormalizeName(choice) == "unknown"; }

}  // namespace

std::vector<double> OracleModel::Score(const ImageBuffer& image, const std::string&,
                                       const std::vector<std::string>& choices) {
  std::optional<std::string> cls;
  if (auto idx = DecodeBarcode(image)) cls = codebook_.NameOf(*idx);
  std::vector<double> out(choices.size(), -5.0);
  bool matched = false;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (IsUnknown(choices[i])) continue;
    if (cls && ContainsWords(choices[i], *cls)) {
      out[i] = 0.0;
      matched = true;
    }
  }
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (IsUnknown(choices[i])) out[i] = matched ? -10.0 : 0.0;
  }
  return out;
}

std::vector<double> RandomModel::Score(const ImageBuffer& image, const std::string& question,
                                       const std::vector<std::string>& choices) {
  Rng rng(DeriveStream(seed_, {HashString(PixelDigest(image) + "\n" + question)}));
  boost::random::uniform_real_distribution<double> dist(-10.0, 0.0);
  std::vector<double> out;
  out.reserve(choices.size());
  for (std::size_t i = 0; i < choices.size(); ++i) out.push_back(dist(rng));
  return out;
}

void BiasedTable::Set(const std::string& question, const std::string& choice, double score) {
  by_choice_[{question, choice}] = score;
}

void BiasedTable::Set(const std::string& question, const std::string& image_digest,
                      const std::string& choice, double score) {
  exact_[{question, image_digest, choice}] = score;
}

double BiasedTable::Lookup(const std::string& question, const std::string& image_digest,
                           const std::string& choice) const {
  if (auto it = exact_.find({question, image_digest, choice}); it != exact_.end()) {
    return it->second;
  }
  if (auto it = by_choice_.find({question, choice}); it != by_choice_.end()) return it->second;
  return -10.0;
}

BiasedTable BiasedTable::FromJson(const Json& j) {
  if (!j.is_array()) throw ConfigError("biased table: expected an array of rows");
  BiasedTable t;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    const std::string where = "biased table row " + std::to_string(i);
    if (!row.is_object() || !row.contains("question") || !row.contains("choice") ||
        !row.contains("log_likelihood") || !row["log_likelihood"].is_number()) {
      throw ConfigError(where + ": needs question, choice and log_likelihood");
    }
    const auto q = row["question"].get<std::string>();
    const auto c = row["choice"].get<std::string>();
    const double s = row["log_likelihood"].get<double>();
    if (row.contains("image_digest")) {
      t.Set(q, row["image_digest"].get<std::string>(), c, s);
    } else {
      t.Set(q, c, s);
    }
  }
  return t;
}

Json BiasedTable::ToJson() const {
  Json rows = Json::array();
  for (const auto& [k, v] : by_choice_) {
    rows.push_back(Json{{"question", k.first}, {"choice", k.second}, {"log_likelihood", v}});
  }
  for (const auto& [k, v] : exact_) {
    rows.push_back(Json{{"question", std::get<0>(k)},
                        {"choice", std::get<2>(k)},
                        {"log_likelihood", v},
                        {"image_digest", std::get<1>(k)}});
  }
  return rows;
}

std::vector<double> BiasedModel::Score(const ImageBuffer& image, const std::string& question,
                                       const std::vector<std::string>& choices) {
  const std::string digest = PixelDigest(image);
  std::vector<double> out;
  out.reserve(choices.size());
  for (const auto& c : choices) out.push_back(table_->Lookup(question, digest, c));
  return out;
}

std::unique_ptr<ModelClient> MakeMockModel(const std::string& route,
                                           const std::string& display_name,
                                           const MockFixtures& fixtures) {
  if (route == "oracle") return std::make_unique<OracleModel>(display_name, fixtures.codebook);
  if (route == "random") return std::make_unique<RandomModel>(display_name, fixtures.random_seed);
  if (route.rfind("random-", 0) == 0) {
    const std::string tail = route.substr(7);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) return nullptr;
    return std::make_unique<RandomModel>(display_name, std::stoull(tail));
  }
  if (route.rfind("biased-", 0) == 0) {
    auto it = fixtures.biased.find(route.substr(7));
    if (it == fixtures.biased.end()) return nullptr;
    return std::make_unique<BiasedModel>(display_name, it->second);
  }
  return nullptr;
}

}  // namespace autobench
