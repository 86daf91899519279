// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

// Writes the bundled fixture corpus: barcoded mock images and manifest.json.
// Usage: autobench-make-corpus <out_dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "autobench/image.hpp"
#include "autobench/mock_generator.hpp"

using namespace autobench;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: autobench-make-corpus <out_dir>\n";
    return 1;
  }
  const std::filesystem::path out = argv[1];
  std::filesystem::create_directories(out / "images");

  struct Spec {
    const char* name;
    const char* group;
  };
  const Spec classes[] = {{"car", "vehicle"},    {"truck", "vehicle"}, {"bus", "vehicle"},
                          {"bicycle", "vehicle"}, {"dog", "animal"},    {"cat", "animal"},
                          {"bird", "animal"},    {"horse", "animal"},  {"apple", "fruit"},
                          {"banana", "fruit"}};
  std::vector<std::string> names;
  for (const auto& c : classes) names.emplace_back(c.name);
  const Codebook codebook(names);

  nlohmann::ordered_json manifest;
  manifest["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : classes) {
    nlohmann::ordered_json entry{{"name", c.name}, {"metaclasses", {c.group}}};
    entry["images"] = nlohmann::ordered_json::array();
    const std::pair<const char*, int> shots[] = {{"photo", 1}, {"photo", 2}, {"sketch", 1}};
    for (const auto& [type, n] : shots) {
      const std::string file = std::string("images/") + c.name + "_" + type + "_" + std::to_string(n) + ".png";
      const ImageBuffer img = MockGenerate(codebook, c.name, type, static_cast<std::uint64_t>(n));
      WritePng(Resize(img, 256, 256), out / file);
      entry["images"].push_back({{"path", file}, {"image_type", type}});
    }
    manifest["classes"].push_back(std::move(entry));
  }
  std::ofstream(out / "manifest.json") << manifest.dump(2) << "\n";
  return 0;
}
