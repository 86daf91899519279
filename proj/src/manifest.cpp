// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "autobench/errors.hpp"

namespace autobench {

std::string NormalizeName(std::string_view name) {
  std::string out;
  bool space = false;
  for (unsigned char c : name) {
    if (std::isspace(c)) {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

bool ContainsWords(std::string_view haystack, std::string_view needle) {
  const std::string h = NormalizeName(haystack);
  const std::string n = NormalizeName(needle);
  if (n.empty()) return false;
  auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };
  for (std::size_t pos = h.find(n); pos != std::string::npos; pos = h.find(n, pos + 1)) {
    const bool left = pos == 0 || !is_word(h[pos - 1]);
    const std::size_t end = pos + n.size();
    const bool right = end == h.size() || !is_word(h[end]);
    if (left && right) return true;
  }
  return false;
}

DatasetManifest DatasetManifest::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read manifest " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return FromJsonText(ss.str(), path.parent_path());
}

DatasetManifest DatasetManifest::FromJsonText(std::string_view text,
                                              const std::filesystem::path& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array()) {
    throw ConfigError("manifest: expected object with a \"classes\" array");
  }

  DatasetManifest m;
  std::set<std::string> seen;
  std::map<std::string, std::vector<std::string>> tags_to_members;
  for (std::size_t i = 0; i < j["classes"].size(); ++i) {
    const auto& c = j["classes"][i];
    const std::string where = "manifest /classes/" + std::to_string(i);
    if (!c.is_object() || !c.contains("name") || !c["name"].is_string()) {
      throw ConfigError(where + ": missing class name");
    }
    ClassEntry entry;
    entry.name = NormalizeName(c["name"].get<std::string>());
    if (entry.name.empty()) throw ConfigError(where + ": empty class name");
    if (!seen.insert(entry.name).second) {
      throw ConfigError(where + ": duplicate class name \"" + entry.name + "\"");
    }
    if (auto it = c.find("metaclasses"); it != c.end()) {
      for (const auto& tag : *it) {
        entry.metaclasses.push_back(NormalizeName(tag.get<std::string>()));
        tags_to_members[entry.metaclasses.back()].push_back(entry.name);
      }
    }
    std::size_t listed = 0;
    if (auto it = c.find("images"); it != c.end()) {
      for (const auto& rec : *it) {
        ++listed;
        ImageRecord r;
        const std::filesystem::path p = rec.at("path").get<std::string>();
        r.path = p.is_absolute() ? p : base_dir / p;
        if (rec.contains("image_type")) r.image_type = NormalizeName(rec["image_type"].get<std::string>());
        std::error_code ec;
        if (!std::filesystem::is_regular_file(r.path, ec)) {
          m.warnings_.push_back(where + ": unreadable image " + r.path.string());
          continue;
        }
        entry.images.push_back(std::move(r));
      }
    }
    if (listed > 0 && entry.images.empty()) {
      m.warnings_.push_back(where + ": class \"" + entry.name + "\" dropped, no readable images");
      continue;
    }
    m.classes_.push_back(std::move(entry));
  }

  // Explicit metaclass table wins; otherwise groups come from per-class tags.
  if (auto it = j.find("metaclasses"); it != j.end() && it->is_object()) {
    for (auto g = it->begin(); g != it->end(); ++g) {
      std::vector<std::string> members;
      for (const auto& name : g.value()) {
        const std::string n = NormalizeName(name.get<std::string>());
        if (!seen.count(n)) {
          throw ConfigError("manifest metaclass \"" + g.key() + "\": unknown member \"" + n + "\"");
        }
        members.push_back(n);
      }
      m.metaclasses_[NormalizeName(g.key())] = std::move(members);
    }
  } else {
    m.metaclasses_ = std::move(tags_to_members);
  }
  // Members dropped for lack of images no longer resolve.
  for (auto& [name, members] : m.metaclasses_) {
    std::erase_if(members, [&](const std::string& n) { return m.FindClass(n) == nullptr; });
  }
  std::erase_if(m.metaclasses_, [](const auto& kv) { return kv.second.empty(); });

  if (m.classes_.empty()) throw ConfigError("manifest has no usable classes");
  if (m.classes_.size() > Codebook::kUnknownIndex) {
    throw ConfigError("manifest has more than 255 classes");
  }
  return m;
}

const ClassEntry* DatasetManifest::FindClass(std::string_view name) const {
  const std::string n = NormalizeName(name);
  for (const auto& c : classes_) {
    if (c.name == n) return &c;
  }
  return nullptr;
}

const std::vector<std::string>* DatasetManifest::FindMetaclass(std::string_view name) const {
  auto it = metaclasses_.find(NormalizeName(name));
  return it == metaclasses_.end() ? nullptr : &it->second;
}

std::vector<std::string> DatasetManifest::ClassNames() const {
  std::vector<std::string> out;
  for (const auto& c : classes_) out.push_back(c.name);
  return out;
}

Codebook::Codebook(std::vector<std::string> names) {
  for (auto& n : names) {
    n = NormalizeName(n);
    if (std::find(names_.begin(), names_.end(), n) == names_.end()) names_.push_back(n);
  }
  if (names_.size() > kUnknownIndex) throw ConfigError("codebook holds at most 255 names");
}

int Codebook::IndexOf(std::string_view name) const {
  const std::string n = NormalizeName(name);
  auto it = std::find(names_.begin(), names_.end(), n);
  return it == names_.end() ? kUnknownIndex : static_cast<int>(it - names_.begin());
}

std::optional<std::string> Codebook::NameOf(int index) const {
  if (index < 0 || index >= static_cast<int>(names_.size())) return std::nullopt;
  return names_[index];
}

std::optional<std::string> Codebook::FindInText(std::string_view text) const {
  std::optional<std::string> best;
  for (const auto& n : names_) {
    if ((!best || n.size() > best->size()) && ContainsWords(text, n)) best = n;
  }
  return best;
}

}  // namespace autobench
