// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autobench {

/// Lowercase, trim, collapse inner whitespace.
std::string NormalizeName(std::string_view name);

struct ImageRecord {
  std::filesystem::path path;  // absolute, resolved against the manifest dir
  std::string image_type = "photo";
};

struct ClassEntry {
  std::string name;  // normalized
  std::vector<std::string> metaclasses;
  std::vector<ImageRecord> images;
};

class DatasetManifest {
 public:
  /// Errors: ConfigError on unreadable/invalid JSON, duplicate normalized
  /// names, dangling metaclass members, or when no class survives. Missing
  /// image files become warnings; a class whose files are all missing is
  /// dropped.
  static DatasetManifest Load(const std::filesystem::path& path);
  static DatasetManifest FromJsonText(std::string_view text,
                                     const std::filesystem::path& base_dir);

  const std::vector<ClassEntry>& classes() const noexcept { return classes_; }
  const std::map<std::string, std::vector<std::string>>& metaclasses() const noexcept {
    return metaclasses_;
  }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  const ClassEntry* FindClass(std::string_view name) const;
  /// Members of a metaclass, or nullptr.
  const std::vector<std::string>* FindMetaclass(std::string_view name) const;

  /// Class names in manifest order (the mock codebook).
  std::vector<std::string> ClassNames() const;

 private:
  std::vector<ClassEntry> classes_;
  std::map<std::string, std::vector<std::string>> metaclasses_;
  std::vector<std::string> warnings_;
};

/// Index <-> class name table shared by the mock generator and the oracle
/// mock model. At most 255 names; index 255 is reserved for "unknown".
class Codebook {
 public:
  static constexpr int kUnknownIndex = 255;

  Codebook() = default;
  explicit Codebook(std::vector<std::string> names);

  int IndexOf(std::string_view name) const;  // kUnknownIndex when absent
  std::optional<std::string> NameOf(int index) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Longest codebook name occurring in `text` on word boundaries.
  std::optional<std::string> FindInText(std::string_view text) const;

 private:
  std::vector<std::string> names_;
};

/// True when `needle` occurs in `haystack` delimited by non-alphanumerics.
/// Both arguments are compared after NormalizeName.
bool ContainsWords(std::string_view haystack, std::string_view needle);

}  // namespace autobench
