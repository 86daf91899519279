// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/url.hpp"

#include <regex>

#include "autobench/errors.hpp"

namespace autobench {

std::string Url::origin() const {
  return scheme + "://" + host + ":" + std::to_string(port);
}

Url ParseUrl(std::string_view text) {
  static const std::regex kUrl(R"(^(https?)://([A-Za-z0-9.\-]+|\[[0-9A-Fa-f:]+\])(?::(\d{1,5}))?(/[^?#\s]*)?$)");
  std::cmatch m;
  if (!std::regex_match(text.data(), text.data() + text.size(), m, kUrl)) {
    throw ConfigError("not an absolute http(s) URL: \"" + std::string(text) + "\"");
  }
  Url url;
  url.scheme = m[1].str();
  url.host = m[2].str();
  url.port = m[3].matched ? std::stoi(m[3].str()) : (url.scheme == "https" ? 443 : 80);
  if (url.port <= 0 || url.port > 65535) {
    throw ConfigError("port out of range in URL \"" + std::string(text) + "\"");
  }
  url.path = m[4].matched ? m[4].str() : "";
  while (!url.path.empty() && url.path.back() == '/') url.path.pop_back();
  return url;
}

}  // namespace autobench
