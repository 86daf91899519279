// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

namespace autobench {

struct Url {
  std::string scheme;  // "http" or "https"
  std::string host;
  int port = 0;
  std::string path;  // no trailing slash; empty for the root

  /// "scheme://host:port", the form cpp-httplib clients take.
  std::string origin() const;
};

/// Parses an absolute http(s) URL. Throws ConfigError otherwise.
Url ParseUrl(std::string_view text);

}  // namespace autobench
