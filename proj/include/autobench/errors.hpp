// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace autobench {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration: unknown model names, bad config files, bad flags.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Report lifecycle violation (append after conclusion, beyond the cap).
class LifecycleError : public Error {
 public:
  using Error::Error;
};

/// Structured document failed to parse or validate. The message is
/// path-qualified ("/entries/0/findings: ...") and is what the self-heal
/// loop feeds back to the orchestrator verbatim.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A tool was invoked without its preconditions (missing label, no
/// generation backend, ...).
class ToolError : public Error {
 public:
  using Error::Error;
};

/// Network failure after retries, or a backend that could not be reached.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// A remote endpoint answered with a malformed or inconsistent payload.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// The self-heal loop ran out of retries. Carries every validator message
/// seen during the exchange, in order.
class HealExhausted : public Error {
 public:
  explicit HealExhausted(std::vector<std::string> messages)
      : Error(Summarize(messages)), messages_(std::move(messages)) {}

  const std::vector<std::string>& messages() const noexcept { return messages_; }

 private:
  static std::string Summarize(const std::vector<std::string>& messages) {
    std::string out = "self-heal exhausted after " + std::to_string(messages.size()) +
                      " invalid payload(s)";
    if (!messages.empty()) out += "; last: " + messages.back();
    return out;
  }

  std::vector<std::string> messages_;
};

}  // namespace autobench
