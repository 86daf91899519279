// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace autobench {

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent stream id from a parent seed and coordinates,
/// e.g. DeriveStream(experiment_seed, {choice, repetition}).
constexpr std::uint64_t DeriveStream(std::uint64_t seed,
                                     std::initializer_list<std::uint64_t> coords) noexcept {
  std::uint64_t h = Mix64(seed);
  for (auto c : coords) h = Mix64(h ^ Mix64(c + 0x632be59bd9b4e019ULL));
  return h;
}

constexpr std::uint64_t HashString(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) noexcept {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace autobench
