// Copyright 2026 The rig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace rig {

// The engine is fully specified by the standard, so a seed reproduces the
// same stream on every conforming library. The std distributions are not, so
// all conversions to uniforms below are done by hand.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the independent stream for (master, n, trial).
///
/// Splitting rule: s = mix64(mix64(mix64(master) ^ n) ^ trial). Distinct
/// (n, trial) pairs under one master seed give unrelated streams, and any
/// single trial can be replayed without running the others.
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t n,
                                    std::uint64_t trial) {
  return mix64(mix64(mix64(master) ^ n) ^ trial);
}

inline Rng make_stream(std::uint64_t master, std::uint64_t n,
                       std::uint64_t trial) {
  return Rng(stream_seed(master, n, trial));
}

/// Uniform on (0, 1], 53-bit resolution.
inline double uniform_half_open(Rng& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

/// Uniform on [0, 1), 53-bit resolution.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, bound), bound > 0 (Lemire's method).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  __extension__ using u128 = unsigned __int128;
  u128 product = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace rig
