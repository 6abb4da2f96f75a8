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

namespace rig {

/// ln(x!). Tabulated by long-double accumulation below 2^16, lgamma above.
double log_factorial(std::uint64_t x);

/// ln C(a, b); -inf when b > a.
double log_choose(std::uint64_t a, std::uint64_t b);

/// Law of |S1 ∩ S2| for uniform S1, S2 of sizes draws and successes in a
/// ground set of size population.
struct HypergeomParams {
  std::uint64_t draws = 0;      // j
  std::uint64_t successes = 0;  // k
  std::uint64_t population = 0; // m

  /// Throws ConfigError unless draws, successes <= population.
  void validate() const;
  std::uint64_t support_min() const;
  std::uint64_t support_max() const;
  double mean() const;
};

/// P(H = r); zero outside the support.
double hypergeom_pmf(const HypergeomParams& p, std::int64_t r);

/// P(H >= t).
double hypergeom_sf(const HypergeomParams& p, std::int64_t t);

/// P(H <= t).
double hypergeom_cdf(const HypergeomParams& p, std::int64_t t);

/// P(H = 0) = (m-k)_j / (m)_j evaluated as a product of ratios.
double no_intersection_probability(const HypergeomParams& p);

/// 1 - P(H = 0) without cancellation.
double intersection_probability(const HypergeomParams& p);

}  // namespace rig
