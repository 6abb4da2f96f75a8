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

#include "rig/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rig/types.hpp"

namespace rig {
namespace {

constexpr std::uint64_t kTableSize = 1u << 16;
// Above this many factors the pmf falls back to log-factorials.
constexpr std::uint64_t kProductLimit = 1u << 14;

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kTableSize);
    long double acc = 0.0L;
    t[0] = 0.0;
    for (std::uint64_t i = 1; i < kTableSize; ++i) {
      acc += std::log(static_cast<long double>(i));
      t[i] = static_cast<double>(acc);
    }
    return t;
  }();
  return table;
}

// ln of prod_{i<j} (m - k - i) / (m - i), i.e. ln P(H = 0).
double log_no_intersection(const HypergeomParams& p) {
  const auto j = p.draws;
  const auto k = p.successes;
  const auto m = p.population;
  if (j == 0 || k == 0) return 0.0;
  if (j + k > m) return -std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (std::uint64_t i = 0; i < j; ++i) {
    acc += std::log1p(-static_cast<double>(k) / static_cast<double>(m - i));
  }
  return acc;
}

}  // namespace

double log_factorial(std::uint64_t x) {
  if (x < kTableSize) return log_factorial_table()[x];
  return std::lgamma(static_cast<double>(x) + 1.0);
}

double log_choose(std::uint64_t a, std::uint64_t b) {
  if (b > a) return -std::numeric_limits<double>::infinity();
  return log_factorial(a) - log_factorial(b) - log_factorial(a - b);
}

void HypergeomParams::validate() const {
  if (draws > population || successes > population) {
    throw ConfigError("hypergeometric parameters need j, k <= m");
  }
}

std::uint64_t HypergeomParams::support_min() const {
  return draws + successes > population ? draws + successes - population : 0;
}

std::uint64_t HypergeomParams::support_max() const {
  return std::min(draws, successes);
}

double HypergeomParams::mean() const {
  if (population == 0) return 0.0;
  return static_cast<double>(draws) * static_cast<double>(successes) /
         static_cast<double>(population);
}

double hypergeom_pmf(const HypergeomParams& p, std::int64_t r) {
  p.validate();
  if (r < static_cast<std::int64_t>(p.support_min()) ||
      r > static_cast<std::int64_t>(p.support_max())) {
    return 0.0;
  }
  const auto ur = static_cast<std::uint64_t>(r);
  if (p.support_min() == p.support_max()) return 1.0;
  // The law is symmetric in j and k; iterate over the smaller one.
  const std::uint64_t j = std::min(p.draws, p.successes);
  const std::uint64_t k = std::max(p.draws, p.successes);
  const std::uint64_t m = p.population;
  if (j > kProductLimit) {
    return std::exp(log_choose(k, ur) + log_choose(m - k, j - ur) - log_choose(m, j));
  }
  // P(H = r) = prod_{i<r} (k-i)(j-i) / ((r-i)(m-j+r-i))
  //          * prod_{i<j-r} (m-k-i) / (m-i).
  double acc = 0.0;
  for (std::uint64_t i = 0; i < ur; ++i) {
    acc += std::log(static_cast<double>(k - i) / static_cast<double>(ur - i)) +
           std::log(static_cast<double>(j - i) / static_cast<double>(m - j + ur - i));
  }
  const double kd = static_cast<double>(k);
  for (std::uint64_t i = 0; i < j - ur; ++i) {
    acc += std::log1p(-kd / static_cast<double>(m - i));
  }
  return std::exp(acc);
}

double hypergeom_sf(const HypergeomParams& p, std::int64_t t) {
  p.validate();
  const auto lo = static_cast<std::int64_t>(p.support_min());
  const auto hi = static_cast<std::int64_t>(p.support_max());
  if (t <= lo) return 1.0;
  if (t > hi) return 0.0;
  double acc = 0.0;
  for (std::int64_t r = hi; r >= t; --r) acc += hypergeom_pmf(p, r);
  return std::min(acc, 1.0);
}

double hypergeom_cdf(const HypergeomParams& p, std::int64_t t) {
  p.validate();
  const auto lo = static_cast<std::int64_t>(p.support_min());
  const auto hi = static_cast<std::int64_t>(p.support_max());
  if (t < lo) return 0.0;
  if (t >= hi) return 1.0;
  double acc = 0.0;
  for (std::int64_t r = lo; r <= t; ++r) acc += hypergeom_pmf(p, r);
  return std::min(acc, 1.0);
}

double no_intersection_probability(const HypergeomParams& p) {
  p.validate();
  return std::exp(log_no_intersection(p));
}

double intersection_probability(const HypergeomParams& p) {
  p.validate();
  return -std::expm1(log_no_intersection(p));
}

}  // namespace rig
