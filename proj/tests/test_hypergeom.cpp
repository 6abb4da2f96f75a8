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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "rig/hypergeom.hpp"
#include "rig/types.hpp"

using namespace rig;

namespace {

bool close(double got, const oracle::Rational& want, double rel = 1e-11) {
  const double w = oracle::to_double(want);
  return std::abs(got - w) <= 1e-12 || std::abs(got - w) <= rel * std::abs(w);
}

}  // namespace

TEST_CASE("log factorial and log binomial") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
  for (std::uint64_t x : {10ull, 1000ull, 65535ull, 65536ull, 1000000ull, 1ull << 40}) {
    CHECK(log_factorial(x) == doctest::Approx(std::lgamma(double(x) + 1.0)).epsilon(1e-13));
  }
  CHECK(log_choose(10, 3) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
  CHECK(log_choose(3, 10) == -INFINITY);
}

TEST_CASE("pmf examples") {
  CHECK(hypergeom_pmf({1, 1, 2}, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(hypergeom_pmf({0, 7, 20}, 0) == 1.0);
  CHECK(hypergeom_pmf({0, 0, 1}, 0) == 1.0);
  const oracle::Rational want(oracle::choose(7, 2) * oracle::choose(13, 3), oracle::choose(20, 5));
  CHECK(close(hypergeom_pmf({5, 7, 20}, 2), want, 1e-13));
  CHECK(hypergeom_pmf({5, 7, 20}, -1) == 0.0);
  CHECK(hypergeom_pmf({5, 7, 20}, 6) == 0.0);
  // Support starts at j + k - m.
  CHECK(hypergeom_pmf({15, 10, 20}, 4) == 0.0);
  CHECK(hypergeom_pmf({15, 10, 20}, 5) > 0.0);
}

TEST_CASE("sf examples") {
  const HypergeomParams p{5, 7, 20};
  CHECK(hypergeom_sf(p, 0) == 1.0);
  CHECK(hypergeom_sf(p, -3) == 1.0);
  CHECK(hypergeom_sf(p, 6) == 0.0);
  CHECK(hypergeom_sf({15, 10, 20}, 5) == doctest::Approx(1.0).epsilon(1e-14));
  const oracle::Rational want =
      1 - oracle::hypergeom_pmf(5, 7, 20, 0) - oracle::hypergeom_pmf(5, 7, 20, 1);
  CHECK(close(hypergeom_sf(p, 2), want, 1e-13));
  CHECK(hypergeom_cdf(p, 1) == doctest::Approx(1.0 - hypergeom_sf(p, 2)).epsilon(1e-14));
}

TEST_CASE("pmf, sf and no-intersection agree with exact rationals for m <= 100") {
  for (std::uint64_t m : {2ull, 7ull, 20ull, 61ull, 100ull}) {
    for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(m, 30); ++j) {
      for (std::uint64_t k = 0; k <= std::min<std::uint64_t>(m, 30); k += (m > 30 ? 3 : 1)) {
        const HypergeomParams p{j, k, m};
        double total = 0.0;
        double prev_sf = 2.0;
        for (std::int64_t r = 0; r <= std::int64_t(std::min(j, k)); ++r) {
          const double pmf = hypergeom_pmf(p, r);
          REQUIRE(close(pmf, oracle::hypergeom_pmf(j, k, m, r)));
          const double sf = hypergeom_sf(p, r);
          REQUIRE(close(sf, oracle::hypergeom_sf(j, k, m, r)));
          REQUIRE(sf <= prev_sf);
          prev_sf = sf;
          total += pmf;
        }
        REQUIRE(std::abs(total - 1.0) <= 1e-12);
        const auto p0 = oracle::no_intersection(j, k, m);
        REQUIRE(close(no_intersection_probability(p), p0));
        REQUIRE(close(intersection_probability(p), 1 - p0));
      }
    }
  }
}

TEST_CASE("pmf normalizes on large populations") {
  for (std::uint64_t m : {1000ull, 100000ull, 10000000ull}) {
    const HypergeomParams p{300, 500, m};
    double total = 0.0;
    for (std::int64_t r = 0; r <= 300; ++r) total += hypergeom_pmf(p, r);
    CHECK(std::abs(total - 1.0) <= 1e-12);
    CHECK(p.mean() == doctest::Approx(300.0 * 500.0 / double(m)));
  }
  // Tiny intersection probabilities keep their relative precision.
  const HypergeomParams tiny{1, 1, 100000000};
  CHECK(intersection_probability(tiny) == doctest::Approx(1e-8).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(HypergeomParams({5, 3, 4}).validate(), ConfigError);
  CHECK_THROWS_AS(HypergeomParams({3, 5, 4}).validate(), ConfigError);
  CHECK_NOTHROW(HypergeomParams({4, 4, 4}).validate());
  CHECK(HypergeomParams({4, 4, 4}).support_min() == 4);
  CHECK(hypergeom_pmf({4, 4, 4}, 4) == doctest::Approx(1.0).epsilon(1e-14));
}
