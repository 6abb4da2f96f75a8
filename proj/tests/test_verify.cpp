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
#include <map>

#include "json.hpp"
#include "oracles.hpp"
#include "rig/graphgen.hpp"
#include "rig/model.hpp"
#include "rig/random.hpp"
#include "rig/types.hpp"
#include "rig/verify.hpp"

using namespace rig;

namespace {

const BoundReport& find(const std::vector<BoundReport>& rows, const std::string& id,
                        double t = -1.0) {
  for (const auto& r : rows) {
    if (r.bound_id != id) continue;
    if (t >= 0.0 && r.param("t") != t) continue;
    return r;
  }
  FAIL("missing row " << id);
  return rows.front();
}

bool near(double got, double want, double rel = 1e-11) {
  return std::abs(got - want) <= 1e-13 || std::abs(got - want) <= rel * std::abs(want);
}

}  // namespace

TEST_CASE("wilson interval and resolution") {
  const auto w = wilson_interval(50, 100);
  CHECK(w.low == doctest::Approx(0.37528).epsilon(1e-4));
  CHECK(w.high == doctest::Approx(0.62472).epsilon(1e-4));
  CHECK(w.low + w.high == doctest::Approx(1.0).epsilon(1e-14));
  const auto all = wilson_interval(1000, 1000);
  CHECK(all.high == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(1.0 - all.low == doctest::Approx(monte_carlo_resolution(1000)).epsilon(1e-12));
  CHECK(wilson_interval(0, 0).low == 0.0);
  CHECK(wilson_interval(0, 0).high == 1.0);
}

TEST_CASE("geometric grid is interior and geometric") {
  const auto g = geometric_grid(1.0, 100.0, 3);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == doctest::Approx(std::sqrt(10.0)));
  CHECK(g[1] == doctest::Approx(10.0));
  CHECK(g[2] == doctest::Approx(std::pow(10.0, 1.5)));
  CHECK(geometric_grid(1.0, 2.0, 0).empty());
}

TEST_CASE("intersection bounds hold on the full grid") {
  const std::vector<std::uint64_t> ms{100, 300, 1000};
  const auto grid = intersection_grid(30, ms);
  CHECK(grid.size() == 3 * 31 * 31);
  const auto rows = check_intersection_bounds(grid);
  std::size_t fails = 0;
  std::size_t passes = 0;
  for (const auto& r : rows) {
    fails += r.status == BoundStatus::kFail;
    passes += r.status == BoundStatus::kPass;
  }
  CHECK(fails == 0);
  CHECK(passes > 0);
}

TEST_CASE("intersection rows at (1, 1, 10)") {
  const std::vector<GridPoint> grid{{1, 1, 10}};
  const auto rows = check_intersection_bounds(grid);
  const auto& lo = find(rows, "no_intersection.lower");
  const auto& up = find(rows, "no_intersection.upper");
  CHECK(lo.rhs == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(lo.lhs == doctest::Approx(0.875).epsilon(1e-15));
  CHECK(up.lhs == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(up.rhs == doctest::Approx(0.91).epsilon(1e-15));
  CHECK(lo.status == BoundStatus::kPass);
  CHECK(up.status == BoundStatus::kPass);
  const auto& ilo = find(rows, "intersection.lower");
  CHECK(ilo.param("s") == doctest::Approx(0.2));
  CHECK(ilo.rhs == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("intersection rows with empty sets and out-of-domain points") {
  const std::vector<GridPoint> grid{{0, 0, 10}, {11, 2, 10}, {6, 5, 10}};
  const auto rows = check_intersection_bounds(grid);
  for (const auto& r : rows) {
    if (r.param("j") == 0.0) {
      if (r.bound_id.starts_with("intersection.")) {
        CHECK(r.status == BoundStatus::kSkipped);
      } else {
        CHECK(r.status == BoundStatus::kPass);
      }
      if (r.bound_id == "no_intersection.lower") CHECK(r.rhs == 1.0);
    } else if (r.param("j") == 11.0) {
      CHECK(r.bound_id == "intersection");
      CHECK(r.status == BoundStatus::kSkipped);
    } else if (r.bound_id.starts_with("no_intersection.lower") ||
               r.bound_id.starts_with("no_intersection.upper") ||
               r.bound_id.starts_with("intersection.")) {
      // j + k = 11 > m.
      CHECK(r.status == BoundStatus::kSkipped);
    }
  }
}

TEST_CASE("intersection rows agree with exact rationals") {
  std::vector<GridPoint> grid;
  for (std::uint64_t j : {0u, 1u, 3u, 7u, 12u}) {
    for (std::uint64_t k : {0u, 2u, 5u, 11u}) grid.push_back({j, k, 37});
  }
  const auto rows = check_intersection_bounds(grid);
  for (const auto& r : rows) {
    const auto j = static_cast<std::uint64_t>(r.param("j"));
    const auto k = static_cast<std::uint64_t>(r.param("k"));
    const std::uint64_t m = 37;
    const double lambda = double(j * k) / double(m);
    const double p0 = oracle::to_double(oracle::no_intersection(j, k, m));
    if (r.bound_id == "no_intersection.lower") {
      CHECK(near(r.rhs, p0));
    } else if (r.bound_id == "no_intersection.upper" || r.bound_id == "no_intersection.exp") {
      CHECK(near(r.lhs, p0));
    } else if (r.bound_id == "intersection.lower") {
      CHECK(near(r.rhs, 1.0 - p0));
    } else if (r.bound_id == "intersection.upper") {
      CHECK(near(r.lhs, 1.0 - p0));
    } else if (r.bound_id == "tail.upper") {
      const auto t = static_cast<std::uint64_t>(r.param("t"));
      // smallest integer r with r >= lambda + t
      std::uint64_t up = 0;
      while (double(up) * double(m) < double(j * k + t * m)) ++up;
      const double want =
          up > std::min(j, k) ? 0.0 : oracle::to_double(oracle::hypergeom_sf(j, k, m, up));
      CHECK(near(r.lhs, want));
    } else if (r.bound_id == "tail.lower") {
      const auto t = static_cast<std::uint64_t>(r.param("t"));
      oracle::Rational acc = 0;
      for (std::uint64_t x = 0; x <= std::min(j, k); ++x) {
        if (double(x) + double(t) <= lambda + 1e-12) acc += oracle::hypergeom_pmf(j, k, m, x);
      }
      CHECK(near(r.lhs, oracle::to_double(acc)));
    }
  }
}

TEST_CASE("union coverage") {
  UnionCoverageConfig cfg;
  cfg.m = 10000;
  cfg.n = 100;
  cfg.sizes = {1000};
  cfg.trials = 2000;
  cfg.seed = 3;
  // A single set never loses anything to overlaps.
  const auto one = check_union_coverage(cfg);
  CHECK(one.status == BoundStatus::kPass);
  CHECK(*one.estimate == 1.0);
  CHECK(one.lhs == doctest::Approx(1.0 - 1e-6));
  CHECK(one.param("r") == 1.0);

  cfg.sizes.assign(10, 100);
  const auto ten = check_union_coverage(cfg);
  CHECK(ten.status == BoundStatus::kPass);
  CHECK(ten.param("total") == 1000.0);

  SUBCASE("preconditions") {
    auto bad = cfg;
    bad.gamma1 = 0.6;
    CHECK_THROWS_AS(check_union_coverage(bad), ConfigError);
    bad = cfg;
    bad.sizes.clear();
    CHECK_THROWS_AS(check_union_coverage(bad), ConfigError);
    bad = cfg;
    bad.sizes.assign(11, 100);
    CHECK_THROWS_AS(check_union_coverage(bad), ConfigError);
    bad = cfg;
    bad.sizes = {500, 50};  // 50 is below the size floor 6*0.5/0.16*ln 100 = 86.3
    CHECK_THROWS_AS(check_union_coverage(bad), ConfigError);
    bad = cfg;
    bad.trials = 0;
    CHECK_THROWS_AS(check_union_coverage(bad), ConfigError);
    bad = cfg;
    bad.n = 1;
    CHECK_THROWS_AS(check_union_coverage(bad), ConfigError);
  }
}

TEST_CASE("overlap probability matches enumeration") {
  for (unsigned m : {6u, 9u, 12u}) {
    for (unsigned b = 1; b <= m; b += 2) {
      for (unsigned d = 1; d <= m; d += 2) {
        for (unsigned a = 1; a <= d; a += 2) {
          const double got = overlap_conditional_probability(a, b, d, m);
          const double want = oracle::to_double(oracle::overlap_by_enumeration(a, b, d, m));
          REQUIRE(near(got, want, 1e-10));
        }
      }
    }
  }
  CHECK_THROWS_AS(overlap_conditional_probability(0, 1, 1, 5), ConfigError);
  CHECK_THROWS_AS(overlap_conditional_probability(3, 1, 2, 5), ConfigError);
  CHECK_THROWS_AS(overlap_conditional_probability(1, 6, 2, 5), ConfigError);
}

TEST_CASE("overlap bound") {
  CHECK(overlap_bound(1, 8, 1000) == doctest::Approx(std::exp(-1.0)));
  // a > b/4, ab <= m and b >= 3 switch on the heavy term.
  CHECK(overlap_bound(4, 8, 1000) == doctest::Approx(std::exp(-1.0) * (1.0 + 4000.0 / 32.0)));
  CHECK(overlap_bound(4, 2, 1000) == doctest::Approx(std::exp(-0.25)));
}

TEST_CASE("overlap concentration statuses") {
  OverlapConfig cfg{40, 16, 100, 10000, 20000, 5};
  const auto heavy = check_overlap_concentration(cfg);
  CHECK(heavy.satisfied());
  CHECK(heavy.status == BoundStatus::kVacuous);

  const auto single = check_overlap_concentration({8, 1, 20, 2000, 1000, 5});
  CHECK(single.status == BoundStatus::kSkipped);
  // The conditional probability is 1 here, above e^(-1/8).
  CHECK(single.param("exact") == 1.0);

  const auto wide = check_overlap_concentration({1, 8, 50, 100, 1000, 5});
  CHECK(wide.status == BoundStatus::kSkipped);

  const auto rare = check_overlap_concentration({1, 4, 100, 10000, 100, 5});
  CHECK(rare.status == BoundStatus::kInconclusive);

  const auto tight = check_overlap_concentration({100, 64, 100, 10000, 5000, 5});
  CHECK(tight.status == BoundStatus::kPass);
  CHECK(tight.rhs < 1.0);
  CHECK(*tight.samples == 5000);

  // The estimate tracks the exact conditional probability.
  const auto mid = check_overlap_concentration({2, 16, 100, 10000, 50000, 9});
  CHECK(std::abs(*mid.estimate - mid.param("exact")) <= 4.0 * std::sqrt(0.25 / 50000.0));
  CHECK_THROWS_AS(check_overlap_concentration({1, 4, 100, 10000, 0, 5}), ConfigError);
}

TEST_CASE("weight sum sandwich equals the closed form") {
  for (double alpha : {0.3, 0.5, 0.8}) {
    for (double c0 : {0.5, 1.0, 2.0}) {
      const std::uint64_t n = 100000;
      const double upper = std::pow(double(n), 1.0 / (1.0 + alpha)) * 3.0;
      const double c12 = std::pow(c0, 1.0 + alpha);
      for (double t : {c0, 2.0 * c0, 10.0 * c0, upper / 2.0}) {
        const double want = c12 * (1.0 - std::pow(t / upper, alpha));
        CHECK(weight_sum_sandwich(n, alpha, c0, t, upper) == doctest::Approx(want).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("max weight window probability") {
  const std::uint64_t n = 1000;
  const double alpha = 0.5;
  const double omega = 3.0;
  const double base = std::pow(1000.0, 1.0 / 1.5);
  const auto below = [&](double x) { return std::pow(1.0 - std::pow(x, -1.5), 1000.0); };
  CHECK(max_weight_window_probability(n, alpha, 1.0, omega) ==
        doctest::Approx(below(base * omega) - below(base / omega)).epsilon(1e-12));
}

TEST_CASE("weight sum checks") {
  WeightSumConfig cfg;
  cfg.n = 2000;
  cfg.alpha = 0.8;
  cfg.tau = 1.4;
  cfg.trials = 60;
  cfg.seed = 11;
  cfg.t_grid = {1.0, 2.0, 5.0, 1e6};
  const auto rows = check_weight_sums(cfg);
  CHECK(rows.front().bound_id == "max_weight.window");
  CHECK(rows.front().param("omega") == doctest::Approx(loglog_scale(2000)));
  // t = c0 and t above n^(1/(1+alpha)) come back skipped at the end.
  REQUIRE(rows.size() == 1 + 2 * 4 + 2);
  CHECK(rows[rows.size() - 2].status == BoundStatus::kSkipped);
  CHECK(rows[rows.size() - 2].param("t") == 1.0);
  CHECK(rows.back().param("t") == 1e6);
  for (double t : {2.0, 5.0}) {
    CHECK(find(rows, "weight_sum.sandwich.lower", t).status == BoundStatus::kPass);
    CHECK(find(rows, "weight_sum.sandwich.upper", t).status == BoundStatus::kPass);
    CHECK(find(rows, "weight_sum.monte_carlo", t).status == BoundStatus::kPass);
    // At this n the deviation bound exceeds 1.
    CHECK(find(rows, "weight_sum.deviation", t).status == BoundStatus::kVacuous);
  }
  CHECK(check_weight_sums(cfg).size() == rows.size());
  CHECK(bound_reports_to_csv(check_weight_sums(cfg)) == bound_reports_to_csv(rows));

  auto bad = cfg;
  bad.tau = 1.9;
  CHECK_THROWS_AS(check_weight_sums(bad), ConfigError);
  bad = cfg;
  bad.trials = 1;
  CHECK_THROWS_AS(check_weight_sums(bad), ConfigError);
  bad = cfg;
  bad.gamma = 0.0;
  CHECK_THROWS_AS(check_weight_sums(bad), ConfigError);
}

TEST_CASE("degrees and degree tail") {
  const auto inc = BipartiteIncidence::from_sets(4, {{0, 1}, {1}, {2}, {}, {2, 3}});
  CHECK(degrees(inc) == std::vector<std::uint64_t>{1, 1, 1, 0, 1});

  const auto empty = BipartiteIncidence::from_sets(3, {{}, {}, {}});
  const auto tail = degree_tail_report(empty);
  CHECK(tail.max_degree == 0);
  CHECK_FALSE(tail.slope.has_value());
  CHECK(tail.survival.size() == 1);
  CHECK(tail.survival[0].second == 0.0);
}

TEST_CASE("degree tail slope follows the weight exponent") {
  std::map<std::uint64_t, double> slope;
  for (std::uint64_t n : {100000ull, 200000ull}) {
    Rng rng(stream_seed(21, n, 0));
    const auto g = generate(ModelParams::with_default_m(n, 0.8, 1.0), rng);
    const auto tail = degree_tail_report(g.incidence);
    REQUIRE(tail.slope.has_value());
    slope[n] = *tail.slope;
  }
  CHECK(slope[100000] == doctest::Approx(-1.8).epsilon(0.25 / 1.8));
  CHECK(std::abs(slope[100000] - slope[200000]) <= 0.1);
}

TEST_CASE("report serialization") {
  const std::vector<GridPoint> grid{{1, 1, 10}};
  auto rows = check_intersection_bounds(grid);
  rows.push_back(check_overlap_concentration({1, 4, 100, 10000, 100, 5}));
  const std::string csv = bound_reports_to_csv(rows);
  CHECK(csv.starts_with(
      "bound_id,params,lhs,rhs,slack,status,estimate,interval_low,interval_high,samples,"
      "diagnostic\n"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == std::ptrdiff_t(rows.size() + 1));
  const auto j = nlohmann::json::parse(bound_reports_to_json(rows));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == rows.size());
  CHECK(j[0]["bound_id"] == "no_intersection.lower");
  CHECK(j[0]["status"] == "pass");
  CHECK(j.back()["status"] == "inconclusive");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e300) == "1e+300");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}
