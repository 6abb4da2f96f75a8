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

// Machine checks of the probabilistic inequalities the distance bounds rest
// on. Every check returns BoundReport rows oriented as "lhs <= rhs"; slack is
// rhs - lhs.
//
//  - intersection bounds: exact hypergeometric quantities against the
//    no-intersection sandwich, the intersection-probability sandwich, the two
//    exponential tail bounds and exp(-jk/2m);
//  - union coverage: Monte Carlo probability that r independent uniform sets
//    lose at most a gamma2 fraction of their total size to overlaps;
//  - overlap concentration: Monte Carlo probability that a uniform b-set
//    meets a fixed d-set in at least b/2 points, given it meets a nested
//    a-subset;
//  - weight sums: the truncated weight sum L_n(t) against its expectation
//    sandwich and its deviation bound, plus the window of the maximum weight.
//
// Monte Carlo verdicts use 99% Wilson score intervals. The resolution
// tolerance of an N-sample check is z^2 / (N + z^2), the distance from the
// all-success Wilson lower end to 1.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rig/graphgen.hpp"
#include "rig/hypergeom.hpp"
#include "rig/model.hpp"

namespace rig {

enum class BoundStatus { kPass, kFail, kVacuous, kSkipped, kInconclusive };

const char* to_string(BoundStatus s);

struct BoundReport {
  std::string bound_id;
  std::vector<std::pair<std::string, double>> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  BoundStatus status = BoundStatus::kPass;
  std::string diagnostic;

  /// Monte Carlo details, when the row is statistical.
  std::optional<double> estimate;
  std::optional<double> interval_low;
  std::optional<double> interval_high;
  std::optional<std::uint64_t> samples;

  /// Pass or vacuous.
  bool satisfied() const;
  double param(const std::string& name) const;
};

/// Float slack allowed on exact comparisons.
inline constexpr double kExactTolerance = 1e-12;
/// Two-sided 99% normal quantile.
inline constexpr double kWilsonZ99 = 2.5758293035489004;

struct WilsonInterval {
  double low;
  double high;
};

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z = kWilsonZ99);

/// z^2 / (N + z^2).
double monte_carlo_resolution(std::uint64_t trials, double z = kWilsonZ99);

/// Interior geometric grid: lo * (hi/lo)^(i/(count+1)), i = 1..count.
std::vector<double> geometric_grid(double lo, double hi, std::size_t count);

// --- intersection bounds ---------------------------------------------------

struct GridPoint {
  std::uint64_t j = 0;
  std::uint64_t k = 0;
  std::uint64_t m = 0;
};

/// j, k in [0, max_jk] for each m.
std::vector<GridPoint> intersection_grid(std::uint64_t max_jk,
                                         std::span<const std::uint64_t> ms);

/// Rows per grid point: no_intersection.lower/.upper (needs j + k < m),
/// intersection.lower/.upper (needs 0 < (j+k)/m < 1, with s = (j+k)/m),
/// tail.upper/tail.lower for t = 0..min(j,k), no_intersection.exp.
std::vector<BoundReport> check_intersection_bounds(std::span<const GridPoint> grid);

// --- union coverage --------------------------------------------------------

struct UnionCoverageConfig {
  std::uint64_t m = 0;
  /// The n of the n^-3 failure rate and of the ln n size floor.
  std::uint64_t n = 0;
  double gamma1 = 0.1;
  double gamma2 = 0.5;
  std::vector<std::uint64_t> sizes;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
};

/// Throws ConfigError naming the violated precondition.
BoundReport check_union_coverage(const UnionCoverageConfig& cfg);

// --- overlap concentration -------------------------------------------------

struct OverlapConfig {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t d = 1;
  std::uint64_t m = 100;
  /// Accepted (conditioned) samples wanted; attempts cap at 10x.
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
};

/// e^(-b/8) * (1 + 4 m/(ab) * 1{a > b/4, ab <= m, b >= 3}).
double overlap_bound(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// Exact P(|S_b ∩ S_d| >= b/2 | S_b ∩ S_a nonempty) for nested S_a in S_d.
double overlap_conditional_probability(std::uint64_t a, std::uint64_t b,
                                       std::uint64_t d, std::uint64_t m);

/// Skipped (with the exact value still reported) outside d <= m/100 and
/// b >= 4; inconclusive below 100 accepted samples.
BoundReport check_overlap_concentration(const OverlapConfig& cfg);

// --- weight sums -----------------------------------------------------------

struct WeightSumConfig {
  std::uint64_t n = 100000;
  double alpha = 0.8;
  double c0 = 1.0;
  /// Grid of t values; must lie in (c0, n^(1/(1+alpha))).
  std::vector<double> t_grid;
  double gamma = 0.5;
  double tau = 1.4;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  /// Window factor; 0 selects ln(ln(2+n)).
  double omega = 0.0;
  /// Frequency the max-weight window event must reach.
  double window_threshold = 0.9;
};

/// Rows: max_weight.window, then per t weight_sum.sandwich.lower/.upper,
/// weight_sum.monte_carlo and weight_sum.deviation.
std::vector<BoundReport> check_weight_sums(const WeightSumConfig& cfg);

/// Closed-form P(T/omega' < max Z <= T) for n i.i.d. Pareto weights, with the
/// window [n^(1/(1+a))/omega, n^(1/(1+a)) omega].
double max_weight_window_probability(std::uint64_t n, double alpha, double c0,
                                     double omega);

/// (alpha/(1+alpha)) (t^alpha / n) E L_n(t) under the pure Pareto law with
/// truncation at upper.
double weight_sum_sandwich(std::uint64_t n, double alpha, double c0, double t,
                           double upper);

// --- degree tail -----------------------------------------------------------

struct DegreeTail {
  /// (degree d, fraction of vertices with degree >= d).
  std::vector<std::pair<std::uint64_t, double>> survival;
  /// Least-squares slope of ln survival on ln d over the fit decade.
  std::optional<double> slope;
  std::uint64_t fit_low = 0;
  std::uint64_t fit_high = 0;
  std::uint64_t max_degree = 0;
};

std::vector<std::uint64_t> degrees(const BipartiteIncidence& inc);

/// Survival on a grid of 8 points per decade. The fit uses the decade
/// [lo, 10 lo] with lo = sqrt(max_degree / 10), geometrically centred in
/// [1, max_degree].
DegreeTail degree_tail_report(const BipartiteIncidence& inc);

// --- serialization ---------------------------------------------------------

/// bound_id,params,lhs,rhs,slack,status,estimate,interval_low,interval_high,
/// samples,diagnostic
std::string bound_reports_to_csv(std::span<const BoundReport> reports);
std::string bound_reports_to_json(std::span<const BoundReport> reports);

/// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace rig
