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

#include "rig/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rig/random.hpp"
#include "rig/types.hpp"

namespace rig {
namespace {

using Params = std::vector<std::pair<std::string, double>>;

double as_double(std::uint64_t x) { return static_cast<double>(x); }

BoundReport exact_row(std::string id, Params params, double lhs, double rhs) {
  BoundReport r;
  r.bound_id = std::move(id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  const double tol = kExactTolerance * std::max(1.0, std::fabs(rhs));
  r.status = lhs <= rhs + tol ? BoundStatus::kPass : BoundStatus::kFail;
  return r;
}

BoundReport skipped_row(std::string id, Params params, std::string why) {
  BoundReport r;
  r.bound_id = std::move(id);
  r.params = std::move(params);
  r.status = BoundStatus::kSkipped;
  r.diagnostic = std::move(why);
  return r;
}

void attach_interval(BoundReport& r, std::uint64_t successes, std::uint64_t trials) {
  const WilsonInterval w = wilson_interval(successes, trials);
  r.estimate = trials == 0 ? 0.0 : as_double(successes) / as_double(trials);
  r.interval_low = w.low;
  r.interval_high = w.high;
  r.samples = trials;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string optional_field(const std::optional<T>& x) {
  if (!x) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return format_double(*x);
  } else {
    return std::to_string(*x);
  }
}

}  // namespace

const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::kPass: return "pass";
    case BoundStatus::kFail: return "fail";
    case BoundStatus::kVacuous: return "vacuous";
    case BoundStatus::kSkipped: return "skipped";
    case BoundStatus::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

bool BoundReport::satisfied() const {
  return status == BoundStatus::kPass || status == BoundStatus::kVacuous;
}

double BoundReport::param(const std::string& name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw std::out_of_range("no parameter " + name + " in " + bound_id);
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z) {
  if (trials == 0) return {0.0, 1.0};
  const double nn = as_double(trials);
  const double p = as_double(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = (p + z2 / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double monte_carlo_resolution(std::uint64_t trials, double z) {
  return z * z / (as_double(trials) + z * z);
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  const double ratio = hi / lo;
  for (std::size_t i = 1; i <= count; ++i) {
    out.push_back(lo * std::pow(ratio, as_double(i) / as_double(count + 1)));
  }
  return out;
}

std::vector<GridPoint> intersection_grid(std::uint64_t max_jk,
                                         std::span<const std::uint64_t> ms) {
  std::vector<GridPoint> grid;
  for (std::uint64_t m : ms) {
    for (std::uint64_t j = 0; j <= max_jk; ++j) {
      for (std::uint64_t k = 0; k <= max_jk; ++k) grid.push_back({j, k, m});
    }
  }
  return grid;
}

std::vector<BoundReport> check_intersection_bounds(std::span<const GridPoint> grid) {
  std::vector<BoundReport> out;
  for (const GridPoint& g : grid) {
    const Params base{{"j", as_double(g.j)}, {"k", as_double(g.k)}, {"m", as_double(g.m)}};
    if (g.m == 0 || g.j > g.m || g.k > g.m) {
      out.push_back(skipped_row("intersection", base, "needs j, k <= m and m >= 1"));
      continue;
    }
    const HypergeomParams hp{g.j, g.k, g.m};
    const double m = as_double(g.m);
    const std::uint64_t jk = g.j * g.k;
    const double lambda = as_double(jk) / m;
    const double p0 = no_intersection_probability(hp);
    const double p1 = intersection_probability(hp);
    const double s = as_double(g.j + g.k) / m;

    if (g.j + g.k < g.m) {
      out.push_back(exact_row("no_intersection.lower", base,
                              1.0 - lambda / (1.0 - s), p0));
      out.push_back(exact_row("no_intersection.upper", base, p0,
                              1.0 - lambda + lambda * lambda));
    } else {
      out.push_back(skipped_row("no_intersection.lower", base, "needs j + k < m"));
      out.push_back(skipped_row("no_intersection.upper", base, "needs j + k < m"));
    }

    if (s > 0.0 && s < 1.0) {
      Params with_s = base;
      with_s.emplace_back("s", s);
      out.push_back(exact_row("intersection.lower", with_s, lambda - lambda * lambda, p1));
      out.push_back(exact_row("intersection.upper", with_s, p1,
                              lambda + 2.0 / (1.0 - s) * lambda * lambda));
    } else {
      out.push_back(skipped_row("intersection.lower", base, "needs 0 < (j+k)/m < 1"));
      out.push_back(skipped_row("intersection.upper", base, "needs 0 < (j+k)/m < 1"));
    }

    for (std::uint64_t t = 0; t <= std::min(g.j, g.k); ++t) {
      Params with_t = base;
      with_t.emplace_back("t", as_double(t));
      const double td = as_double(t);
      // H >= lambda + t  <=>  H >= ceil((jk + t m) / m), exactly in integers.
      const std::uint64_t up = (jk + t * g.m + g.m - 1) / g.m;
      const double upper_rhs =
          t == 0 ? 1.0 : std::exp(-td * td / (2.0 * (lambda + td / 3.0)));
      out.push_back(exact_row("tail.upper", with_t,
                              hypergeom_sf(hp, static_cast<std::int64_t>(up)), upper_rhs));

      double lower_lhs = 0.0;
      if (jk >= t * g.m) {
        lower_lhs = hypergeom_cdf(hp, static_cast<std::int64_t>((jk - t * g.m) / g.m));
      }
      double lower_rhs = 1.0;
      if (t > 0) lower_rhs = lambda == 0.0 ? 0.0 : std::exp(-td * td / (2.0 * lambda));
      out.push_back(exact_row("tail.lower", with_t, lower_lhs, lower_rhs));
    }

    out.push_back(exact_row("no_intersection.exp", base, p0,
                            std::exp(-as_double(jk) / (2.0 * m))));
  }
  return out;
}

BoundReport check_union_coverage(const UnionCoverageConfig& cfg) {
  if (!(cfg.gamma1 > 0.0 && cfg.gamma1 < cfg.gamma2 && cfg.gamma2 < 1.0)) {
    throw ConfigError("union coverage needs 0 < gamma1 < gamma2 < 1");
  }
  if (cfg.n < 2) throw ConfigError("union coverage needs n >= 2");
  if (cfg.sizes.empty()) throw ConfigError("union coverage needs at least one set");
  if (cfg.trials == 0) throw ConfigError("union coverage needs trials >= 1");
  std::uint64_t total = 0;
  for (std::uint64_t z : cfg.sizes) total += z;
  if (as_double(total) > cfg.gamma1 * as_double(cfg.m)) {
    throw ConfigError("union coverage needs sum of sizes <= gamma1 * m");
  }
  const double gap = cfg.gamma2 - cfg.gamma1;
  const double floor_size =
      6.0 * cfg.gamma2 / (gap * gap) * std::log(as_double(cfg.n));
  if (floor_size < 1.0) {
    throw ConfigError("union coverage needs 6 gamma2 (gamma2-gamma1)^-2 ln n >= 1");
  }
  for (std::uint64_t z : cfg.sizes) {
    if (as_double(z) < floor_size) {
      throw ConfigError("union coverage needs every size >= 6 gamma2 (gamma2-gamma1)^-2 ln n = " +
                        format_double(floor_size));
    }
  }

  Rng rng(cfg.seed);
  const double need = (1.0 - cfg.gamma2) * as_double(total);
  std::uint64_t hits = 0;
  std::vector<Attribute> pool;
  pool.reserve(total);
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    pool.clear();
    for (std::uint64_t z : cfg.sizes) {
      const auto s = sample_subset(cfg.m, z, rng);
      pool.insert(pool.end(), s.begin(), s.end());
    }
    std::sort(pool.begin(), pool.end());
    const auto distinct = std::unique(pool.begin(), pool.end()) - pool.begin();
    if (as_double(static_cast<std::uint64_t>(distinct)) >= need) ++hits;
  }

  BoundReport r;
  r.bound_id = "union_coverage";
  const auto sets = cfg.sizes.size();
  r.params = {{"m", as_double(cfg.m)},           {"n", as_double(cfg.n)},
              {"gamma1", cfg.gamma1},            {"gamma2", cfg.gamma2},
              {"r", as_double(sets)},            {"total", as_double(total)}};
  const double nd = as_double(cfg.n);
  r.lhs = 1.0 - as_double(sets) / (nd * nd * nd);
  attach_interval(r, hits, cfg.trials);
  r.rhs = *r.estimate;
  r.slack = r.rhs - r.lhs;
  r.status = *r.interval_low >= r.lhs - monte_carlo_resolution(cfg.trials)
                 ? BoundStatus::kPass
                 : BoundStatus::kFail;
  return r;
}

double overlap_bound(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const double ad = as_double(a);
  const double bd = as_double(b);
  const bool heavy = ad > bd / 4.0 && a * b <= m && b >= 3;
  return std::exp(-bd / 8.0) * (1.0 + (heavy ? 4.0 * as_double(m) / (ad * bd) : 0.0));
}

double overlap_conditional_probability(std::uint64_t a, std::uint64_t b,
                                       std::uint64_t d, std::uint64_t m) {
  if (!(a >= 1 && a <= d && d <= m && b >= 1 && b <= m)) {
    throw ConfigError("overlap needs 1 <= a <= d <= m and 1 <= b <= m");
  }
  const HypergeomParams hit{b, a, m};
  const double denom = intersection_probability(hit);
  if (denom == 0.0) return 0.0;
  const auto need = static_cast<std::int64_t>((b + 1) / 2);
  double num = 0.0;
  for (std::uint64_t j = std::max<std::uint64_t>(1, hit.support_min());
       j <= hit.support_max(); ++j) {
    const HypergeomParams rest{b - j, d - a, m - a};
    num += hypergeom_pmf(hit, static_cast<std::int64_t>(j)) *
           hypergeom_sf(rest, need - static_cast<std::int64_t>(j));
  }
  return std::min(1.0, num / denom);
}

BoundReport check_overlap_concentration(const OverlapConfig& cfg) {
  if (cfg.trials == 0) throw ConfigError("overlap needs trials >= 1");
  const double exact = overlap_conditional_probability(cfg.a, cfg.b, cfg.d, cfg.m);
  const double bound = overlap_bound(cfg.a, cfg.b, cfg.m);

  Rng rng(cfg.seed);
  const std::uint64_t cap = 10 * cfg.trials;
  const auto need = (cfg.b + 1) / 2;
  std::uint64_t accepted = 0;
  std::uint64_t hits = 0;
  for (std::uint64_t attempt = 0; attempt < cap && accepted < cfg.trials; ++attempt) {
    const auto s = sample_subset(cfg.m, cfg.b, rng);
    // S_a = {0..a-1} within S_d = {0..d-1}; s is sorted.
    const auto in_a = std::lower_bound(s.begin(), s.end(), cfg.a) - s.begin();
    if (in_a == 0) continue;
    ++accepted;
    const auto in_d = std::lower_bound(s.begin(), s.end(), cfg.d) - s.begin();
    if (static_cast<std::uint64_t>(in_d) >= need) ++hits;
  }

  BoundReport r;
  r.bound_id = "overlap_concentration";
  r.params = {{"a", as_double(cfg.a)}, {"b", as_double(cfg.b)}, {"d", as_double(cfg.d)},
              {"m", as_double(cfg.m)}, {"exact", exact}};
  attach_interval(r, hits, accepted);
  r.lhs = *r.estimate;
  r.rhs = bound;
  r.slack = bound - r.lhs;
  if (100 * cfg.d > cfg.m) {
    r.status = BoundStatus::kSkipped;
    r.diagnostic = "outside the domain d <= m/100";
  } else if (cfg.b < 4) {
    r.status = BoundStatus::kSkipped;
    r.diagnostic = "outside the domain b >= 4 (needs floor(b/4) >= 1)";
  } else if (bound >= 1.0) {
    r.status = BoundStatus::kVacuous;
    r.diagnostic = "bound >= 1";
  } else if (accepted < 100) {
    r.status = BoundStatus::kInconclusive;
    r.diagnostic = "only " + std::to_string(accepted) + " conditioned samples";
  } else {
    r.status = *r.interval_high <= bound + monte_carlo_resolution(accepted)
                   ? BoundStatus::kPass
                   : BoundStatus::kFail;
  }
  return r;
}

double max_weight_window_probability(std::uint64_t n, double alpha, double c0,
                                     double omega) {
  const TailLaw law(alpha, c0);
  const double base = std::pow(as_double(n), 1.0 / (1.0 + alpha));
  const auto below = [&](double x) {
    const double q = law.survival(x);
    return q >= 1.0 ? 0.0 : std::exp(as_double(n) * std::log1p(-q));
  };
  return below(base * omega) - below(base / omega);
}

double weight_sum_sandwich(std::uint64_t n, double alpha, double c0, double t,
                           double upper) {
  const TailLaw law(alpha, c0);
  const double expected = as_double(n) * law.truncated_mean(t, upper);
  return alpha / (1.0 + alpha) * std::pow(t, alpha) / as_double(n) * expected;
}

std::vector<BoundReport> check_weight_sums(const WeightSumConfig& cfg) {
  if (cfg.n < 2) throw ConfigError("weight sums need n >= 2");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  if (!(cfg.c0 > 0.0)) throw ConfigError("c0 must be positive");
  if (!(cfg.tau > 1.0 && cfg.tau < 1.0 + cfg.alpha)) {
    throw ConfigError("weight sums need 1 < tau < 1 + alpha");
  }
  if (!(cfg.gamma > 0.0)) throw ConfigError("weight sums need gamma > 0");
  if (cfg.trials < 2) throw ConfigError("weight sums need at least 2 trials");

  const TailLaw law(cfg.alpha, cfg.c0);
  const double nd = as_double(cfg.n);
  const double omega = cfg.omega > 0.0 ? cfg.omega : loglog_scale(cfg.n);
  const double base = std::pow(nd, 1.0 / (1.0 + cfg.alpha));
  const double upper = base * omega;
  const double c12 = std::pow(cfg.c0, 1.0 + cfg.alpha);

  std::vector<double> grid;
  std::vector<BoundReport> skipped;
  for (double t : cfg.t_grid) {
    if (t > cfg.c0 && t < base) {
      grid.push_back(t);
    } else {
      skipped.push_back(skipped_row("weight_sum", {{"t", t}},
                                    "needs c0 < t < n^(1/(1+alpha))"));
    }
  }

  // Per-trial sums, trial-major.
  std::vector<double> sums(cfg.trials * grid.size(), 0.0);
  std::uint64_t window_hits = 0;
  Rng rng(cfg.seed);
  std::vector<double> z(cfg.n);
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    double zmax = 0.0;
    for (double& x : z) {
      x = std::max(cfg.c0, law.quantile(uniform_half_open(rng)));
      zmax = std::max(zmax, x);
    }
    if (base / omega < zmax && zmax <= upper) ++window_hits;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      double acc = 0.0;
      for (double x : z) {
        if (x > grid[g] && x <= upper) acc += x;
      }
      sums[trial * grid.size() + g] = acc;
    }
  }

  std::vector<BoundReport> out;
  {
    BoundReport r;
    r.bound_id = "max_weight.window";
    r.params = {{"n", nd}, {"alpha", cfg.alpha}, {"c0", cfg.c0}, {"omega", omega},
                {"analytic", max_weight_window_probability(cfg.n, cfg.alpha, cfg.c0, omega)}};
    attach_interval(r, window_hits, cfg.trials);
    r.lhs = cfg.window_threshold;
    r.rhs = *r.estimate;
    r.slack = r.rhs - r.lhs;
    r.status = r.rhs >= r.lhs ? BoundStatus::kPass : BoundStatus::kFail;
    out.push_back(std::move(r));
  }

  const double c_star = 8.0 * c12 / ((1.0 + cfg.alpha - cfg.tau) * std::pow(c12, cfg.tau));
  const double trials_d = as_double(cfg.trials);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double t = grid[g];
    const Params p{{"n", nd}, {"alpha", cfg.alpha}, {"c0", cfg.c0}, {"t", t}};
    const double expected = nd * law.truncated_mean(t, upper);
    const double scale = cfg.alpha / (1.0 + cfg.alpha) * std::pow(t, cfg.alpha) / nd;
    const double analytic = scale * expected;
    out.push_back(exact_row("weight_sum.sandwich.lower", p, c12 / 2.0, analytic));
    out.push_back(exact_row("weight_sum.sandwich.upper", p, analytic, c12));

    double mean = 0.0;
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
      mean += scale * sums[trial * grid.size() + g];
    }
    mean /= trials_d;
    double var = 0.0;
    std::uint64_t deviations = 0;
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
      const double sum = sums[trial * grid.size() + g];
      const double x = scale * sum - mean;
      var += x * x;
      if (std::fabs(sum - expected) > cfg.gamma * expected) ++deviations;
    }
    var /= trials_d - 1.0;
    const double sigma = std::sqrt(var / trials_d);
    {
      BoundReport r;
      r.bound_id = "weight_sum.monte_carlo";
      r.params = p;
      r.params.emplace_back("analytic", analytic);
      r.lhs = std::fabs(mean - analytic);
      r.rhs = 3.0 * sigma;
      r.slack = r.rhs - r.lhs;
      r.estimate = mean;
      r.samples = cfg.trials;
      r.status = r.lhs <= r.rhs ? BoundStatus::kPass : BoundStatus::kFail;
      out.push_back(std::move(r));
    }
    {
      BoundReport r;
      r.bound_id = "weight_sum.deviation";
      r.params = p;
      r.params.emplace_back("gamma", cfg.gamma);
      r.params.emplace_back("tau", cfg.tau);
      attach_interval(r, deviations, cfg.trials);
      r.lhs = *r.estimate;
      r.rhs = c_star * std::pow(cfg.gamma, -cfg.tau) * std::pow(nd, 1.0 - cfg.tau) *
              std::pow(t, (cfg.tau - 1.0) * (cfg.alpha + 1.0));
      r.slack = r.rhs - r.lhs;
      if (r.rhs >= 1.0) {
        r.status = BoundStatus::kVacuous;
        r.diagnostic = "bound >= 1";
      } else {
        r.status = *r.interval_high <= r.rhs + monte_carlo_resolution(cfg.trials)
                       ? BoundStatus::kPass
                       : BoundStatus::kFail;
      }
      out.push_back(std::move(r));
    }
  }
  out.insert(out.end(), skipped.begin(), skipped.end());
  return out;
}

std::vector<std::uint64_t> degrees(const BipartiteIncidence& inc) {
  const auto n = inc.n();
  std::vector<std::uint64_t> deg(n, 0);
  std::vector<Vertex> stamp(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex mark = v + 1;
    stamp[v] = mark;
    for (std::uint32_t slot : inc.slots(v)) {
      for (Vertex y : inc.slot_holders(slot)) {
        if (stamp[y] == mark) continue;
        stamp[y] = mark;
        ++deg[v];
      }
    }
  }
  return deg;
}

DegreeTail degree_tail_report(const BipartiteIncidence& inc) {
  DegreeTail out;
  const auto deg = degrees(inc);
  const double nd = as_double(inc.n());
  out.max_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());

  // count_at_least[d] via a histogram, d up to max degree.
  std::vector<std::uint64_t> hist(out.max_degree + 2, 0);
  for (auto d : deg) ++hist[d];
  std::vector<std::uint64_t> at_least(out.max_degree + 2, 0);
  for (std::uint64_t d = out.max_degree + 1; d-- > 0;) at_least[d] = at_least[d + 1] + hist[d];

  std::vector<std::uint64_t> grid;
  const std::uint64_t top = std::max<std::uint64_t>(1, out.max_degree);
  for (int i = 0;; ++i) {
    const auto d = static_cast<std::uint64_t>(std::llround(std::pow(10.0, i / 8.0)));
    if (d > top) break;
    if (grid.empty() || grid.back() != d) grid.push_back(d);
  }
  for (auto d : grid) {
    const double s = d <= out.max_degree && nd > 0 ? as_double(at_least[d]) / nd : 0.0;
    out.survival.emplace_back(d, s);
  }

  const double lo = std::max(1.0, std::sqrt(as_double(out.max_degree) / 10.0));
  out.fit_low = static_cast<std::uint64_t>(std::ceil(lo));
  out.fit_high = static_cast<std::uint64_t>(std::floor(10.0 * lo));
  std::vector<std::pair<double, double>> pts;
  for (const auto& [d, s] : out.survival) {
    if (d >= out.fit_low && d <= out.fit_high && s > 0.0) {
      pts.emplace_back(std::log(as_double(d)), std::log(s));
    }
  }
  if (pts.size() >= 2) {
    double mx = 0.0;
    double my = 0.0;
    for (const auto& [x, y] : pts) {
      mx += x;
      my += y;
    }
    mx /= as_double(pts.size());
    my /= as_double(pts.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& [x, y] : pts) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    if (sxx > 0.0) out.slope = sxy / sxx;
  }
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string bound_reports_to_csv(std::span<const BoundReport> reports) {
  std::ostringstream os;
  os << "bound_id,params,lhs,rhs,slack,status,estimate,interval_low,interval_high,"
        "samples,diagnostic\n";
  for (const BoundReport& r : reports) {
    std::string params;
    for (const auto& [key, value] : r.params) {
      if (!params.empty()) params += ';';
      params += key + "=" + format_double(value);
    }
    os << csv_field(r.bound_id) << ',' << csv_field(params) << ','
       << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
       << format_double(r.slack) << ',' << to_string(r.status) << ','
       << optional_field(r.estimate) << ',' << optional_field(r.interval_low) << ','
       << optional_field(r.interval_high) << ',' << optional_field(r.samples) << ','
       << csv_field(r.diagnostic) << '\n';
  }
  return os.str();
}

std::string bound_reports_to_json(std::span<const BoundReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BoundReport& r : reports) {
    nlohmann::ordered_json row;
    row["bound_id"] = r.bound_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    row["params"] = std::move(params);
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["slack"] = r.slack;
    row["status"] = to_string(r.status);
    if (r.estimate) row["estimate"] = *r.estimate;
    if (r.interval_low) row["interval_low"] = *r.interval_low;
    if (r.interval_high) row["interval_high"] = *r.interval_high;
    if (r.samples) row["samples"] = *r.samples;
    if (!r.diagnostic.empty()) row["diagnostic"] = r.diagnostic;
    arr.push_back(std::move(row));
  }
  return arr.dump(1) + "\n";
}

}  // namespace rig
