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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Report files go under the directory given as the first
// argument (default ./acceptance-out).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rig/graph_io.hpp"
#include "rig/graphgen.hpp"
#include "rig/graphops.hpp"
#include "rig/harness.hpp"
#include "rig/hubnav.hpp"
#include "rig/model.hpp"
#include "rig/random.hpp"
#include "rig/verify.hpp"

using namespace rig;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

fs::path g_out = "acceptance-out";

// --- 1 ------------------------------------------------------------------------

Verdict intersection_suite() {
  const auto start = Clock::now();
  const std::vector<std::uint64_t> ms{100, 300, 1000};
  const auto grid = intersection_grid(30, ms);
  const auto rows = check_intersection_bounds(grid);
  std::size_t pass = 0, fail = 0, skipped = 0;
  double worst = INFINITY;
  for (const auto& r : rows) {
    if (r.status == BoundStatus::kPass) {
      ++pass;
      worst = std::min(worst, r.slack);
    }
    fail += r.status == BoundStatus::kFail;
    skipped += r.status == BoundStatus::kSkipped;
  }
  const double secs = seconds_since(start);
  return {fail == 0 && pass > 0 && secs < 60.0,
          std::to_string(pass) + " rows hold, " + std::to_string(fail) + " violations, " +
              std::to_string(skipped) + " outside side conditions, min slack " + fmt(worst) +
              ", " + fmt(secs, 3) + " s"};
}

// --- 2 ------------------------------------------------------------------------

Verdict sampler_tail() {
  const auto start = Clock::now();
  std::size_t bad = 0;
  double worst = 0.0;
  for (double alpha : {0.5, 0.8}) {
    ModelParams p;
    p.n = 1000000;
    p.m = 1000000;
    p.alpha = alpha;
    p.c0 = 1.0;
    Rng rng = make_stream(2026, p.n, alpha == 0.5 ? 0 : 1);
    const VertexWeights w = sample_tilde_weights(p, rng);
    std::vector<double> z = w.tilde_z;
    std::sort(z.begin(), z.end());
    for (double t : geometric_grid(1.0, 100.0, 20)) {
      const auto above = static_cast<double>(z.end() - std::upper_bound(z.begin(), z.end(), t));
      const double prob = std::pow(1.0 / t, 1.0 + alpha);
      const double sigma = std::sqrt(prob * (1.0 - prob) / double(z.size()));
      const double dev = std::abs(above / double(z.size()) - prob) / sigma;
      worst = std::max(worst, dev);
      bad += dev > 3.0;
    }
  }
  const double secs = seconds_since(start);
  return {bad == 0 && secs < 10.0, "40 grid points, " + std::to_string(bad) +
                                       " beyond 3 sigma, worst " + fmt(worst, 3) + " sigma, " +
                                       fmt(secs, 3) + " s"};
}

// --- 3 ------------------------------------------------------------------------

Verdict oracle_equivalence() {
  std::size_t mismatches = 0;
  std::size_t pairs = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    ModelParams p;
    p.n = 200;
    p.m = 5000;
    p.alpha = 0.8;
    p.c0 = 1.0;
    Rng rng = make_stream(seed, p.n, 0);
    const auto g = generate(p, rng);
    const auto sets = oracle::sets_of(g.incidence);
    const auto adj = oracle::adjacency(sets);
    mismatches += components(g.incidence).label != oracle::bfs_labels(adj);
    const auto fw = oracle::floyd_warshall(adj);
    BfsWorkspace ws(g.incidence);
    Rng pick(mix64(seed));
    for (int i = 0; i < 50; ++i) {
      const auto u = static_cast<Vertex>(uniform_below(pick, p.n));
      const auto v = static_cast<Vertex>(uniform_below(pick, p.n));
      ++pairs;
      mismatches += ws.distance(u, v) != fw[u][v];
      mismatches += bfs_distance(g.incidence, u, v).hops != fw[u][v];
    }
    for (Vertex u = 0; u < p.n; ++u) {
      std::vector<Vertex> row;
      for (Vertex v = 0; v < p.n; ++v) {
        if (adj[u][v]) row.push_back(v);
      }
      mismatches += neighbors(g.incidence, u) != row;
    }
  }
  return {mismatches == 0, "25 instances, " + std::to_string(pairs) + " pairs, " +
                               std::to_string(mismatches) + " mismatches"};
}

// --- 4 ------------------------------------------------------------------------

Verdict threshold_algebra() {
  std::size_t checks = 0, bad = 0;
  for (std::uint64_t n = 100; n <= 100000000; n *= 10) {
    for (double alpha : {0.3, 0.5, 0.8}) {
      for (double c0 : {1.0, 2.0}) {
        const auto th = thresholds(n, alpha, c0);
        const double target = std::pow(th.l2n, 1.0 - alpha);
        ++checks;
        bad += std::abs(th.t0 * th.level(1) / double(n) - target) > 1e-9 * target;
        for (std::uint32_t k = 2; k <= std::max<std::uint32_t>(th.k_star, 2); ++k) {
          ++checks;
          const double v = th.level(k) * std::pow(th.level(k - 1), -alpha);
          bad += std::abs(v - target) > 1e-9 * target;
        }
        ++checks;
        bad += double(th.k_star) > th.l2n / std::log(1.0 / alpha);
        std::uint32_t scan = 0;
        for (std::uint32_t k = 1; k < 64; ++k) {
          if (std::pow(double(n), std::pow(alpha, k) / (1.0 + alpha)) >= 100.0 + c0) scan = k;
        }
        ++checks;
        bad += th.k_star != scan;
        if (th.k_star >= 1) {
          const double top = th.t[th.k_star - 1];
          checks += 2;
          bad += !(100.0 * th.l2n < top);
          bad += !(top < std::pow(100.0 + c0, 1.0 / alpha) * th.l2n);
        }
      }
    }
  }
  return {bad == 0, std::to_string(checks) + " checks, " + std::to_string(bad) + " violations"};
}

// --- 5 and 6 ------------------------------------------------------------------

struct GiantRuns {
  ExperimentReport calibration;
  ExperimentReport runs;
};

ExperimentConfig giant_config(std::uint64_t seed) {
  ExperimentConfig c;
  c.ladder = {50000, 100000};
  c.alpha = 0.8;
  c.c0 = 1.0;
  c.trials = 20;
  c.seed = seed;
  c.threads = 0;
  return c;
}

const GiantRuns& giant_runs() {
  static const GiantRuns runs = [] {
    GiantRuns r;
    r.calibration = run_trials(giant_config(1), {false, false});
    r.runs = run_trials(giant_config(2), {false, false});
    write_report(r.runs, g_out, "giant", "json");
    return r;
  }();
  return runs;
}

Verdict giant_stability() {
  const auto start = Clock::now();
  const auto& g = giant_runs();
  double first_min = 1.0;
  for (const auto& t : g.calibration.trials) first_min = std::min(first_min, t.giant_fraction);
  const double rho = first_min - 0.02;
  std::size_t below = 0, failed = 0;
  for (const auto& t : g.runs.trials) {
    failed += !t.error.empty();
    below += !(t.giant_fraction > rho);
  }
  const auto& a = g.runs.aggregates;
  const double shift = std::abs(a[0].giant_fraction_mean - a[1].giant_fraction_mean);
  const double secs = seconds_since(start);
  return {below == 0 && failed == 0 && shift < 0.05 && secs < 600.0,
          "rho_hat " + fmt(rho) + " from seed-1 runs, " + std::to_string(below) +
              "/40 seed-2 runs at or below it, mean " + fmt(a[0].giant_fraction_mean) +
              " -> " + fmt(a[1].giant_fraction_mean) + " (shift " + fmt(shift, 3) + "), " +
              fmt(secs, 3) + " s"};
}

Verdict hub_membership() {
  const auto& g = giant_runs();
  std::size_t umax = 0, core = 0;
  for (const auto& t : g.runs.trials) {
    umax += t.u_max_in_giant;
    core += t.hub_core_in_giant;
  }
  const auto& a = g.runs.aggregates;
  const double f50k = a[0].hub_core_over_threshold_rate;
  const double f100k = a[1].hub_core_over_threshold_rate;
  return {umax >= 38 && core >= 36 && f100k <= f50k + 0.1,
          "u_max in C1 " + std::to_string(umax) + "/40, V0 in C1 " + std::to_string(core) +
              "/40, P(|V0| >= 2 E|V0|) " + fmt(f50k, 3) + " at 5e4 vs " + fmt(f100k, 3) +
              " at 1e5 (E|V0| " + fmt(a[0].hub_core_expected) + ", " +
              fmt(a[1].hub_core_expected) + ")"};
}

// --- 7 and 8 ------------------------------------------------------------------

ExperimentConfig distance_config() {
  ExperimentConfig c;
  c.ladder = {100000};
  c.alpha = 0.8;
  c.c0 = 1.0;
  c.epsilon = 1.0;
  c.trials = 1;
  c.pairs_per_trial = 200;
  c.hub_samples_per_trial = 200;
  c.seed = 1;
  return c;
}

ExperimentConfig growth_config() {
  ExperimentConfig c = distance_config();
  c.ladder = {1u << 14, 1u << 17};
  c.hub_samples_per_trial = 100;
  return c;
}

const std::vector<ExperimentReport>& distance_reports() {
  static const std::vector<ExperimentReport> reports = [] {
    std::vector<ExperimentReport> r{run_experiment(distance_config()),
                                    run_experiment(growth_config())};
    write_report(r[0], g_out, "distances_1e5", "json");
    write_report(r[1], g_out, "distances_growth", "json");
    return r;
  }();
  return reports;
}

Verdict distance_bounds() {
  const auto& r = distance_reports();
  const auto& a = r[0].aggregates.at(0);
  const double pair_rate = double(a.pair_pass) / double(std::max<std::uint64_t>(1, a.pair_denominator));
  const double hub_rate = double(a.hub_pass) / double(std::max<std::uint64_t>(1, a.hub_denominator));
  const auto& small = r[1].aggregates.at(0);
  const auto& large = r[1].aggregates.at(1);
  const long growth = long(large.pair_distance.median) - long(small.pair_distance.median);
  return {a.pair_denominator == 200 && a.hub_denominator == 200 && pair_rate >= 0.95 &&
              hub_rate >= 0.90 && growth <= 2,
          "pairs " + std::to_string(a.pair_pass) + "/" + std::to_string(a.pair_denominator) +
              " within " + fmt(a.pair_bound) + ", hub " + std::to_string(a.hub_pass) + "/" +
              std::to_string(a.hub_denominator) + " within " + fmt(a.hub_bound) +
              ", median pair distance " + std::to_string(small.pair_distance.median) +
              " at 2^14 and " + std::to_string(large.pair_distance.median) + " at 2^17"};
}

// Adjacency by explicit merge of the two sorted attribute lists.
bool sets_meet(const BipartiteIncidence& inc, Vertex u, Vertex v) {
  const auto a = inc.set(u);
  const auto b = inc.set(v);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}

struct CertificateAudit {
  std::size_t certificates = 0, climbs = 0, edges = 0;
  std::size_t short_certificates = 0, bad_edges = 0, bad_joins = 0, long_climbs = 0;

  void walk(const BipartiteIncidence& inc, const HubPath& p) {
    if (p.total_hops + 1 != p.vertices.size()) ++bad_joins;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
      ++edges;
      if (p.vertices[i - 1] == p.vertices[i] ||
          !sets_meet(inc, p.vertices[i - 1], p.vertices[i])) {
        ++bad_edges;
      }
    }
  }

  void climb(const BipartiteIncidence& inc, const HubPath& p, Vertex from, Vertex u_max,
             std::uint32_t depth) {
    ++climbs;
    walk(inc, p);
    if (p.vertices.front() != from || p.vertices.back() != u_max) ++bad_joins;
    if (p.total_hops > depth) ++long_climbs;
  }
};

Verdict certificate_soundness() {
  CertificateAudit audit;
  for (const auto& report : distance_reports()) {
    const ExperimentConfig& cfg = report.config;
    for (const auto& t : report.trials) {
      Rng rng = make_stream(cfg.seed, t.n, t.trial);
      const auto g = generate(cfg.params_for(t.n), rng);
      const auto& inc = g.incidence;
      const std::uint32_t depth = std::max<std::uint32_t>(t.k_star, 1);
      for (const auto& p : t.distances.pairs) {
        if (!p.certificate || !p.certificate->success()) continue;
        const auto& c = *p.certificate;
        ++audit.certificates;
        audit.short_certificates += *c.certificate_hops < p.exact;
        audit.walk(inc, *c.escape1);
        audit.walk(inc, *c.escape2);
        if (c.escape1->vertices.front() != p.v1 || c.escape2->vertices.front() != p.v2) {
          ++audit.bad_joins;
        }
        audit.climb(inc, *c.climb1, c.escape1->vertices.back(), t.u_max, depth);
        audit.climb(inc, *c.climb2, c.escape2->vertices.back(), t.u_max, depth);
        const Hops sum = c.escape1->total_hops + c.climb1->total_hops +
                         c.climb2->total_hops + c.escape2->total_hops;
        audit.bad_joins += sum != *c.certificate_hops;
      }
      for (const auto& h : t.hubpath.records) {
        if (!h.route.certificate_hops) continue;
        ++audit.certificates;
        audit.short_certificates += *h.route.certificate_hops < h.exact;
        audit.walk(inc, *h.route.escape);
        if (h.route.escape->vertices.front() != h.v) ++audit.bad_joins;
        audit.climb(inc, h.route.climb->path, h.route.escape->vertices.back(), t.u_max, depth);
      }
    }
  }
  const bool ok = audit.certificates > 0 && audit.short_certificates == 0 &&
                  audit.bad_edges == 0 && audit.bad_joins == 0 && audit.long_climbs == 0;
  return {ok, std::to_string(audit.certificates) + " certificates, " +
                  std::to_string(audit.edges) + " edges re-checked, " +
                  std::to_string(audit.short_certificates) + " shorter than exact, " +
                  std::to_string(audit.bad_edges) + " non-edges, " +
                  std::to_string(audit.bad_joins) + " broken joins, " +
                  std::to_string(audit.long_climbs) + "/" + std::to_string(audit.climbs) +
                  " climbs longer than max(k*, 1)"};
}

// --- 9 ------------------------------------------------------------------------

const VerifyOutcome& verify_outcome() {
  static const VerifyOutcome out = [] {
    ExperimentConfig cfg;
    const VerifyOutcome v = run_verify(cfg);
    write_verify_outcome(v, g_out / "verify", "json");
    return v;
  }();
  return out;
}

Verdict weight_sums() {
  const auto& rows = verify_outcome().weight_sums;
  std::size_t sandwich = 0, sandwich_bad = 0, mc = 0, mc_bad = 0;
  std::string window;
  bool window_ok = true;
  for (const auto& r : rows) {
    if (r.bound_id.starts_with("weight_sum.sandwich")) {
      ++sandwich;
      sandwich_bad += r.status != BoundStatus::kPass;
    } else if (r.bound_id == "weight_sum.monte_carlo") {
      ++mc;
      mc_bad += r.status != BoundStatus::kPass;
    } else if (r.bound_id == "max_weight.window") {
      window_ok = window_ok && r.status == BoundStatus::kPass;
      window += " alpha " + fmt(r.param("alpha"), 2) + ": " + fmt(*r.estimate, 3) +
                " (exact " + fmt(r.param("analytic"), 3) + ")";
    }
  }
  return {sandwich == 40 && sandwich_bad == 0 && mc == 20 && mc_bad == 0 && window_ok,
          "sandwich " + std::to_string(sandwich - sandwich_bad) + "/" +
              std::to_string(sandwich) + ", monte carlo " + std::to_string(mc - mc_bad) + "/" +
              std::to_string(mc) + ", window frequency vs 0.9:" + window};
}

// --- 10 -----------------------------------------------------------------------

bool same_tree(const fs::path& a, const fs::path& b, std::size_t& files) {
  bool same = true;
  for (const auto& entry : fs::recursive_directory_iterator(a)) {
    if (!entry.is_regular_file()) continue;
    const fs::path other = b / fs::relative(entry.path(), a);
    ++files;
    if (!fs::exists(other) || read_file(entry.path()) != read_file(other)) {
      std::cerr << "differs: " << other.string() << '\n';
      same = false;
    }
  }
  return same;
}

Verdict determinism() {
  const fs::path first = g_out / "rerun_a";
  const fs::path second = g_out / "rerun_b";
  fs::remove_all(first);
  fs::remove_all(second);
  for (const fs::path& dir : {first, second}) {
    const bool again = dir == second;
    ExperimentConfig cfg = growth_config();
    cfg.threads = again ? 0 : 1;
    const auto& growth = distance_reports()[1];
    const auto report = again ? run_experiment(cfg) : growth;
    write_report(report, dir, "distances_growth", "json");
    write_report(report, dir, "distances_growth", "csv");
    const VerifyOutcome v = again ? run_verify(ExperimentConfig{}) : verify_outcome();
    write_verify_outcome(v, dir / "verify", "json");
    write_verify_outcome(v, dir / "verify", "csv");
    ExperimentConfig gen;
    gen.ladder = {5000};
    gen.trials = 2;
    gen.out_dir = dir / "graphs";
    run_generate(gen);
    gen.graph_format = "json";
    run_generate(gen);
  }
  std::size_t files = 0;
  const bool same = same_tree(first, second, files);
  return {same && files > 0,
          std::to_string(files) + " report and graph files compared byte for byte"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_out = argv[1];
  fs::create_directories(g_out);
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"exact intersection inequalities", intersection_suite},
      {"sampler tail", sampler_tail},
      {"oracle equivalence", oracle_equivalence},
      {"threshold algebra", threshold_algebra},
      {"giant component stability", giant_stability},
      {"maximal vertex and hub core", hub_membership},
      {"distance bounds", distance_bounds},
      {"certificate soundness", certificate_soundness},
      {"weight-sum sandwich and window", weight_sums},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("criterion %2zu %s: %s  (%s)\n", i + 1, v.pass ? "PASS" : "FAIL",
                criteria[i].first, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
