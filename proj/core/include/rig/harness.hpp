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

// Experiment configuration, trial orchestration and reports.
//
// Trial t at ladder size n generates its graph from the stream
// stream_seed(seed, n, t); pair and vertex sampling inside the trial uses
// stream_seed(mix64(seed) ^ kAnalysisSalt, n, t). Reports never contain
// timings or thread counts, so a report is a pure function of the config.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rig/graph_io.hpp"
#include "rig/graphgen.hpp"
#include "rig/hubnav.hpp"
#include "rig/model.hpp"
#include "rig/verify.hpp"

namespace rig {

inline constexpr std::uint64_t kAnalysisSalt = 0x5a17b0a7d15ca11fULL;

struct OverlapPoint {
  std::uint64_t a, b, d, m;
};

/// Grids of the verify-lemmas subcommand.
struct VerifyConfig {
  std::uint64_t intersection_max_jk = 30;
  std::vector<std::uint64_t> intersection_m{100, 300, 1000};

  std::uint64_t coverage_m = 10000;
  std::uint64_t coverage_n = 100;
  double coverage_gamma1 = 0.1;
  double coverage_gamma2 = 0.5;
  /// Empty selects r = 10 sets of size m * gamma1 / r.
  std::vector<std::uint64_t> coverage_sizes;
  std::uint64_t coverage_trials = 10000;

  std::vector<OverlapPoint> overlap_points{
      {40, 16, 100, 10000}, {2, 16, 100, 10000}, {1, 8, 50, 5000}, {8, 1, 20, 2000}};
  std::uint64_t overlap_trials = 100000;

  std::uint64_t weight_n = 100000;
  std::vector<double> weight_alphas{0.5, 0.8};
  std::size_t weight_grid_points = 10;
  double weight_gamma = 0.5;
  /// Empty selects tau = 1 + alpha / 2 per alpha.
  std::optional<double> weight_tau;
  std::uint64_t weight_trials = 100;
  double window_threshold = 0.9;
};

struct ExperimentConfig {
  std::vector<std::uint64_t> ladder{2000};
  double alpha = 0.8;
  double c0 = 1.0;
  /// Explicit attribute count; default_attribute_count(n) when absent.
  std::optional<std::uint64_t> m;
  double epsilon = 1.0;
  std::uint32_t pairs_per_trial = 50;
  std::uint32_t hub_samples_per_trial = 50;
  std::uint32_t trials = 4;
  std::uint64_t seed = 1;
  /// Ladder anchor in place of 100 + c0.
  std::optional<double> ladder_anchor;
  bool certificates = true;
  std::filesystem::path out_dir = "rig-out";
  unsigned threads = 1;
  /// Report format, "json" or "csv".
  std::string format = "json";
  /// Graph file format of run_generate, "binary" or "json".
  std::string graph_format = "binary";
  VerifyConfig verify;

  /// Throws ConfigError naming the first violated constraint.
  void validate() const;
  std::uint64_t m_for(std::uint64_t n) const;
  ModelParams params_for(std::uint64_t n) const;
  double anchor() const { return ladder_anchor.value_or(100.0 + c0); }
};

/// Parses a JSON config; unknown keys are rejected. Throws ConfigError.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Bound of the pair distance: (2 + eps) l2n / ln(1/alpha).
double pair_distance_bound(std::uint64_t n, double alpha, double epsilon);
/// Bound of the distance to the maximal vertex: (1 + eps) l2n / ln(1/alpha).
double hub_distance_bound(std::uint64_t n, double alpha, double epsilon);

struct PairRecord {
  Vertex v1 = 0;
  Vertex v2 = 0;
  Hops exact = kUnreachable;
  bool passes = false;
  std::optional<Certificate> certificate;
};

struct DistanceFragment {
  /// "ok", "empty" (giant smaller than 2) or "skipped".
  std::string status = "skipped";
  double bound = 0.0;
  std::vector<PairRecord> pairs;
  std::uint64_t pass_count = 0;
  std::uint64_t denominator = 0;
  /// The labeled pair (vertex 0, vertex 1).
  bool labeled_both_in_giant = false;
  Hops labeled_exact = kUnreachable;
  bool labeled_passes = false;
  std::uint64_t certificate_failures = 0;
  /// Certificates shorter than the exact distance or with a non-edge step.
  std::uint64_t certificate_violations = 0;
};

struct HubRecord {
  Vertex v = 0;
  Hops exact = kUnreachable;
  bool passes = false;
  HubRoute route;
};

struct HubFragment {
  /// "ok", "degenerate" (k* = 0 and empty hub core) or "skipped".
  std::string status = "skipped";
  bool degenerate_ladder = false;
  double bound = 0.0;
  std::vector<HubRecord> records;
  std::uint64_t pass_count = 0;
  std::uint64_t denominator = 0;
  std::uint64_t escape_successes = 0;
  std::uint64_t climb_successes = 0;
  std::uint64_t climb_attempts = 0;
  /// Successful climbs longer than the ladder depth.
  std::uint64_t climb_over_depth = 0;
  std::uint64_t certificate_violations = 0;
};

struct TrialReport {
  std::uint64_t n = 0;
  std::uint32_t trial = 0;
  std::uint64_t m = 0;
  std::uint64_t stream_seed = 0;
  /// Non-empty when the trial failed; the other fields are then partial.
  std::string error;
  std::uint64_t incidences = 0;
  std::uint64_t components = 0;
  std::uint64_t giant_size = 0;
  double giant_fraction = 0.0;
  Vertex u_max = 0;
  std::uint64_t u_max_size = 0;
  bool u_max_in_giant = false;
  std::uint64_t hub_core_size = 0;
  bool hub_core_in_giant = false;
  bool hub_core_over_threshold = false;
  std::uint32_t k_star = 0;
  std::uint64_t top_layer_size = 0;
  DistanceFragment distances;
  HubFragment hubpath;
};

struct Quantiles {
  std::uint64_t count = 0;
  double mean = 0.0;
  Hops min = 0, q25 = 0, median = 0, q75 = 0, q90 = 0, max = 0;
};

/// Nearest-rank quantiles of the finite values.
Quantiles summarize(std::vector<Hops> values);

struct LadderAggregate {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double l2n = 0.0;
  std::uint32_t k_star = 0;
  bool degenerate_ladder = false;
  std::uint64_t trials = 0;
  std::uint64_t failed_trials = 0;
  double rho_hat = 0.0;
  double giant_fraction_mean = 0.0;
  double giant_fraction_max = 0.0;
  double u_max_in_giant_rate = 0.0;
  double hub_core_in_giant_rate = 0.0;
  double hub_core_over_threshold_rate = 0.0;
  double hub_core_expected = 0.0;
  double hub_core_size_mean = 0.0;
  double pair_bound = 0.0;
  double hub_bound = 0.0;
  std::uint64_t pair_pass = 0, pair_denominator = 0;
  std::uint64_t labeled_pass = 0, labeled_denominator = 0;
  std::uint64_t hub_pass = 0, hub_denominator = 0;
  std::uint64_t escape_successes = 0, climb_successes = 0, climb_attempts = 0;
  std::uint64_t certificate_violations = 0, climb_over_depth = 0;
  Quantiles pair_distance;
  Quantiles hub_distance;
  Quantiles pair_certificate;
  Quantiles hub_certificate;
  /// mean pair distance / l2n.
  double pair_distance_ratio = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialReport> trials;
  std::vector<LadderAggregate> aggregates;
};

struct AnalysisOptions {
  bool distances = true;
  bool hubpath = true;
};

/// Full analysis of one generated graph.
TrialReport analyze_graph(const ExperimentConfig& cfg, const VertexWeights& weights,
                          const BipartiteIncidence& inc, std::uint64_t n,
                          std::uint32_t trial, const AnalysisOptions& options);

/// Generates and analyzes every (n, trial) of the ladder on cfg.threads
/// workers. A failing trial is recorded and the run continues.
ExperimentReport run_trials(const ExperimentConfig& cfg, const AnalysisOptions& options);

std::vector<LadderAggregate> aggregate(const ExperimentConfig& cfg,
                                       const std::vector<TrialReport>& trials);

ExperimentReport run_experiment(const ExperimentConfig& cfg);
ExperimentReport run_distances(const ExperimentConfig& cfg);
ExperimentReport run_hubpath(const ExperimentConfig& cfg);

/// Analysis of a loaded graph artifact; weights are rebuilt from set sizes.
ExperimentReport run_on_graph(const ExperimentConfig& cfg, const GraphArtifact& graph,
                              const AnalysisOptions& options);

struct GeneratedFile {
  std::filesystem::path path;
  std::filesystem::path metadata;
  std::uint64_t checksum = 0;
  std::uint64_t n = 0;
  std::uint32_t trial = 0;
};

/// One graph file plus a metadata sidecar per (n, trial).
std::vector<GeneratedFile> run_generate(const ExperimentConfig& cfg);

struct VerifyOutcome {
  std::vector<BoundReport> intersection;
  std::vector<BoundReport> coverage;
  std::vector<BoundReport> overlap;
  std::vector<BoundReport> weight_sums;

  /// No row failed. Skipped, vacuous and inconclusive rows do not count.
  bool all_passed() const;
};

VerifyOutcome run_verify(const ExperimentConfig& cfg);

/// Writes <suite>.json or <suite>.csv per suite into dir.
void write_verify_outcome(const VerifyOutcome& outcome, const std::filesystem::path& dir,
                          const std::string& format);

/// Components, degree tail and hub layers of one graph as JSON.
std::string analyze_to_json(const ExperimentConfig& cfg, const GraphArtifact& graph);

std::string report_to_json(const ExperimentReport& report);
std::string trials_to_csv(const ExperimentReport& report);
std::string aggregates_to_csv(const ExperimentReport& report);

/// Writes report JSON (or trials/aggregates CSV) under dir with the given stem.
void write_report(const ExperimentReport& report, const std::filesystem::path& dir,
                  const std::string& stem, const std::string& format);

}  // namespace rig
