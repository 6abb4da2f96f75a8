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

// rig: generate random intersection graphs and run the distance and bound
// experiments on them.
//
// Exit codes: 0 success, 1 invalid configuration, 2 runtime failure,
// 3 a verify-lemmas bound failed.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rig/graph_io.hpp"
#include "rig/harness.hpp"
#include "rig/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitVerify = 3;

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<unsigned> threads;
  std::optional<std::string> format;
  std::string graph;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "JSON experiment config");
  cmd->add_option("--seed", f.seed, "Master seed (overrides the config)");
  cmd->add_option("--out", f.out, "Output directory");
  cmd->add_option("--threads", f.threads, "Worker threads, 0 for all cores");
  cmd->add_option("--format", f.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

rig::ExperimentConfig resolve(const CommonFlags& f) {
  rig::ExperimentConfig cfg = f.config.empty() ? rig::ExperimentConfig{}
                                               : rig::load_config(f.config);
  if (f.seed) cfg.seed = *f.seed;
  if (f.out) cfg.out_dir = *f.out;
  if (f.threads) cfg.threads = *f.threads;
  if (f.format) cfg.format = *f.format;
  cfg.validate();
  return cfg;
}

void print_aggregates(const rig::ExperimentReport& r) {
  for (const auto& a : r.aggregates) {
    std::cout << "n=" << a.n << " m=" << a.m << " k*=" << a.k_star
              << " trials=" << a.trials << " failed=" << a.failed_trials
              << " rho_hat=" << a.rho_hat << " giant_mean=" << a.giant_fraction_mean;
    if (a.pair_denominator) {
      std::cout << " pair_pass=" << double(a.pair_pass) / double(a.pair_denominator)
                << " pair_median=" << a.pair_distance.median;
    }
    if (a.hub_denominator) {
      std::cout << " hub_pass=" << double(a.hub_pass) / double(a.hub_denominator)
                << " hub_median=" << a.hub_distance.median;
    }
    std::cout << '\n';
  }
}

int run_report(const CommonFlags& f, const std::string& stem, rig::AnalysisOptions options) {
  const rig::ExperimentConfig cfg = resolve(f);
  rig::ExperimentReport report;
  if (!f.graph.empty()) {
    report = rig::run_on_graph(cfg, rig::load_graph(f.graph), options);
  } else {
    report = rig::run_trials(cfg, options);
  }
  rig::write_report(report, cfg.out_dir, stem, cfg.format);
  print_aggregates(report);
  for (const auto& t : report.trials) {
    if (!t.error.empty()) {
      std::cerr << "trial n=" << t.n << " t=" << t.trial << " failed: " << t.error << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-law random intersection graphs: generation, distances, bounds"};
  app.require_subcommand(1);

  CommonFlags gen_f, ana_f, dist_f, hub_f, ver_f, exp_f;
  std::optional<std::string> graph_format;

  auto* gen = app.add_subcommand("generate", "Write one graph file per (n, trial)");
  add_common(gen, gen_f);
  gen->add_option("--graph-format", graph_format, "Graph file format")
      ->check(CLI::IsMember({"binary", "json"}));

  auto* ana = app.add_subcommand("analyze", "Components, degree tail and layers of a graph");
  add_common(ana, ana_f);
  ana->add_option("--graph", ana_f.graph, "Graph file")->required();

  auto* dist = app.add_subcommand("distances", "Pair distances against the pair bound");
  add_common(dist, dist_f);
  dist->add_option("--graph", dist_f.graph, "Analyze this graph instead of generating");

  auto* hub = app.add_subcommand("hubpath", "Distances to the maximal vertex and hub routes");
  add_common(hub, hub_f);
  hub->add_option("--graph", hub_f.graph, "Analyze this graph instead of generating");

  auto* ver = app.add_subcommand("verify-lemmas", "Exact and Monte Carlo bound checks");
  add_common(ver, ver_f);

  auto* exp = app.add_subcommand("experiment", "Full ladder experiment");
  add_common(exp, exp_f);
  exp->add_option("--graph", exp_f.graph, "Analyze this graph instead of generating");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (gen->parsed()) {
      rig::ExperimentConfig cfg = resolve(gen_f);
      if (graph_format) cfg.graph_format = *graph_format;
      cfg.validate();
      for (const auto& file : rig::run_generate(cfg)) {
        std::cout << file.path.string() << " checksum=" << std::hex << file.checksum
                  << std::dec << '\n';
      }
      return kExitOk;
    }
    if (ana->parsed()) {
      const rig::ExperimentConfig cfg = resolve(ana_f);
      const std::string text = rig::analyze_to_json(cfg, rig::load_graph(ana_f.graph));
      rig::write_file(cfg.out_dir / "analyze.json", text);
      std::cout << text;
      return kExitOk;
    }
    if (dist->parsed()) return run_report(dist_f, "distances", {true, false});
    if (hub->parsed()) return run_report(hub_f, "hubpath", {false, true});
    if (exp->parsed()) return run_report(exp_f, "experiment", {true, true});
    if (ver->parsed()) {
      const rig::ExperimentConfig cfg = resolve(ver_f);
      const rig::VerifyOutcome outcome = rig::run_verify(cfg);
      rig::write_verify_outcome(outcome, cfg.out_dir, cfg.format);
      std::size_t failed = 0, total = 0;
      for (const auto* suite : {&outcome.intersection, &outcome.coverage, &outcome.overlap,
                                &outcome.weight_sums}) {
        for (const auto& r : *suite) {
          ++total;
          if (r.status == rig::BoundStatus::kFail) {
            ++failed;
            std::cerr << "FAIL " << r.bound_id << " lhs=" << r.lhs << " rhs=" << r.rhs
                      << (r.diagnostic.empty() ? "" : " (" + r.diagnostic + ")") << '\n';
          }
        }
      }
      std::cout << total << " rows, " << failed << " failed\n";
      return outcome.all_passed() ? kExitOk : kExitVerify;
    }
  } catch (const rig::ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitRuntime;
}
