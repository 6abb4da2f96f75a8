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

#include "rig/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <thread>
#include <type_traits>
#include <utility>

#include "json.hpp"
#include "rig/graphops.hpp"
#include "rig/random.hpp"

namespace rig {
namespace {

using ojson = nlohmann::ordered_json;

constexpr std::uint64_t kMaxVertices = std::numeric_limits<std::uint32_t>::max();

// --- config parsing ---------------------------------------------------------

template <class T>
struct is_vector : std::false_type {};
template <class T>
struct is_vector<std::vector<T>> : std::true_type {};

// nlohmann converts -1 and 2.5 to unsigned silently; reject them here.
template <class T>
bool representable(const nlohmann::json& value) {
  if constexpr (is_vector<T>::value) {
    if (!value.is_array()) return false;
    return std::all_of(value.begin(), value.end(), [](const nlohmann::json& x) {
      return representable<typename T::value_type>(x);
    });
  } else if constexpr (std::is_same_v<T, bool>) {
    return value.is_boolean();
  } else if constexpr (std::is_unsigned_v<T>) {
    return value.is_number_unsigned() &&
           value.get<std::uint64_t>() <= std::numeric_limits<T>::max();
  } else if constexpr (std::is_floating_point_v<T>) {
    return value.is_number();
  } else {
    return true;
  }
}

template <class T>
T get_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  try {
    const auto& value = obj.at(key);
    if (!representable<T>(value)) throw ConfigError(where + key + " has the wrong type");
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(where + key + " has the wrong type");
  }
}

void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(known.begin(), known.end(),
                     [&](const char* k) { return key == k; }) == known.end()) {
      throw ConfigError("unknown config key " + where + key);
    }
  }
}

VerifyConfig parse_verify(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("verify must be an object");
  reject_unknown(j,
                 {"intersection_max_jk", "intersection_m", "coverage_m", "coverage_n",
                  "coverage_gamma1", "coverage_gamma2", "coverage_sizes",
                  "coverage_trials", "overlap_points", "overlap_trials", "weight_n",
                  "weight_alphas", "weight_grid_points", "weight_gamma", "weight_tau",
                  "weight_trials", "window_threshold"},
                 "verify.");
  VerifyConfig v;
  const std::string w = "verify.";
  if (j.contains("intersection_max_jk"))
    v.intersection_max_jk = get_field<std::uint64_t>(j, "intersection_max_jk", w);
  if (j.contains("intersection_m"))
    v.intersection_m = get_field<std::vector<std::uint64_t>>(j, "intersection_m", w);
  if (j.contains("coverage_m")) v.coverage_m = get_field<std::uint64_t>(j, "coverage_m", w);
  if (j.contains("coverage_n")) v.coverage_n = get_field<std::uint64_t>(j, "coverage_n", w);
  if (j.contains("coverage_gamma1"))
    v.coverage_gamma1 = get_field<double>(j, "coverage_gamma1", w);
  if (j.contains("coverage_gamma2"))
    v.coverage_gamma2 = get_field<double>(j, "coverage_gamma2", w);
  if (j.contains("coverage_sizes"))
    v.coverage_sizes = get_field<std::vector<std::uint64_t>>(j, "coverage_sizes", w);
  if (j.contains("coverage_trials"))
    v.coverage_trials = get_field<std::uint64_t>(j, "coverage_trials", w);
  if (j.contains("overlap_points")) {
    v.overlap_points.clear();
    for (const auto& p : j.at("overlap_points")) {
      if (!p.is_array() || p.size() != 4)
        throw ConfigError("verify.overlap_points entries must be [a, b, d, m]");
      if (!representable<std::vector<std::uint64_t>>(p))
        throw ConfigError("verify.overlap_points entries must be non-negative integers");
      try {
        v.overlap_points.push_back({p[0].get<std::uint64_t>(), p[1].get<std::uint64_t>(),
                                    p[2].get<std::uint64_t>(), p[3].get<std::uint64_t>()});
      } catch (const nlohmann::json::exception&) {
        throw ConfigError("verify.overlap_points entries must be non-negative integers");
      }
    }
  }
  if (j.contains("overlap_trials"))
    v.overlap_trials = get_field<std::uint64_t>(j, "overlap_trials", w);
  if (j.contains("weight_n")) v.weight_n = get_field<std::uint64_t>(j, "weight_n", w);
  if (j.contains("weight_alphas"))
    v.weight_alphas = get_field<std::vector<double>>(j, "weight_alphas", w);
  if (j.contains("weight_grid_points"))
    v.weight_grid_points = get_field<std::size_t>(j, "weight_grid_points", w);
  if (j.contains("weight_gamma")) v.weight_gamma = get_field<double>(j, "weight_gamma", w);
  if (j.contains("weight_tau") && !j.at("weight_tau").is_null())
    v.weight_tau = get_field<double>(j, "weight_tau", w);
  if (j.contains("weight_trials"))
    v.weight_trials = get_field<std::uint64_t>(j, "weight_trials", w);
  if (j.contains("window_threshold"))
    v.window_threshold = get_field<double>(j, "window_threshold", w);
  return v;
}

ojson verify_to_json(const VerifyConfig& v) {
  ojson j;
  j["intersection_max_jk"] = v.intersection_max_jk;
  j["intersection_m"] = v.intersection_m;
  j["coverage_m"] = v.coverage_m;
  j["coverage_n"] = v.coverage_n;
  j["coverage_gamma1"] = v.coverage_gamma1;
  j["coverage_gamma2"] = v.coverage_gamma2;
  j["coverage_sizes"] = v.coverage_sizes;
  j["coverage_trials"] = v.coverage_trials;
  ojson points = ojson::array();
  for (const auto& p : v.overlap_points) points.push_back({p.a, p.b, p.d, p.m});
  j["overlap_points"] = std::move(points);
  j["overlap_trials"] = v.overlap_trials;
  j["weight_n"] = v.weight_n;
  j["weight_alphas"] = v.weight_alphas;
  j["weight_grid_points"] = v.weight_grid_points;
  j["weight_gamma"] = v.weight_gamma;
  j["weight_tau"] = v.weight_tau ? ojson(*v.weight_tau) : ojson(nullptr);
  j["weight_trials"] = v.weight_trials;
  j["window_threshold"] = v.window_threshold;
  return j;
}

// Threads and the output directory are left out so that reports do not
// depend on where or how fast they were produced.
ojson config_to_json(const ExperimentConfig& c) {
  ojson j;
  j["ladder"] = c.ladder;
  j["alpha"] = c.alpha;
  j["c0"] = c.c0;
  j["m"] = c.m ? ojson(*c.m) : ojson(nullptr);
  j["epsilon"] = c.epsilon;
  j["pairs_per_trial"] = c.pairs_per_trial;
  j["hub_samples_per_trial"] = c.hub_samples_per_trial;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["ladder_anchor"] = c.anchor();
  j["certificates"] = c.certificates;
  j["graph_format"] = c.graph_format;
  j["format"] = c.format;
  j["verify"] = verify_to_json(c.verify);
  return j;
}

// --- sampling ---------------------------------------------------------------

// Uniform unordered pairs of distinct members, without replacement.
std::vector<std::pair<Vertex, Vertex>> sample_pairs(const std::vector<Vertex>& members,
                                                    std::uint64_t count, Rng& rng) {
  const std::uint64_t g = members.size();
  const std::uint64_t total = g * (g - 1) / 2;
  count = std::min(count, total);
  std::set<std::pair<std::uint64_t, std::uint64_t>> taken;
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(count);
  while (out.size() < count) {
    std::uint64_t i = uniform_below(rng, g);
    std::uint64_t j = uniform_below(rng, g - 1);
    if (j >= i) ++j;
    const auto key = std::minmax(i, j);
    if (!taken.insert(key).second) continue;
    out.emplace_back(members[i], members[j]);
  }
  return out;
}

// Uniform subset without replacement, in draw order (partial Fisher-Yates).
std::vector<Vertex> sample_vertices(std::vector<Vertex> pool, std::uint64_t count, Rng& rng) {
  count = std::min<std::uint64_t>(count, pool.size());
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

bool sound_path(const BipartiteIncidence& inc, const std::optional<HubPath>& p) {
  return !p || path_is_walk(inc, p->vertices);
}

// --- analysis ---------------------------------------------------------------

void analyze_distances(const ExperimentConfig& cfg, const BipartiteIncidence& inc,
                       const ComponentLabeling& comps, const LayerDecomposition& dec,
                       Vertex u_max, std::uint64_t n, BfsWorkspace& ws, Rng& rng,
                       DistanceFragment& frag) {
  frag.bound = pair_distance_bound(n, cfg.alpha, cfg.epsilon);
  frag.labeled_both_in_giant = comps.in_giant(0) && comps.in_giant(1);
  if (frag.labeled_both_in_giant) {
    frag.labeled_exact = ws.distance(0, 1);
    frag.labeled_passes = frag.labeled_exact <= frag.bound;
  }
  if (comps.giant_size() < 2) {
    frag.status = "empty";
    return;
  }
  frag.status = "ok";
  const bool certify = cfg.certificates && !dec.escape_targets().empty();
  for (const auto& [v1, v2] : sample_pairs(comps.giant_members(), cfg.pairs_per_trial, rng)) {
    PairRecord rec;
    rec.v1 = v1;
    rec.v2 = v2;
    if (certify) {
      Certificate c = loglog_certificate(ws, inc, dec, v1, v2, u_max);
      rec.exact = c.exact_hops;
      if (!c.success()) {
        ++frag.certificate_failures;
      } else if (*c.certificate_hops < c.exact_hops || !sound_path(inc, c.escape1) ||
                 !sound_path(inc, c.climb1) || !sound_path(inc, c.climb2) ||
                 !sound_path(inc, c.escape2)) {
        ++frag.certificate_violations;
      }
      rec.certificate = std::move(c);
    } else {
      rec.exact = ws.distance(v1, v2);
    }
    // Both endpoints lie in the giant, so the distance is finite.
    ++frag.denominator;
    rec.passes = rec.exact <= frag.bound;
    frag.pass_count += rec.passes;
    frag.pairs.push_back(std::move(rec));
  }
}

void analyze_hubpath(const ExperimentConfig& cfg, const BipartiteIncidence& inc,
                     const LayerDecomposition& dec, Vertex u_max, std::uint64_t n,
                     BfsWorkspace& ws, Rng& rng, HubFragment& frag) {
  frag.bound = hub_distance_bound(n, cfg.alpha, cfg.epsilon);
  frag.degenerate_ladder = dec.degenerate();
  const bool routable = !dec.escape_targets().empty();
  frag.status = routable ? "ok" : "degenerate";

  const std::vector<Hops> dist = ws.all_from(u_max);
  std::vector<Vertex> reachable;
  for (Vertex v = 0; v < dist.size(); ++v) {
    if (dist[v] != kUnreachable) reachable.push_back(v);
  }
  for (Vertex v : sample_vertices(std::move(reachable), cfg.hub_samples_per_trial, rng)) {
    HubRecord rec;
    rec.v = v;
    rec.exact = dist[v];
    rec.route.v = v;
    rec.route.exact_hops = dist[v];
    ++frag.denominator;
    rec.passes = rec.exact <= frag.bound;
    frag.pass_count += rec.passes;
    if (routable && cfg.certificates) {
      rec.route = route_to_hub(ws, inc, dec, v, u_max, dist[v]);
      if (rec.route.escape) {
        ++frag.escape_successes;
        ++frag.climb_attempts;
        if (rec.route.climb && rec.route.climb->success) {
          ++frag.climb_successes;
          if (rec.route.climb->path.total_hops > dec.top_layer()) ++frag.climb_over_depth;
        }
      }
      if (rec.route.certificate_hops) {
        const bool walks = sound_path(inc, rec.route.escape) &&
                           path_is_walk(inc, rec.route.climb->path.vertices);
        if (*rec.route.certificate_hops < rec.exact || !walks) {
          ++frag.certificate_violations;
        }
      }
    }
    frag.records.push_back(std::move(rec));
  }
}

// --- serialization ----------------------------------------------------------

ojson hops_json(Hops h) { return h == kUnreachable ? ojson(nullptr) : ojson(h); }

ojson path_json(const std::optional<HubPath>& p) {
  if (!p) return nullptr;
  ojson j;
  j["vertices"] = p->vertices;
  j["layer_index"] = p->layer_index;
  j["hops"] = p->total_hops;
  return j;
}

ojson quantiles_json(const Quantiles& q) {
  ojson j;
  j["count"] = q.count;
  j["mean"] = q.mean;
  j["min"] = q.min;
  j["q25"] = q.q25;
  j["median"] = q.median;
  j["q75"] = q.q75;
  j["q90"] = q.q90;
  j["max"] = q.max;
  return j;
}

ojson distances_json(const DistanceFragment& f) {
  ojson j;
  j["status"] = f.status;
  j["bound"] = f.bound;
  j["pass_count"] = f.pass_count;
  j["denominator"] = f.denominator;
  j["pass_rate"] = f.denominator ? ojson(double(f.pass_count) / double(f.denominator))
                                 : ojson(nullptr);
  j["labeled_both_in_giant"] = f.labeled_both_in_giant;
  j["labeled_exact"] = hops_json(f.labeled_exact);
  j["labeled_passes"] = f.labeled_passes;
  j["certificate_failures"] = f.certificate_failures;
  j["certificate_violations"] = f.certificate_violations;
  ojson pairs = ojson::array();
  for (const auto& r : f.pairs) {
    ojson p;
    p["v1"] = r.v1;
    p["v2"] = r.v2;
    p["exact"] = hops_json(r.exact);
    p["passes"] = r.passes;
    if (r.certificate) {
      const Certificate& c = *r.certificate;
      ojson cj;
      cj["certificate_hops"] = c.certificate_hops ? ojson(*c.certificate_hops) : ojson(nullptr);
      cj["failure"] = c.failure;
      cj["escape1"] = path_json(c.escape1);
      cj["climb1"] = path_json(c.climb1);
      cj["climb2"] = path_json(c.climb2);
      cj["escape2"] = path_json(c.escape2);
      p["certificate"] = std::move(cj);
    } else {
      p["certificate"] = nullptr;
    }
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

ojson hubpath_json(const HubFragment& f) {
  ojson j;
  j["status"] = f.status;
  j["degenerate_ladder"] = f.degenerate_ladder;
  j["bound"] = f.bound;
  j["pass_count"] = f.pass_count;
  j["denominator"] = f.denominator;
  j["pass_rate"] = f.denominator ? ojson(double(f.pass_count) / double(f.denominator))
                                 : ojson(nullptr);
  j["escape_successes"] = f.escape_successes;
  j["climb_attempts"] = f.climb_attempts;
  j["climb_successes"] = f.climb_successes;
  j["climb_over_depth"] = f.climb_over_depth;
  j["certificate_violations"] = f.certificate_violations;
  ojson recs = ojson::array();
  for (const auto& r : f.records) {
    ojson rj;
    rj["v"] = r.v;
    rj["exact"] = hops_json(r.exact);
    rj["passes"] = r.passes;
    rj["certificate_hops"] =
        r.route.certificate_hops ? ojson(*r.route.certificate_hops) : ojson(nullptr);
    rj["failure"] = r.route.failure;
    rj["escape"] = path_json(r.route.escape);
    rj["climb"] = r.route.climb ? path_json(r.route.climb->path) : ojson(nullptr);
    recs.push_back(std::move(rj));
  }
  j["records"] = std::move(recs);
  return j;
}

ojson trial_json(const TrialReport& t) {
  ojson j;
  j["n"] = t.n;
  j["trial"] = t.trial;
  j["m"] = t.m;
  j["stream_seed"] = t.stream_seed;
  j["error"] = t.error;
  j["incidences"] = t.incidences;
  j["components"] = t.components;
  j["giant_size"] = t.giant_size;
  j["giant_fraction"] = t.giant_fraction;
  j["u_max"] = t.u_max;
  j["u_max_size"] = t.u_max_size;
  j["u_max_in_giant"] = t.u_max_in_giant;
  j["hub_core_size"] = t.hub_core_size;
  j["hub_core_in_giant"] = t.hub_core_in_giant;
  j["hub_core_over_threshold"] = t.hub_core_over_threshold;
  j["k_star"] = t.k_star;
  j["top_layer_size"] = t.top_layer_size;
  j["distances"] = distances_json(t.distances);
  j["hubpath"] = hubpath_json(t.hubpath);
  return j;
}

ojson rate_json(std::uint64_t num, std::uint64_t den) {
  return den ? ojson(double(num) / double(den)) : ojson(nullptr);
}

ojson aggregate_json(const LadderAggregate& a) {
  ojson j;
  j["n"] = a.n;
  j["m"] = a.m;
  j["l2n"] = a.l2n;
  j["k_star"] = a.k_star;
  j["degenerate_ladder"] = a.degenerate_ladder;
  j["trials"] = a.trials;
  j["failed_trials"] = a.failed_trials;
  j["rho_hat"] = a.rho_hat;
  j["giant_fraction_mean"] = a.giant_fraction_mean;
  j["giant_fraction_max"] = a.giant_fraction_max;
  j["u_max_in_giant_rate"] = a.u_max_in_giant_rate;
  j["hub_core_in_giant_rate"] = a.hub_core_in_giant_rate;
  j["hub_core_over_threshold_rate"] = a.hub_core_over_threshold_rate;
  j["hub_core_expected"] = a.hub_core_expected;
  j["hub_core_size_mean"] = a.hub_core_size_mean;
  j["pair_bound"] = a.pair_bound;
  j["hub_bound"] = a.hub_bound;
  j["pair_pass"] = a.pair_pass;
  j["pair_denominator"] = a.pair_denominator;
  j["pair_pass_rate"] = rate_json(a.pair_pass, a.pair_denominator);
  j["labeled_pass"] = a.labeled_pass;
  j["labeled_denominator"] = a.labeled_denominator;
  j["labeled_pass_rate"] = rate_json(a.labeled_pass, a.labeled_denominator);
  j["hub_pass"] = a.hub_pass;
  j["hub_denominator"] = a.hub_denominator;
  j["hub_pass_rate"] = rate_json(a.hub_pass, a.hub_denominator);
  j["escape_success_rate"] = rate_json(a.escape_successes, a.hub_denominator);
  j["climb_success_rate"] = rate_json(a.climb_successes, a.climb_attempts);
  j["certificate_violations"] = a.certificate_violations;
  j["climb_over_depth"] = a.climb_over_depth;
  j["pair_distance"] = quantiles_json(a.pair_distance);
  j["hub_distance"] = quantiles_json(a.hub_distance);
  j["pair_certificate"] = quantiles_json(a.pair_certificate);
  j["hub_certificate"] = quantiles_json(a.hub_certificate);
  j["pair_distance_ratio"] = a.pair_distance_ratio;
  return j;
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

std::string csv_rate(std::uint64_t num, std::uint64_t den) {
  return den ? format_double(double(num) / double(den)) : "";
}

const char* flag(bool b) { return b ? "1" : "0"; }

std::string hex64(std::uint64_t x) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace

// --- config -------------------------------------------------------------------

void ExperimentConfig::validate() const {
  if (ladder.empty()) throw ConfigError("ladder must hold at least one n");
  for (std::uint64_t n : ladder) {
    if (n < 2) throw ConfigError("every ladder n must be at least 2");
    if (n > kMaxVertices) throw ConfigError("ladder n exceeds the 32-bit vertex range");
    if (m && *m < n) throw ConfigError("explicit m must be at least every ladder n");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  if (!(c0 > 0.0) || !std::isfinite(c0)) throw ConfigError("c0 must be positive and finite");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (pairs_per_trial < 1) throw ConfigError("pairs_per_trial must be at least 1");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (!(anchor() > 1.0)) throw ConfigError("ladder_anchor must exceed 1");
  if (format != "json" && format != "csv") throw ConfigError("format must be json or csv");
  if (graph_format != "binary" && graph_format != "json")
    throw ConfigError("graph_format must be binary or json");
  for (std::uint64_t n : ladder) params_for(n).validate();
}

std::uint64_t ExperimentConfig::m_for(std::uint64_t n) const {
  return m ? *m : default_attribute_count(n);
}

ModelParams ExperimentConfig::params_for(std::uint64_t n) const {
  ModelParams p;
  p.n = n;
  p.m = m_for(n);
  p.alpha = alpha;
  p.c0 = c0;
  p.seed = seed;
  p.trials = trials;
  return p;
}

ExperimentConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config does not parse: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j,
                 {"ladder", "alpha", "c0", "m", "epsilon", "pairs_per_trial",
                  "hub_samples_per_trial", "trials", "seed", "ladder_anchor",
                  "certificates", "out_dir", "threads", "format", "graph_format",
                  "verify"},
                 "");
  ExperimentConfig c;
  if (j.contains("ladder")) {
    if (j.at("ladder").is_number()) {
      c.ladder = {get_field<std::uint64_t>(j, "ladder", "")};
    } else {
      c.ladder = get_field<std::vector<std::uint64_t>>(j, "ladder", "");
    }
  }
  if (j.contains("alpha")) c.alpha = get_field<double>(j, "alpha", "");
  if (j.contains("c0")) c.c0 = get_field<double>(j, "c0", "");
  if (j.contains("m") && !j.at("m").is_null()) {
    if (j.at("m").is_string()) {
      if (j.at("m").get<std::string>() != "default")
        throw ConfigError("m must be a count, null or \"default\"");
    } else {
      c.m = get_field<std::uint64_t>(j, "m", "");
    }
  }
  if (j.contains("epsilon")) c.epsilon = get_field<double>(j, "epsilon", "");
  if (j.contains("pairs_per_trial"))
    c.pairs_per_trial = get_field<std::uint32_t>(j, "pairs_per_trial", "");
  if (j.contains("hub_samples_per_trial"))
    c.hub_samples_per_trial = get_field<std::uint32_t>(j, "hub_samples_per_trial", "");
  if (j.contains("trials")) c.trials = get_field<std::uint32_t>(j, "trials", "");
  if (j.contains("seed")) c.seed = get_field<std::uint64_t>(j, "seed", "");
  if (j.contains("ladder_anchor") && !j.at("ladder_anchor").is_null())
    c.ladder_anchor = get_field<double>(j, "ladder_anchor", "");
  if (j.contains("certificates")) c.certificates = get_field<bool>(j, "certificates", "");
  if (j.contains("out_dir")) c.out_dir = get_field<std::string>(j, "out_dir", "");
  if (j.contains("threads")) c.threads = get_field<unsigned>(j, "threads", "");
  if (j.contains("format")) c.format = get_field<std::string>(j, "format", "");
  if (j.contains("graph_format"))
    c.graph_format = get_field<std::string>(j, "graph_format", "");
  if (j.contains("verify")) c.verify = parse_verify(j.at("verify"));
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
  try {
    return parse_config(text);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

double pair_distance_bound(std::uint64_t n, double alpha, double epsilon) {
  return (2.0 + epsilon) * loglog_scale(n) / std::log(1.0 / alpha);
}

double hub_distance_bound(std::uint64_t n, double alpha, double epsilon) {
  return (1.0 + epsilon) * loglog_scale(n) / std::log(1.0 / alpha);
}

Quantiles summarize(std::vector<Hops> values) {
  std::erase(values, kUnreachable);
  Quantiles q;
  q.count = values.size();
  if (values.empty()) return q;
  std::sort(values.begin(), values.end());
  const auto rank = [&](double p) {
    const auto idx = static_cast<std::size_t>(std::ceil(p * double(values.size())));
    return values[std::clamp<std::size_t>(idx, 1, values.size()) - 1];
  };
  double sum = 0.0;
  for (Hops h : values) sum += h;
  q.mean = sum / double(values.size());
  q.min = values.front();
  q.q25 = rank(0.25);
  q.median = rank(0.5);
  q.q75 = rank(0.75);
  q.q90 = rank(0.9);
  q.max = values.back();
  return q;
}

// --- trials -------------------------------------------------------------------

TrialReport analyze_graph(const ExperimentConfig& cfg, const VertexWeights& weights,
                          const BipartiteIncidence& inc, std::uint64_t n,
                          std::uint32_t trial, const AnalysisOptions& options) {
  TrialReport t;
  t.n = n;
  t.trial = trial;
  t.m = inc.m();
  t.incidences = inc.incidence_count();

  const ComponentLabeling comps = components(inc);
  t.components = comps.sizes.size();
  t.giant_size = comps.giant_size();
  t.giant_fraction = double(t.giant_size) / double(n);

  t.u_max = maximal_vertex(weights);
  t.u_max_size = weights.sizes[t.u_max];
  t.u_max_in_giant = comps.in_giant(t.u_max);

  const LayerThresholds th = thresholds(n, cfg.alpha, cfg.c0, cfg.anchor());
  const LayerDecomposition dec = decompose(weights, th);
  t.k_star = th.k_star;
  t.top_layer_size = dec.escape_targets().size();
  t.hub_core_size = dec.hub_core.size();
  t.hub_core_in_giant = std::all_of(dec.hub_core.begin(), dec.hub_core.end(),
                                    [&](Vertex v) { return comps.in_giant(v); });
  const double c2 = std::pow(cfg.c0, 1.0 + cfg.alpha);
  const double expected = c2 * std::pow(th.l2n, cfg.alpha * (1.0 + cfg.alpha));
  t.hub_core_over_threshold = double(t.hub_core_size) >= 2.0 * expected;

  Rng rng = make_stream(mix64(cfg.seed) ^ kAnalysisSalt, n, trial);
  BfsWorkspace ws(inc);
  if (options.distances) {
    analyze_distances(cfg, inc, comps, dec, t.u_max, n, ws, rng, t.distances);
  }
  if (options.hubpath) {
    analyze_hubpath(cfg, inc, dec, t.u_max, n, ws, rng, t.hubpath);
  }
  return t;
}

ExperimentReport run_trials(const ExperimentConfig& cfg, const AnalysisOptions& options) {
  cfg.validate();
  struct Unit {
    std::uint64_t n;
    std::uint32_t trial;
  };
  std::vector<Unit> units;
  for (std::uint64_t n : cfg.ladder) {
    for (std::uint32_t t = 0; t < cfg.trials; ++t) units.push_back({n, t});
  }

  ExperimentReport report;
  report.config = cfg;
  report.trials.resize(units.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      const auto [n, trial] = units[i];
      TrialReport& slot = report.trials[i];
      try {
        Rng rng = make_stream(cfg.seed, n, trial);
        const GeneratedGraph g = generate(cfg.params_for(n), rng);
        slot = analyze_graph(cfg, g.weights, g.incidence, n, trial, options);
      } catch (const std::exception& e) {
        slot = TrialReport{};
        slot.n = n;
        slot.trial = trial;
        slot.m = cfg.m_for(n);
        slot.error = e.what();
      }
      slot.stream_seed = stream_seed(cfg.seed, n, trial);
    }
  };
  unsigned workers = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(units.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  report.aggregates = aggregate(cfg, report.trials);
  return report;
}

std::vector<LadderAggregate> aggregate(const ExperimentConfig& cfg,
                                       const std::vector<TrialReport>& trials) {
  std::vector<LadderAggregate> out;
  for (std::uint64_t n : cfg.ladder) {
    if (std::any_of(out.begin(), out.end(), [&](const auto& a) { return a.n == n; })) continue;
    LadderAggregate a;
    a.n = n;
    a.m = cfg.m_for(n);
    a.l2n = loglog_scale(n);
    const LayerThresholds th = thresholds(n, cfg.alpha, cfg.c0, cfg.anchor());
    a.k_star = th.k_star;
    a.degenerate_ladder = th.degenerate();
    a.hub_core_expected =
        std::pow(cfg.c0, 1.0 + cfg.alpha) * std::pow(a.l2n, cfg.alpha * (1.0 + cfg.alpha));
    a.pair_bound = pair_distance_bound(n, cfg.alpha, cfg.epsilon);
    a.hub_bound = hub_distance_bound(n, cfg.alpha, cfg.epsilon);

    std::vector<Hops> pair_d, hub_d, pair_c, hub_c;
    std::uint64_t ok = 0, umax = 0, core = 0, over = 0;
    double frac_sum = 0.0, core_sum = 0.0;
    a.rho_hat = 1.0;
    for (const TrialReport& t : trials) {
      if (t.n != n) continue;
      ++a.trials;
      if (!t.error.empty()) {
        ++a.failed_trials;
        continue;
      }
      ++ok;
      frac_sum += t.giant_fraction;
      core_sum += double(t.hub_core_size);
      a.rho_hat = std::min(a.rho_hat, t.giant_fraction);
      a.giant_fraction_max = std::max(a.giant_fraction_max, t.giant_fraction);
      umax += t.u_max_in_giant;
      core += t.hub_core_in_giant;
      over += t.hub_core_over_threshold;

      const DistanceFragment& d = t.distances;
      a.pair_pass += d.pass_count;
      a.pair_denominator += d.denominator;
      if (d.labeled_both_in_giant) {
        ++a.labeled_denominator;
        a.labeled_pass += d.labeled_passes;
      }
      a.certificate_violations += d.certificate_violations;
      for (const auto& r : d.pairs) {
        pair_d.push_back(r.exact);
        if (r.certificate && r.certificate->certificate_hops)
          pair_c.push_back(*r.certificate->certificate_hops);
      }

      const HubFragment& h = t.hubpath;
      a.hub_pass += h.pass_count;
      a.hub_denominator += h.denominator;
      a.escape_successes += h.escape_successes;
      a.climb_successes += h.climb_successes;
      a.climb_attempts += h.climb_attempts;
      a.certificate_violations += h.certificate_violations;
      a.climb_over_depth += h.climb_over_depth;
      for (const auto& r : h.records) {
        hub_d.push_back(r.exact);
        if (r.route.certificate_hops) hub_c.push_back(*r.route.certificate_hops);
      }
    }
    if (ok == 0) a.rho_hat = 0.0;
    if (ok > 0) {
      a.giant_fraction_mean = frac_sum / double(ok);
      a.hub_core_size_mean = core_sum / double(ok);
      a.u_max_in_giant_rate = double(umax) / double(ok);
      a.hub_core_in_giant_rate = double(core) / double(ok);
      a.hub_core_over_threshold_rate = double(over) / double(ok);
    }
    a.pair_distance = summarize(std::move(pair_d));
    a.hub_distance = summarize(std::move(hub_d));
    a.pair_certificate = summarize(std::move(pair_c));
    a.hub_certificate = summarize(std::move(hub_c));
    a.pair_distance_ratio = a.pair_distance.mean / a.l2n;
    out.push_back(std::move(a));
  }
  return out;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  return run_trials(cfg, {true, true});
}

ExperimentReport run_distances(const ExperimentConfig& cfg) {
  return run_trials(cfg, {true, false});
}

ExperimentReport run_hubpath(const ExperimentConfig& cfg) {
  return run_trials(cfg, {false, true});
}

ExperimentReport run_on_graph(const ExperimentConfig& base, const GraphArtifact& graph,
                              const AnalysisOptions& options) {
  ExperimentConfig cfg = base;
  const auto& inc = graph.incidence;
  cfg.ladder = {inc.n()};
  cfg.m = inc.m();
  cfg.alpha = graph.header.alpha;
  cfg.c0 = graph.header.c0;
  cfg.trials = 1;
  cfg.validate();

  std::vector<std::uint64_t> sizes(inc.n());
  for (Vertex v = 0; v < inc.n(); ++v) sizes[v] = inc.set_size(v);
  const VertexWeights weights = weights_from_sizes(std::move(sizes), inc.n(), inc.m());

  ExperimentReport report;
  report.config = cfg;
  TrialReport t = analyze_graph(cfg, weights, inc, inc.n(), 0, options);
  t.stream_seed = graph.header.seed;
  report.trials.push_back(std::move(t));
  report.aggregates = aggregate(cfg, report.trials);
  return report;
}

std::vector<GeneratedFile> run_generate(const ExperimentConfig& cfg) {
  cfg.validate();
  const bool binary = cfg.graph_format == "binary";
  std::vector<GeneratedFile> out;
  for (std::uint64_t n : cfg.ladder) {
    for (std::uint32_t t = 0; t < cfg.trials; ++t) {
      Rng rng = make_stream(cfg.seed, n, t);
      const ModelParams params = cfg.params_for(n);
      const GeneratedGraph g = generate(params, rng);
      GraphHeader h;
      h.n = n;
      h.m = params.m;
      h.alpha = cfg.alpha;
      h.c0 = cfg.c0;
      h.seed = stream_seed(cfg.seed, n, t);

      GeneratedFile f;
      f.n = n;
      f.trial = t;
      const std::string stem = "graph_n" + std::to_string(n) + "_t" + std::to_string(t);
      f.path = cfg.out_dir / (stem + (binary ? ".rig" : ".json"));
      f.metadata = cfg.out_dir / (stem + ".meta.json");
      f.checksum = save_graph(f.path, h, g.incidence,
                              binary ? GraphFormat::kBinary : GraphFormat::kJson);

      ojson meta;
      meta["format"] = "rig-graph-meta";
      meta["file"] = f.path.filename().string();
      meta["graph_format"] = cfg.graph_format;
      meta["n"] = n;
      meta["m"] = params.m;
      meta["alpha"] = cfg.alpha;
      meta["c0"] = cfg.c0;
      meta["master_seed"] = cfg.seed;
      meta["trial"] = t;
      meta["stream_seed"] = h.seed;
      meta["incidences"] = g.incidence.incidence_count();
      meta["checksum_fnv1a64"] = hex64(f.checksum);
      write_file(f.metadata, meta.dump(1) + "\n");
      out.push_back(std::move(f));
    }
  }
  return out;
}

// --- verify -------------------------------------------------------------------

bool VerifyOutcome::all_passed() const {
  for (const auto* suite : {&intersection, &coverage, &overlap, &weight_sums}) {
    for (const auto& r : *suite) {
      if (r.status == BoundStatus::kFail) return false;
    }
  }
  return true;
}

VerifyOutcome run_verify(const ExperimentConfig& cfg) {
  const VerifyConfig& v = cfg.verify;
  VerifyOutcome out;

  const auto grid = intersection_grid(v.intersection_max_jk, v.intersection_m);
  out.intersection = check_intersection_bounds(grid);

  UnionCoverageConfig uc;
  uc.m = v.coverage_m;
  uc.n = v.coverage_n;
  uc.gamma1 = v.coverage_gamma1;
  uc.gamma2 = v.coverage_gamma2;
  uc.sizes = v.coverage_sizes;
  if (uc.sizes.empty()) {
    const auto each = static_cast<std::uint64_t>(double(uc.m) * uc.gamma1 / 10.0);
    uc.sizes.assign(10, each);
  }
  uc.trials = v.coverage_trials;
  uc.seed = mix64(cfg.seed ^ 0x636f766572616765ULL);
  out.coverage.push_back(check_union_coverage(uc));

  for (std::size_t i = 0; i < v.overlap_points.size(); ++i) {
    const auto& p = v.overlap_points[i];
    OverlapConfig oc;
    oc.a = p.a;
    oc.b = p.b;
    oc.d = p.d;
    oc.m = p.m;
    oc.trials = v.overlap_trials;
    oc.seed = mix64(mix64(cfg.seed ^ 0x6f7665726c6170ULL) + i);
    out.overlap.push_back(check_overlap_concentration(oc));
  }

  for (std::size_t i = 0; i < v.weight_alphas.size(); ++i) {
    WeightSumConfig wc;
    wc.n = v.weight_n;
    wc.alpha = v.weight_alphas[i];
    wc.c0 = cfg.c0;
    const double top = std::pow(double(wc.n), 1.0 / (1.0 + wc.alpha));
    wc.t_grid = geometric_grid(wc.c0, top, v.weight_grid_points);
    wc.gamma = v.weight_gamma;
    wc.tau = v.weight_tau.value_or(1.0 + wc.alpha / 2.0);
    wc.trials = v.weight_trials;
    wc.seed = mix64(mix64(cfg.seed ^ 0x7765696768ULL) + i);
    wc.window_threshold = v.window_threshold;
    auto rows = check_weight_sums(wc);
    out.weight_sums.insert(out.weight_sums.end(), std::make_move_iterator(rows.begin()),
                           std::make_move_iterator(rows.end()));
  }
  return out;
}

void write_verify_outcome(const VerifyOutcome& outcome, const std::filesystem::path& dir,
                          const std::string& format) {
  const std::pair<const char*, const std::vector<BoundReport>*> suites[] = {
      {"intersection_bounds", &outcome.intersection},
      {"union_coverage", &outcome.coverage},
      {"overlap_concentration", &outcome.overlap},
      {"weight_sums", &outcome.weight_sums}};
  for (const auto& [name, rows] : suites) {
    if (format == "csv") {
      write_file(dir / (std::string(name) + ".csv"), bound_reports_to_csv(*rows));
    } else {
      write_file(dir / (std::string(name) + ".json"), bound_reports_to_json(*rows));
    }
  }
}

// --- analyze ------------------------------------------------------------------

std::string analyze_to_json(const ExperimentConfig& base, const GraphArtifact& graph) {
  const auto& inc = graph.incidence;
  const std::uint64_t n = inc.n();
  std::vector<std::uint64_t> sizes(n);
  for (Vertex v = 0; v < n; ++v) sizes[v] = inc.set_size(v);
  const VertexWeights weights = weights_from_sizes(std::move(sizes), n, inc.m());

  const ComponentLabeling comps = components(inc);
  const Vertex u_max = maximal_vertex(weights);
  const LayerThresholds th =
      thresholds(n, graph.header.alpha, graph.header.c0,
                 base.ladder_anchor.value_or(100.0 + graph.header.c0));
  const LayerDecomposition dec = decompose(weights, th);
  const DegreeTail tail = degree_tail_report(inc);

  ojson j;
  j["n"] = n;
  j["m"] = inc.m();
  j["alpha"] = graph.header.alpha;
  j["c0"] = graph.header.c0;
  j["seed"] = graph.header.seed;
  j["incidences"] = inc.incidence_count();
  j["components"] = comps.sizes.size();
  j["giant_size"] = comps.giant_size();
  j["giant_fraction"] = double(comps.giant_size()) / double(n);
  std::vector<std::uint64_t> largest = comps.sizes;
  std::sort(largest.begin(), largest.end(), std::greater<>());
  if (largest.size() > 10) largest.resize(10);
  j["largest_components"] = largest;
  j["u_max"] = u_max;
  j["u_max_size"] = weights.sizes[u_max];
  j["u_max_in_giant"] = comps.in_giant(u_max);

  ojson layers;
  layers["l2n"] = th.l2n;
  layers["t0"] = th.t0;
  layers["t"] = th.t;
  layers["k_star"] = th.k_star;
  layers["degenerate"] = th.degenerate();
  std::vector<std::uint64_t> layer_sizes;
  for (const auto& layer : dec.layers) layer_sizes.push_back(layer.size());
  layers["layer_sizes"] = layer_sizes;
  layers["masses"] = dec.masses;
  layers["hub_core_size"] = dec.hub_core.size();
  j["layers"] = std::move(layers);

  ojson dt;
  dt["max_degree"] = tail.max_degree;
  ojson surv = ojson::array();
  for (const auto& [d, s] : tail.survival) surv.push_back({d, s});
  dt["survival"] = std::move(surv);
  dt["slope"] = tail.slope ? ojson(*tail.slope) : ojson(nullptr);
  dt["fit_low"] = tail.fit_low;
  dt["fit_high"] = tail.fit_high;
  j["degree_tail"] = std::move(dt);
  return j.dump(1) + "\n";
}

// --- reports ------------------------------------------------------------------

std::string report_to_json(const ExperimentReport& report) {
  ojson j;
  j["format"] = "rig-experiment-report";
  j["version"] = 1;
  j["config"] = config_to_json(report.config);
  ojson trials = ojson::array();
  for (const auto& t : report.trials) trials.push_back(trial_json(t));
  j["trials"] = std::move(trials);
  ojson aggs = ojson::array();
  for (const auto& a : report.aggregates) aggs.push_back(aggregate_json(a));
  j["aggregates"] = std::move(aggs);
  return j.dump(1) + "\n";
}

std::string trials_to_csv(const ExperimentReport& report) {
  std::ostringstream os;
  os << "n,trial,m,stream_seed,error,incidences,components,giant_size,giant_fraction,"
        "u_max,u_max_size,u_max_in_giant,hub_core_size,hub_core_in_giant,"
        "hub_core_over_threshold,k_star,top_layer_size,distance_status,pair_pass,"
        "pair_denominator,labeled_both_in_giant,labeled_exact,hub_status,hub_pass,"
        "hub_denominator,escape_successes,climb_attempts,climb_successes,"
        "certificate_violations\n";
  for (const auto& t : report.trials) {
    const auto& d = t.distances;
    const auto& h = t.hubpath;
    os << t.n << ',' << t.trial << ',' << t.m << ',' << t.stream_seed << ','
       << csv_field(t.error) << ',' << t.incidences << ',' << t.components << ','
       << t.giant_size << ',' << format_double(t.giant_fraction) << ',' << t.u_max << ','
       << t.u_max_size << ',' << flag(t.u_max_in_giant) << ',' << t.hub_core_size << ','
       << flag(t.hub_core_in_giant) << ',' << flag(t.hub_core_over_threshold) << ','
       << t.k_star << ',' << t.top_layer_size << ',' << d.status << ',' << d.pass_count
       << ',' << d.denominator << ',' << flag(d.labeled_both_in_giant) << ','
       << (d.labeled_exact == kUnreachable ? std::string() : std::to_string(d.labeled_exact))
       << ',' << h.status << ',' << h.pass_count << ',' << h.denominator << ','
       << h.escape_successes << ',' << h.climb_attempts << ',' << h.climb_successes << ','
       << d.certificate_violations + h.certificate_violations << '\n';
  }
  return os.str();
}

std::string aggregates_to_csv(const ExperimentReport& report) {
  std::ostringstream os;
  os << "n,m,l2n,k_star,degenerate_ladder,trials,failed_trials,rho_hat,"
        "giant_fraction_mean,giant_fraction_max,u_max_in_giant_rate,"
        "hub_core_in_giant_rate,hub_core_over_threshold_rate,hub_core_expected,"
        "hub_core_size_mean,pair_bound,hub_bound,pair_pass_rate,labeled_pass_rate,"
        "hub_pass_rate,escape_success_rate,climb_success_rate,certificate_violations,"
        "climb_over_depth,pair_median,pair_mean,hub_median,hub_mean,pair_distance_ratio\n";
  for (const auto& a : report.aggregates) {
    os << a.n << ',' << a.m << ',' << format_double(a.l2n) << ',' << a.k_star << ','
       << flag(a.degenerate_ladder) << ',' << a.trials << ',' << a.failed_trials << ','
       << format_double(a.rho_hat) << ',' << format_double(a.giant_fraction_mean) << ','
       << format_double(a.giant_fraction_max) << ',' << format_double(a.u_max_in_giant_rate)
       << ',' << format_double(a.hub_core_in_giant_rate) << ','
       << format_double(a.hub_core_over_threshold_rate) << ','
       << format_double(a.hub_core_expected) << ',' << format_double(a.hub_core_size_mean)
       << ',' << format_double(a.pair_bound) << ',' << format_double(a.hub_bound) << ','
       << csv_rate(a.pair_pass, a.pair_denominator) << ','
       << csv_rate(a.labeled_pass, a.labeled_denominator) << ','
       << csv_rate(a.hub_pass, a.hub_denominator) << ','
       << csv_rate(a.escape_successes, a.hub_denominator) << ','
       << csv_rate(a.climb_successes, a.climb_attempts) << ',' << a.certificate_violations
       << ',' << a.climb_over_depth << ',' << a.pair_distance.median << ','
       << format_double(a.pair_distance.mean) << ',' << a.hub_distance.median << ','
       << format_double(a.hub_distance.mean) << ',' << format_double(a.pair_distance_ratio)
       << '\n';
  }
  return os.str();
}

void write_report(const ExperimentReport& report, const std::filesystem::path& dir,
                  const std::string& stem, const std::string& format) {
  if (format == "csv") {
    write_file(dir / (stem + "_trials.csv"), trials_to_csv(report));
    write_file(dir / (stem + "_aggregates.csv"), aggregates_to_csv(report));
  } else {
    write_file(dir / (stem + ".json"), report_to_json(report));
  }
}

}  // namespace rig
