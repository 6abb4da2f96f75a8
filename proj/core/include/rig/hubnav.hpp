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

// Hub layers and explicit short paths through them.
//
// Vertices are layered by normalized weight against a decreasing ladder of
// thresholds t_1 > t_2 > ... > t_K. Layer U_k holds every vertex with weight
// at least t_k, so U_1 is the thinnest layer of heaviest hubs and U_K the
// widest. A short path from any vertex v to the maximal vertex u_max is built
// in two parts: a breadth-first escape from v into U_K, then a climb that
// moves from U_k to a neighbour in U_{k-1}, ending with a step onto u_max
// (layer 0). The climb has at most K hops and K grows like ln ln n.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rig/graphgen.hpp"
#include "rig/graphops.hpp"
#include "rig/model.hpp"

namespace rig {

struct LayerThresholds {
  std::uint64_t n = 0;
  double alpha = 0.0;
  double c0 = 0.0;
  /// Ladder cut: k_star is the deepest k with n^(alpha^k/(1+alpha)) >= anchor.
  double anchor = 0.0;
  double l2n = 0.0;
  /// Hub-core cut n^(1/(1+alpha)) / l2n^alpha.
  double t0 = 0.0;
  /// t[k-1] = t_k = n^(alpha^k/(1+alpha)) * l2n for k = 1..k_star.
  std::vector<double> t;
  std::uint32_t k_star = 0;

  /// t_k for any k >= 1 (t0 for k = 0), not limited to k <= k_star.
  double level(std::uint32_t k) const;
  bool degenerate() const { return k_star == 0; }
};

/// Ladder with the default anchor 100 + c0.
LayerThresholds thresholds(std::uint64_t n, double alpha, double c0);
LayerThresholds thresholds(std::uint64_t n, double alpha, double c0,
                           double anchor);

struct LayerDecomposition {
  std::uint32_t k_star = 0;
  /// layers[k-1] = U_k, sorted. Nested: U_1 within U_2 within ...
  std::vector<std::vector<Vertex>> layers;
  /// V^0, vertices with weight strictly above t0.
  std::vector<Vertex> hub_core;
  /// masses[k-1] = Q_k, the total set size over U_k.
  std::vector<std::uint64_t> masses;
  /// Smallest layer index holding v, or top_layer() + 1 when none. On a
  /// degenerate ladder the hub core plays the part of a single layer 1.
  std::vector<std::uint32_t> min_layer;
  std::vector<double> tilde_z;

  bool degenerate() const { return k_star == 0; }
  /// Depth of the ladder actually climbed: k_star, or 1 when degenerate.
  std::uint32_t top_layer() const { return degenerate() ? 1 : k_star; }
  /// U_{k_star}, or V^0 on a degenerate ladder.
  std::span<const Vertex> escape_targets() const;
  bool in_layer(Vertex v, std::uint32_t k) const { return min_layer[v] <= k; }
};

LayerDecomposition decompose(const VertexWeights& weights,
                             const LayerThresholds& th);

struct HubPath {
  std::vector<Vertex> vertices;
  /// Layer attained at each vertex (0 for u_max on a climb).
  std::vector<std::uint32_t> layer_index;
  Hops total_hops = 0;
};

struct ClimbOutcome {
  bool success = false;
  /// The full climb on success, the prefix walked before getting stuck
  /// otherwise.
  HubPath path;
};

/// Shortest path from v into escape_targets(). std::nullopt when v's
/// component holds no target. Throws ConfigError when there are no targets.
std::optional<HubPath> escape_bfs(const BipartiteIncidence& inc,
                                  const LayerDecomposition& dec, Vertex v);
std::optional<HubPath> escape_bfs(BfsWorkspace& ws, const LayerDecomposition& dec,
                                  Vertex v);

/// Greedy climb from start (in the top layer) to u_max. Each step goes to the
/// heaviest neighbour one layer up or higher, taking u_max whenever it is
/// adjacent; ties go to the smallest index. Fails at the first vertex with no
/// qualifying neighbour.
ClimbOutcome hub_climb(const BipartiteIncidence& inc,
                       const LayerDecomposition& dec, Vertex start,
                       Vertex u_max);

/// Escape followed by climb: a walk from v to u_max.
struct HubRoute {
  Vertex v = 0;
  std::optional<HubPath> escape;
  std::optional<ClimbOutcome> climb;
  std::optional<Hops> certificate_hops;
  Hops exact_hops = kUnreachable;
  /// "", "escape" or "climb".
  std::string failure;
};

HubRoute route_to_hub(BfsWorkspace& ws, const BipartiteIncidence& inc,
                      const LayerDecomposition& dec, Vertex v, Vertex u_max,
                      Hops exact_hops);

/// Walk v1 -> hub layers -> u_max -> hub layers -> v2. Its length bounds
/// d(v1, v2) from above.
struct Certificate {
  Vertex v1 = 0;
  Vertex v2 = 0;
  std::optional<HubPath> escape1;
  std::optional<HubPath> climb1;
  std::optional<HubPath> climb2;
  std::optional<HubPath> escape2;
  std::optional<Hops> certificate_hops;
  Hops exact_hops = kUnreachable;
  /// "", "escape1", "climb1", "escape2" or "climb2".
  std::string failure;

  bool success() const { return certificate_hops.has_value(); }
};

Certificate loglog_certificate(const BipartiteIncidence& inc,
                               const LayerDecomposition& dec, Vertex v1,
                               Vertex v2, Vertex u_max);
Certificate loglog_certificate(BfsWorkspace& ws, const BipartiteIncidence& inc,
                               const LayerDecomposition& dec, Vertex v1,
                               Vertex v2, Vertex u_max);

/// Every consecutive pair of the path passes adjacent().
bool path_is_walk(const BipartiteIncidence& inc, std::span<const Vertex> path);

}  // namespace rig
