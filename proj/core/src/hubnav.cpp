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

#include "rig/hubnav.hpp"

#include <cmath>
#include <stdexcept>

#include "rig/types.hpp"

namespace rig {

double LayerThresholds::level(std::uint32_t k) const {
  if (k == 0) return t0;
  const double nd = static_cast<double>(n);
  return std::pow(nd, std::pow(alpha, k) / (1.0 + alpha)) * l2n;
}

LayerThresholds thresholds(std::uint64_t n, double alpha, double c0) {
  return thresholds(n, alpha, c0, 100.0 + c0);
}

LayerThresholds thresholds(std::uint64_t n, double alpha, double c0,
                           double anchor) {
  if (n < 2) throw ConfigError("ladder needs n >= 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  if (!(c0 > 0.0)) throw ConfigError("c0 must be positive");
  if (!(anchor > 1.0)) throw ConfigError("ladder anchor must exceed 1");

  LayerThresholds th;
  th.n = n;
  th.alpha = alpha;
  th.c0 = c0;
  th.anchor = anchor;
  th.l2n = loglog_scale(n);
  const double nd = static_cast<double>(n);
  th.t0 = std::pow(nd, 1.0 / (1.0 + alpha)) * std::pow(th.l2n, -alpha);
  // n^(alpha^k/(1+alpha)) decreases to 1 < anchor, so the scan stops.
  for (std::uint32_t k = 1;; ++k) {
    if (std::pow(nd, std::pow(alpha, k) / (1.0 + alpha)) < anchor) break;
    th.k_star = k;
    th.t.push_back(th.level(k));
  }
  return th;
}

std::span<const Vertex> LayerDecomposition::escape_targets() const {
  if (degenerate()) return hub_core;
  return layers.back();
}

LayerDecomposition decompose(const VertexWeights& weights,
                             const LayerThresholds& th) {
  if (weights.size() != th.n) {
    throw std::invalid_argument("weights and thresholds disagree on n");
  }
  LayerDecomposition dec;
  dec.k_star = th.k_star;
  dec.layers.resize(th.k_star);
  dec.masses.assign(th.k_star, 0);
  dec.tilde_z = weights.tilde_z;
  dec.min_layer.assign(weights.size(), dec.top_layer() + 1);

  for (Vertex v = 0; v < weights.size(); ++v) {
    const double z = weights.tilde_z[v];
    if (z > th.t0) dec.hub_core.push_back(v);
    for (std::uint32_t k = 1; k <= th.k_star; ++k) {
      if (z >= th.t[k - 1]) {
        dec.layers[k - 1].push_back(v);
        dec.masses[k - 1] += weights.sizes[v];
        if (dec.min_layer[v] > k) dec.min_layer[v] = k;
      }
    }
  }
  if (dec.degenerate()) {
    for (Vertex v : dec.hub_core) dec.min_layer[v] = 1;
  }
  return dec;
}

namespace {

HubPath path_with_layers(const LayerDecomposition& dec, std::vector<Vertex> vertices) {
  HubPath p;
  p.total_hops = static_cast<Hops>(vertices.size() - 1);
  p.layer_index.reserve(vertices.size());
  for (Vertex v : vertices) p.layer_index.push_back(dec.min_layer[v]);
  p.vertices = std::move(vertices);
  return p;
}

void require_targets(const LayerDecomposition& dec) {
  if (dec.escape_targets().empty()) {
    throw ConfigError(dec.degenerate()
                          ? "degenerate ladder (k* = 0) with an empty hub core"
                          : "top layer U_k* is empty");
  }
}

}  // namespace

std::optional<HubPath> escape_bfs(BfsWorkspace& ws, const LayerDecomposition& dec,
                                  Vertex v) {
  require_targets(dec);
  const std::uint32_t top = dec.top_layer();
  DistanceResult r = ws.nearest(v, [&](Vertex x) { return dec.in_layer(x, top); });
  if (!r.reachable()) return std::nullopt;
  return path_with_layers(dec, std::move(r.path));
}

std::optional<HubPath> escape_bfs(const BipartiteIncidence& inc,
                                  const LayerDecomposition& dec, Vertex v) {
  BfsWorkspace ws(inc);
  return escape_bfs(ws, dec, v);
}

ClimbOutcome hub_climb(const BipartiteIncidence& inc,
                       const LayerDecomposition& dec, Vertex start,
                       Vertex u_max) {
  if (start >= inc.n() || u_max >= inc.n()) {
    throw std::out_of_range("vertex id out of range");
  }
  ClimbOutcome out;
  Vertex cur = start;
  std::uint32_t layer = cur == u_max ? 0 : dec.min_layer[cur];
  if (layer > dec.top_layer()) {
    throw std::invalid_argument("climb must start in the top layer");
  }
  out.path.vertices.push_back(cur);
  out.path.layer_index.push_back(layer);

  while (cur != u_max) {
    const std::uint32_t target = layer - 1;
    bool found = false;
    bool reached_max = false;
    Vertex best = 0;
    for (std::uint32_t slot : inc.slots(cur)) {
      for (Vertex y : inc.slot_holders(slot)) {
        if (y == u_max) {
          reached_max = true;
          break;
        }
        if (y == cur || target == 0 || !dec.in_layer(y, target)) continue;
        if (!found || dec.tilde_z[y] > dec.tilde_z[best] ||
            (dec.tilde_z[y] == dec.tilde_z[best] && y < best)) {
          best = y;
          found = true;
        }
      }
      if (reached_max) break;
    }
    if (reached_max) {
      cur = u_max;
      layer = 0;
    } else if (found) {
      cur = best;
      layer = dec.min_layer[best];
    } else {
      out.path.total_hops = static_cast<Hops>(out.path.vertices.size() - 1);
      return out;
    }
    out.path.vertices.push_back(cur);
    out.path.layer_index.push_back(layer);
  }
  out.path.total_hops = static_cast<Hops>(out.path.vertices.size() - 1);
  out.success = true;
  return out;
}

HubRoute route_to_hub(BfsWorkspace& ws, const BipartiteIncidence& inc,
                      const LayerDecomposition& dec, Vertex v, Vertex u_max,
                      Hops exact_hops) {
  HubRoute route;
  route.v = v;
  route.exact_hops = exact_hops;
  route.escape = escape_bfs(ws, dec, v);
  if (!route.escape) {
    route.failure = "escape";
    return route;
  }
  route.climb = hub_climb(inc, dec, route.escape->vertices.back(), u_max);
  if (!route.climb->success) {
    route.failure = "climb";
    return route;
  }
  route.certificate_hops = route.escape->total_hops + route.climb->path.total_hops;
  return route;
}

Certificate loglog_certificate(BfsWorkspace& ws, const BipartiteIncidence& inc,
                               const LayerDecomposition& dec, Vertex v1,
                               Vertex v2, Vertex u_max) {
  Certificate c;
  c.v1 = v1;
  c.v2 = v2;
  c.exact_hops = ws.distance(v1, v2);

  c.escape1 = escape_bfs(ws, dec, v1);
  if (!c.escape1) {
    c.failure = "escape1";
    return c;
  }
  ClimbOutcome up1 = hub_climb(inc, dec, c.escape1->vertices.back(), u_max);
  c.climb1 = std::move(up1.path);
  if (!up1.success) {
    c.failure = "climb1";
    return c;
  }
  c.escape2 = escape_bfs(ws, dec, v2);
  if (!c.escape2) {
    c.failure = "escape2";
    return c;
  }
  ClimbOutcome up2 = hub_climb(inc, dec, c.escape2->vertices.back(), u_max);
  c.climb2 = std::move(up2.path);
  if (!up2.success) {
    c.failure = "climb2";
    return c;
  }
  c.certificate_hops = c.escape1->total_hops + c.climb1->total_hops +
                       c.climb2->total_hops + c.escape2->total_hops;
  return c;
}

Certificate loglog_certificate(const BipartiteIncidence& inc,
                               const LayerDecomposition& dec, Vertex v1,
                               Vertex v2, Vertex u_max) {
  BfsWorkspace ws(inc);
  return loglog_certificate(ws, inc, dec, v1, v2, u_max);
}

bool path_is_walk(const BipartiteIncidence& inc, std::span<const Vertex> path) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i - 1] == path[i] || !adjacent(inc, path[i - 1], path[i])) return false;
  }
  return true;
}

}  // namespace rig
