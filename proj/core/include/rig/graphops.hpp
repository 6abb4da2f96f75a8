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

#pragma once

#include <cstdint>
#include <vector>

#include "rig/graphgen.hpp"
#include "rig/model.hpp"
#include "rig/types.hpp"

namespace rig {

/// Connected components of the intersection graph.
struct ComponentLabeling {
  /// Component id per vertex. Ids are dense and numbered in order of each
  /// component's smallest vertex.
  std::vector<std::uint32_t> label;
  std::vector<std::uint64_t> sizes;
  /// A largest component; smallest id among ties.
  std::uint32_t giant = 0;

  std::uint64_t giant_size() const { return sizes.empty() ? 0 : sizes[giant]; }
  bool in_giant(Vertex v) const { return label[v] == giant; }
  std::vector<Vertex> giant_members() const;
};

struct DistanceResult {
  Hops hops = kUnreachable;
  /// One shortest path, endpoints included (hops + 1 vertices) when finite.
  std::vector<Vertex> path;

  bool reachable() const { return hops != kUnreachable; }
};

/// Levels of a breadth-first search on the bipartite vertex/attribute graph.
/// A vertex at intersection-graph distance d sits at level 2d; an attribute
/// slot first reached from a vertex at distance d sits at level 2d + 1.
struct BipartiteLevels {
  std::vector<Hops> vertex_level;
  std::vector<Hops> slot_level;
};

/// Union-find over each attribute's holder list.
ComponentLabeling components(const BipartiteIncidence& inc);

DistanceResult bfs_distance(const BipartiteIncidence& inc, Vertex u, Vertex v);

/// Entry v is the distance from u to v, kUnreachable outside u's component.
std::vector<Hops> distances_from(const BipartiteIncidence& inc, Vertex u);

BipartiteLevels bipartite_levels(const BipartiteIncidence& inc, Vertex u);

/// Smallest index attaining the maximum set size. Requires n >= 1.
Vertex maximal_vertex(const VertexWeights& weights);

/// Reusable scratch for repeated searches over one incidence. Not shareable
/// between threads; make one per worker.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(const BipartiteIncidence& inc);

  /// Shortest path from source to the closest vertex satisfying is_target.
  /// The source itself counts. Unreachable result when no target is found.
  template <class Pred>
  DistanceResult nearest(Vertex source, Pred&& is_target);

  std::vector<Hops> all_from(Vertex source);

  /// Exact distance by bidirectional search, expanding the cheaper frontier
  /// one full level at a time. kUnreachable across components.
  Hops distance(Vertex u, Vertex v);

 private:
  void begin(Vertex source);
  bool seen_vertex(Vertex v) const { return vertex_stamp_[v] == epoch_; }
  DistanceResult trace(Vertex target) const;

  const BipartiteIncidence* inc_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> vertex_stamp_;
  std::vector<std::uint32_t> slot_stamp_;
  std::vector<Hops> hops_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> queue_;
  // Second search front of distance().
  std::vector<std::uint32_t> vertex_stamp_b_;
  std::vector<std::uint32_t> slot_stamp_b_;
  std::vector<Hops> hops_b_;
  std::vector<Vertex> queue_b_;
};

template <class Pred>
DistanceResult BfsWorkspace::nearest(Vertex source, Pred&& is_target) {
  begin(source);
  if (is_target(source)) return trace(source);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Vertex x = queue_[head];
    for (std::uint32_t slot : inc_->slots(x)) {
      if (slot_stamp_[slot] == epoch_) continue;
      slot_stamp_[slot] = epoch_;
      for (Vertex y : inc_->slot_holders(slot)) {
        if (seen_vertex(y)) continue;
        vertex_stamp_[y] = epoch_;
        hops_[y] = hops_[x] + 1;
        parent_[y] = x;
        if (is_target(y)) return trace(y);
        queue_.push_back(y);
      }
    }
  }
  return {};
}

}  // namespace rig
