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

#include "rig/graphops.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rig {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint64_t> size_;
};

}  // namespace

std::vector<Vertex> ComponentLabeling::giant_members() const {
  std::vector<Vertex> out;
  if (sizes.empty()) return out;
  out.reserve(sizes[giant]);
  for (Vertex v = 0; v < label.size(); ++v) {
    if (label[v] == giant) out.push_back(v);
  }
  return out;
}

ComponentLabeling components(const BipartiteIncidence& inc) {
  const auto n = static_cast<std::size_t>(inc.n());
  DisjointSets dsu(n);
  for (std::uint32_t slot = 0; slot < inc.slot_count(); ++slot) {
    const auto holders = inc.slot_holders(slot);
    for (std::size_t i = 1; i < holders.size(); ++i) dsu.unite(holders[0], holders[i]);
  }

  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  ComponentLabeling out;
  out.label.assign(n, kUnset);
  std::vector<std::uint32_t> root_label(n, kUnset);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = dsu.find(v);
    if (root_label[r] == kUnset) {
      root_label[r] = static_cast<std::uint32_t>(out.sizes.size());
      out.sizes.push_back(0);
    }
    out.label[v] = root_label[r];
    ++out.sizes[root_label[r]];
  }
  for (std::uint32_t c = 0; c < out.sizes.size(); ++c) {
    if (out.sizes[c] > out.sizes[out.giant]) out.giant = c;
  }
  return out;
}

BfsWorkspace::BfsWorkspace(const BipartiteIncidence& inc)
    : inc_(&inc),
      vertex_stamp_(inc.n(), 0),
      slot_stamp_(inc.slot_count(), 0),
      hops_(inc.n(), kUnreachable),
      parent_(inc.n(), 0),
      vertex_stamp_b_(inc.n(), 0),
      slot_stamp_b_(inc.slot_count(), 0),
      hops_b_(inc.n(), kUnreachable) {
  queue_.reserve(inc.n());
}

void BfsWorkspace::begin(Vertex source) {
  if (source >= inc_->n()) throw std::out_of_range("vertex id out of range");
  if (++epoch_ == 0) {
    std::fill(vertex_stamp_.begin(), vertex_stamp_.end(), 0);
    std::fill(slot_stamp_.begin(), slot_stamp_.end(), 0);
    std::fill(vertex_stamp_b_.begin(), vertex_stamp_b_.end(), 0);
    std::fill(slot_stamp_b_.begin(), slot_stamp_b_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  queue_.push_back(source);
  vertex_stamp_[source] = epoch_;
  hops_[source] = 0;
  parent_[source] = source;
}

DistanceResult BfsWorkspace::trace(Vertex target) const {
  DistanceResult r;
  r.hops = hops_[target];
  r.path.resize(r.hops + 1);
  Vertex x = target;
  for (std::size_t i = r.path.size(); i-- > 0;) {
    r.path[i] = x;
    x = parent_[x];
  }
  return r;
}

std::vector<Hops> BfsWorkspace::all_from(Vertex source) {
  nearest(source, [](Vertex) { return false; });
  std::vector<Hops> out(inc_->n(), kUnreachable);
  for (Vertex v : queue_) out[v] = hops_[v];
  return out;
}

Hops BfsWorkspace::distance(Vertex u, Vertex v) {
  if (v >= inc_->n()) throw std::out_of_range("vertex id out of range");
  begin(u);
  if (u == v) return 0;
  queue_b_.clear();
  queue_b_.push_back(v);
  vertex_stamp_b_[v] = epoch_;
  hops_b_[v] = 0;

  struct Side {
    std::vector<Vertex>* queue;
    std::vector<std::uint32_t>* vstamp;
    std::vector<std::uint32_t>* sstamp;
    std::vector<Hops>* hops;
    std::size_t lo;
  };
  Side a{&queue_, &vertex_stamp_, &slot_stamp_, &hops_, 0};
  Side b{&queue_b_, &vertex_stamp_b_, &slot_stamp_b_, &hops_b_, 0};
  const auto cost = [&](const Side& s) {
    std::uint64_t c = 0;
    for (std::size_t i = s.lo; i < s.queue->size(); ++i) c += inc_->set_size((*s.queue)[i]);
    return c;
  };

  while (a.lo < a.queue->size() && b.lo < b.queue->size()) {
    const bool forward = cost(a) <= cost(b);
    Side& own = forward ? a : b;
    const Side& other = forward ? b : a;
    Hops best = kUnreachable;
    const std::size_t end = own.queue->size();
    for (std::size_t i = own.lo; i < end; ++i) {
      const Vertex x = (*own.queue)[i];
      const Hops next = (*own.hops)[x] + 1;
      for (std::uint32_t slot : inc_->slots(x)) {
        if ((*own.sstamp)[slot] == epoch_) continue;
        (*own.sstamp)[slot] = epoch_;
        for (Vertex y : inc_->slot_holders(slot)) {
          if ((*other.vstamp)[y] == epoch_) best = std::min(best, next + (*other.hops)[y]);
          if ((*own.vstamp)[y] == epoch_) continue;
          (*own.vstamp)[y] = epoch_;
          (*own.hops)[y] = next;
          own.queue->push_back(y);
        }
      }
    }
    own.lo = end;
    if (best != kUnreachable) return best;
  }
  return kUnreachable;
}

DistanceResult bfs_distance(const BipartiteIncidence& inc, Vertex u, Vertex v) {
  if (v >= inc.n()) throw std::out_of_range("vertex id out of range");
  BfsWorkspace ws(inc);
  return ws.nearest(u, [v](Vertex x) { return x == v; });
}

std::vector<Hops> distances_from(const BipartiteIncidence& inc, Vertex u) {
  BfsWorkspace ws(inc);
  return ws.all_from(u);
}

BipartiteLevels bipartite_levels(const BipartiteIncidence& inc, Vertex u) {
  if (u >= inc.n()) throw std::out_of_range("vertex id out of range");
  BipartiteLevels out;
  out.vertex_level.assign(inc.n(), kUnreachable);
  out.slot_level.assign(inc.slot_count(), kUnreachable);
  // Plain alternating search: vertices and attribute slots share one queue.
  struct Node {
    bool is_slot;
    std::uint32_t id;
  };
  std::vector<Node> queue{{false, u}};
  out.vertex_level[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Node node = queue[head];
    if (!node.is_slot) {
      const Hops next = out.vertex_level[node.id] + 1;
      for (std::uint32_t slot : inc.slots(node.id)) {
        if (out.slot_level[slot] != kUnreachable) continue;
        out.slot_level[slot] = next;
        queue.push_back({true, slot});
      }
    } else {
      const Hops next = out.slot_level[node.id] + 1;
      for (Vertex y : inc.slot_holders(node.id)) {
        if (out.vertex_level[y] != kUnreachable) continue;
        out.vertex_level[y] = next;
        queue.push_back({false, y});
      }
    }
  }
  return out;
}

Vertex maximal_vertex(const VertexWeights& weights) {
  if (weights.sizes.empty()) throw std::invalid_argument("empty weight vector");
  const auto it = std::max_element(weights.sizes.begin(), weights.sizes.end());
  return static_cast<Vertex>(it - weights.sizes.begin());
}

}  // namespace rig
