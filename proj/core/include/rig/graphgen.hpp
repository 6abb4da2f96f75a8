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
#include <span>
#include <vector>

#include "rig/model.hpp"
#include "rig/random.hpp"
#include "rig/types.hpp"

namespace rig {

/// Vertex-attribute incidence of a random intersection graph.
///
/// Two vertices are adjacent iff their attribute sets intersect; the edge list
/// of the intersection graph is never materialized. Both directions are stored
/// in CSR form. The inverted side only keeps attributes held by at least one
/// vertex ("slots"), so memory is proportional to the incidence count rather
/// than to m.
class BipartiteIncidence {
 public:
  BipartiteIncidence() = default;

  /// Builds from per-vertex attribute lists. Each list must be strictly
  /// increasing with entries below m; throws std::invalid_argument otherwise.
  static BipartiteIncidence from_sets(
      std::uint64_t m, const std::vector<std::vector<Attribute>>& sets);

  /// Builds from CSR arrays (offsets has n + 1 entries), same checks.
  static BipartiteIncidence from_csr(std::uint64_t m,
                                     std::vector<std::uint64_t> offsets,
                                     std::vector<Attribute> attributes);

  std::uint64_t n() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::uint64_t m() const { return m_; }
  std::uint64_t incidence_count() const { return attributes_.size(); }

  std::span<const Attribute> set(Vertex v) const {
    return {attributes_.data() + offsets_[v],
            attributes_.data() + offsets_[v + 1]};
  }
  std::size_t set_size(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Vertices holding attribute w, increasing. Empty for unused attributes.
  std::span<const Vertex> holders(Attribute w) const;

  std::size_t slot_count() const { return slot_attributes_.size(); }
  /// Slot index of every entry of set(v), aligned with set(v).
  std::span<const std::uint32_t> slots(Vertex v) const {
    return {entry_slots_.data() + offsets_[v],
            entry_slots_.data() + offsets_[v + 1]};
  }
  std::span<const Vertex> slot_holders(std::uint32_t slot) const {
    return {holders_.data() + holder_offsets_[slot],
            holders_.data() + holder_offsets_[slot + 1]};
  }
  Attribute slot_attribute(std::uint32_t slot) const {
    return slot_attributes_[slot];
  }

  /// Rebuilds the inverted side from the sets and compares it with the
  /// stored one.
  bool transpose_consistent() const;

  std::span<const std::uint64_t> raw_offsets() const { return offsets_; }
  std::span<const Attribute> raw_attributes() const { return attributes_; }

  friend bool operator==(const BipartiteIncidence& a,
                         const BipartiteIncidence& b) {
    return a.m_ == b.m_ && a.offsets_ == b.offsets_ &&
           a.attributes_ == b.attributes_;
  }

 private:
  void build_inverted();

  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<Attribute> attributes_;
  std::vector<std::uint32_t> entry_slots_;
  std::vector<Attribute> slot_attributes_;
  std::vector<std::uint64_t> holder_offsets_;
  std::vector<Vertex> holders_;
};

/// Weights plus the incidence they generated.
struct GeneratedGraph {
  VertexWeights weights;
  BipartiteIncidence incidence;
};

/// Uniform z-subset of {0, ..., m-1}, sorted. Throws std::invalid_argument
/// when z > m.
std::vector<Attribute> sample_subset(std::uint64_t m, std::uint64_t z, Rng& rng);

/// Independent uniform subsets with the given sizes.
BipartiteIncidence generate_incidence(std::uint64_t m,
                                      std::span<const std::uint64_t> sizes,
                                      Rng& rng);

/// Samples weights, then one uniform subset per vertex.
GeneratedGraph generate(const ModelParams& params, Rng& rng);

/// Throws std::invalid_argument when u == v.
bool adjacent(const BipartiteIncidence& inc, Vertex u, Vertex v);

/// Sorted distinct neighbours of u.
std::vector<Vertex> neighbors(const BipartiteIncidence& inc, Vertex u);

}  // namespace rig
