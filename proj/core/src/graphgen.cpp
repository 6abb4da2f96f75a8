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

#include "rig/graphgen.hpp"

#include <algorithm>
#include <new>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace rig {
namespace {

constexpr std::uint64_t kLinearProbeLimit = 48;

void check_lists(std::uint64_t m, std::span<const std::uint64_t> offsets,
                 std::span<const Attribute> attributes) {
  if (offsets.empty() || offsets.front() != 0 ||
      offsets.back() != attributes.size()) {
    throw std::invalid_argument("malformed incidence offsets");
  }
  for (std::size_t v = 0; v + 1 < offsets.size(); ++v) {
    if (offsets[v] > offsets[v + 1]) {
      throw std::invalid_argument("malformed incidence offsets");
    }
    for (std::uint64_t i = offsets[v]; i < offsets[v + 1]; ++i) {
      if (attributes[i] >= m) {
        throw std::invalid_argument("attribute id " +
                                    std::to_string(attributes[i]) +
                                    " out of range for vertex " +
                                    std::to_string(v));
      }
      if (i > offsets[v] && attributes[i - 1] >= attributes[i]) {
        throw std::invalid_argument("attribute list of vertex " +
                                    std::to_string(v) +
                                    " is not strictly increasing");
      }
    }
  }
}

// Floyd's sampler: for j = m-z .. m-1 draw t in [0, j]; take t unless
// already taken, else take j. Every z-subset comes out with probability
// 1 / C(m, z), using O(z) draws and O(z) memory.
std::vector<Attribute> floyd_sample(std::uint64_t m, std::uint64_t z, Rng& rng) {
  std::vector<Attribute> out;
  out.reserve(z);
  if (z <= kLinearProbeLimit) {
    for (std::uint64_t j = m - z; j < m; ++j) {
      const auto t = static_cast<Attribute>(uniform_below(rng, j + 1));
      const bool seen = std::find(out.begin(), out.end(), t) != out.end();
      out.push_back(seen ? static_cast<Attribute>(j) : t);
    }
  } else {
    std::unordered_set<Attribute> taken;
    taken.reserve(2 * z);
    for (std::uint64_t j = m - z; j < m; ++j) {
      const auto t = static_cast<Attribute>(uniform_below(rng, j + 1));
      const Attribute pick = taken.insert(t).second ? t : static_cast<Attribute>(j);
      if (pick != t) taken.insert(pick);
      out.push_back(pick);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BipartiteIncidence BipartiteIncidence::from_sets(
    std::uint64_t m, const std::vector<std::vector<Attribute>>& sets) {
  std::vector<std::uint64_t> offsets(sets.size() + 1, 0);
  for (std::size_t v = 0; v < sets.size(); ++v) {
    offsets[v + 1] = offsets[v] + sets[v].size();
  }
  std::vector<Attribute> flat;
  flat.reserve(offsets.back());
  for (const auto& s : sets) flat.insert(flat.end(), s.begin(), s.end());
  return from_csr(m, std::move(offsets), std::move(flat));
}

BipartiteIncidence BipartiteIncidence::from_csr(std::uint64_t m,
                                                std::vector<std::uint64_t> offsets,
                                                std::vector<Attribute> attributes) {
  check_lists(m, offsets, attributes);
  BipartiteIncidence inc;
  inc.m_ = m;
  inc.offsets_ = std::move(offsets);
  inc.attributes_ = std::move(attributes);
  try {
    inc.build_inverted();
  } catch (const std::bad_alloc&) {
    throw ResourceError("out of memory building the inverted attribute index",
                        inc.attributes_.size());
  }
  return inc;
}

void BipartiteIncidence::build_inverted() {
  const std::uint64_t total = attributes_.size();
  // (attribute, vertex) packed into one key; sorting groups holders by
  // attribute with vertices increasing inside each group.
  std::vector<std::uint64_t> keys(total);
  for (std::uint64_t v = 0; v < n(); ++v) {
    for (std::uint64_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
      keys[i] = (static_cast<std::uint64_t>(attributes_[i]) << 32) | v;
    }
  }
  std::sort(keys.begin(), keys.end());

  slot_attributes_.clear();
  holder_offsets_.assign(1, 0);
  holders_.resize(total);
  entry_slots_.resize(total);
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::uint64_t i = 0; i < total; ++i) {
    const auto w = static_cast<Attribute>(keys[i] >> 32);
    const auto v = static_cast<Vertex>(keys[i] & 0xffffffffULL);
    if (slot_attributes_.empty() || slot_attributes_.back() != w) {
      if (!slot_attributes_.empty()) holder_offsets_.push_back(i);
      slot_attributes_.push_back(w);
    }
    holders_[i] = v;
    // Within a vertex, attributes arrive in increasing order, which is the
    // order of set(v).
    entry_slots_[cursor[v]++] = static_cast<std::uint32_t>(slot_attributes_.size() - 1);
  }
  holder_offsets_.push_back(total);
  if (slot_attributes_.empty()) holder_offsets_.assign(1, 0);
}

std::span<const Vertex> BipartiteIncidence::holders(Attribute w) const {
  const auto it =
      std::lower_bound(slot_attributes_.begin(), slot_attributes_.end(), w);
  if (it == slot_attributes_.end() || *it != w) return {};
  return slot_holders(static_cast<std::uint32_t>(it - slot_attributes_.begin()));
}

bool BipartiteIncidence::transpose_consistent() const {
  std::vector<std::vector<Vertex>> rebuilt;
  std::vector<Attribute> order(attributes_.begin(), attributes_.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  if (order != slot_attributes_) return false;
  rebuilt.resize(order.size());
  for (Vertex v = 0; v < n(); ++v) {
    for (Attribute w : set(v)) {
      const auto slot = std::lower_bound(order.begin(), order.end(), w) - order.begin();
      rebuilt[slot].push_back(v);
    }
  }
  for (std::size_t s = 0; s < rebuilt.size(); ++s) {
    const auto stored = slot_holders(static_cast<std::uint32_t>(s));
    if (!std::equal(stored.begin(), stored.end(), rebuilt[s].begin(),
                    rebuilt[s].end())) {
      return false;
    }
  }
  for (Vertex v = 0; v < n(); ++v) {
    const auto s = set(v);
    const auto sl = slots(v);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (slot_attributes_[sl[i]] != s[i]) return false;
    }
  }
  return true;
}

std::vector<Attribute> sample_subset(std::uint64_t m, std::uint64_t z, Rng& rng) {
  if (z > m) {
    throw std::invalid_argument("subset size " + std::to_string(z) +
                                " exceeds ground set size " + std::to_string(m));
  }
  if (z == 0) return {};
  if (z == m) {
    std::vector<Attribute> all(m);
    std::iota(all.begin(), all.end(), Attribute{0});
    return all;
  }
  if (z <= m / 2) return floyd_sample(m, z, rng);

  // Dense case: complement of a uniform (m - z)-subset is a uniform z-subset.
  const std::vector<Attribute> excluded = floyd_sample(m, m - z, rng);
  std::vector<Attribute> out;
  out.reserve(z);
  std::size_t e = 0;
  for (std::uint64_t w = 0; w < m; ++w) {
    if (e < excluded.size() && excluded[e] == w) {
      ++e;
    } else {
      out.push_back(static_cast<Attribute>(w));
    }
  }
  return out;
}

BipartiteIncidence generate_incidence(std::uint64_t m,
                                      std::span<const std::uint64_t> sizes,
                                      Rng& rng) {
  std::vector<std::uint64_t> offsets(sizes.size() + 1, 0);
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    offsets[v + 1] = offsets[v] + sizes[v];
  }
  const std::uint64_t total = offsets.back();
  std::vector<Attribute> flat;
  try {
    flat.reserve(total);
  } catch (const std::bad_alloc&) {
    throw ResourceError("out of memory allocating " + std::to_string(total) +
                            " incidences",
                        total);
  } catch (const std::length_error&) {
    throw ResourceError("incidence count " + std::to_string(total) +
                            " exceeds addressable memory",
                        total);
  }
  for (std::uint64_t z : sizes) {
    const auto subset = sample_subset(m, z, rng);
    flat.insert(flat.end(), subset.begin(), subset.end());
  }
  return BipartiteIncidence::from_csr(m, std::move(offsets), std::move(flat));
}

GeneratedGraph generate(const ModelParams& params, Rng& rng) {
  GeneratedGraph g;
  g.weights = sample_tilde_weights(params, rng);
  g.incidence = generate_incidence(params.m, g.weights.sizes, rng);
  return g;
}

bool adjacent(const BipartiteIncidence& inc, Vertex u, Vertex v) {
  if (u == v) {
    throw std::invalid_argument("adjacency of a vertex with itself is undefined");
  }
  const auto a = inc.set(u);
  const auto b = inc.set(v);
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

std::vector<Vertex> neighbors(const BipartiteIncidence& inc, Vertex u) {
  std::vector<Vertex> out;
  for (std::uint32_t slot : inc.slots(u)) {
    for (Vertex v : inc.slot_holders(slot)) {
      if (v != u) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rig
