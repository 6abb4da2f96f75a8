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

// Independent reference implementations. None of these call into the
// library's search or probability code; they work on explicit adjacency
// matrices, integer binomials and exhaustive enumeration.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rig/graphgen.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

inline BigInt choose(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

inline Rational hypergeom_pmf(std::uint64_t j, std::uint64_t k, std::uint64_t m,
                              std::int64_t r) {
  if (r < 0 || std::uint64_t(r) > j || std::uint64_t(r) > k) return 0;
  if (j - std::uint64_t(r) > m - k) return 0;
  return Rational(choose(k, r) * choose(m - k, j - r), choose(m, j));
}

inline Rational hypergeom_sf(std::uint64_t j, std::uint64_t k, std::uint64_t m,
                             std::int64_t t) {
  Rational s = 0;
  for (std::int64_t r = std::max<std::int64_t>(t, 0); r <= std::int64_t(std::min(j, k)); ++r)
    s += hypergeom_pmf(j, k, m, r);
  return s;
}

/// (m - k)_j / (m)_j as a product of falling factorials.
inline Rational no_intersection(std::uint64_t j, std::uint64_t k, std::uint64_t m) {
  if (j + k > m) return 0;
  BigInt num = 1, den = 1;
  for (std::uint64_t i = 0; i < j; ++i) {
    num *= m - k - i;
    den *= m - i;
  }
  return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::vector<std::vector<rig::Attribute>> sets_of(const rig::BipartiteIncidence& inc) {
  std::vector<std::vector<rig::Attribute>> out(inc.n());
  for (rig::Vertex v = 0; v < inc.n(); ++v) {
    const auto s = inc.set(v);
    out[v].assign(s.begin(), s.end());
  }
  return out;
}

using Matrix = std::vector<std::vector<char>>;

/// Pairwise intersection test by scanning one list against the other.
inline Matrix adjacency(const std::vector<std::vector<rig::Attribute>>& sets) {
  const std::size_t n = sets.size();
  Matrix adj(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      bool hit = false;
      for (rig::Attribute a : sets[u]) {
        if (std::find(sets[v].begin(), sets[v].end(), a) != sets[v].end()) {
          hit = true;
          break;
        }
      }
      adj[u][v] = adj[v][u] = hit;
    }
  }
  return adj;
}

/// Component labels by BFS over the matrix, starting from the smallest
/// unlabelled vertex each time.
inline std::vector<std::uint32_t> bfs_labels(const Matrix& adj) {
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> label(n, kInf);
  std::uint32_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != kInf) continue;
    std::deque<std::size_t> q{s};
    label[s] = next;
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop_front();
      for (std::size_t y = 0; y < n; ++y) {
        if (adj[x][y] && label[y] == kInf) {
          label[y] = next;
          q.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Matrix& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (adj[u][v]) d[u][v] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] == kInf) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

/// P(|S_b ∩ [0,d)| >= b/2 | S_b ∩ [0,a) nonempty) over all b-subsets of [0,m).
inline Rational overlap_by_enumeration(unsigned a, unsigned b, unsigned d, unsigned m) {
  BigInt hits = 0, good = 0;
  std::vector<char> pick(m, 0);
  std::fill(pick.end() - b, pick.end(), 1);
  do {
    unsigned in_a = 0, in_d = 0;
    for (unsigned i = 0; i < m; ++i) {
      if (!pick[i]) continue;
      in_a += i < a;
      in_d += i < d;
    }
    if (in_a == 0) continue;
    ++hits;
    if (2 * in_d >= b) ++good;
  } while (std::next_permutation(pick.begin(), pick.end()));
  if (hits == 0) return 0;
  return Rational(good, hits);
}

}  // namespace oracle
