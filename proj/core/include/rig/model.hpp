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

#include "rig/random.hpp"

namespace rig {

/// Iterated logarithm ln(ln(2 + n)), the scale of every distance bound.
double loglog_scale(std::uint64_t n);

/// Smallest m with m >= n and m >= n * ln(n)^2 * ln(ln(2 + n)).
std::uint64_t default_attribute_count(std::uint64_t n);

/// Generation constants of one power-law random intersection graph.
struct ModelParams {
  std::uint64_t n = 2;
  std::uint64_t m = 1;
  double alpha = 0.5;
  double c0 = 1.0;
  std::uint64_t seed = 0;
  std::uint32_t trials = 1;

  /// Params with m chosen by default_attribute_count(n).
  static ModelParams with_default_m(std::uint64_t n, double alpha, double c0,
                                    std::uint64_t seed = 0,
                                    std::uint32_t trials = 1);

  /// Throws ConfigError naming the first violated constraint.
  void validate() const;

  /// c1 = c2 = c0^(1 + alpha): the sampler attains both power bounds.
  double tail_constant() const;
};

/// Pure Pareto law of the normalized weight: P(Z > t) = min(1, (c0/t)^(1+a)).
class TailLaw {
 public:
  TailLaw(double alpha, double c0);

  double alpha() const { return alpha_; }
  double c0() const { return c0_; }

  double survival(double t) const;

  /// Inverse of survival on (0, 1]: the t >= c0 with survival(t) = u.
  double quantile(double u) const;

  /// E[Z; lo < Z <= hi] in closed form, c0 <= lo <= hi (hi may be +inf).
  double truncated_mean(double lo, double hi) const;

 private:
  double alpha_;
  double c0_;
};

/// Normalized weights and the integer set sizes they induce.
struct VertexWeights {
  std::vector<double> tilde_z;
  std::vector<std::uint64_t> sizes;

  std::size_t size() const { return sizes.size(); }
};

/// min(m, round-half-up(z * sqrt(m / n))).
std::uint64_t set_size_for_weight(double tilde_z, std::uint64_t n,
                                  std::uint64_t m);

/// Weights rebuilt from integer sizes as |S| * sqrt(n / m).
VertexWeights weights_from_sizes(std::vector<std::uint64_t> sizes,
                                 std::uint64_t n, std::uint64_t m);

/// n i.i.d. draws c0 * U^(-1/(1+alpha)), U uniform on (0, 1].
VertexWeights sample_tilde_weights(const ModelParams& params, Rng& rng);

}  // namespace rig
