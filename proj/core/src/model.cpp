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

#include "rig/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rig/types.hpp"

namespace rig {

double loglog_scale(std::uint64_t n) {
  return std::log(std::log(2.0 + static_cast<double>(n)));
}

std::uint64_t default_attribute_count(std::uint64_t n) {
  const double nd = static_cast<double>(n);
  const double ln = std::log(nd);
  const double m = std::ceil(nd * ln * ln * loglog_scale(n));
  return std::max<std::uint64_t>(n, static_cast<std::uint64_t>(m));
}

ModelParams ModelParams::with_default_m(std::uint64_t n, double alpha,
                                        double c0, std::uint64_t seed,
                                        std::uint32_t trials) {
  ModelParams p;
  p.n = n;
  p.m = default_attribute_count(n);
  p.alpha = alpha;
  p.c0 = c0;
  p.seed = seed;
  p.trials = trials;
  return p;
}

void ModelParams::validate() const {
  constexpr std::uint64_t kIdLimit = std::numeric_limits<std::uint32_t>::max();
  if (n < 2) throw ConfigError("n must be at least 2, got " + std::to_string(n));
  if (n > kIdLimit) throw ConfigError("n exceeds the 32-bit vertex id range");
  if (m < 1) throw ConfigError("m must be positive");
  if (m > kIdLimit) throw ConfigError("m exceeds the 32-bit attribute id range");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (!(c0 > 0.0) || !std::isfinite(c0)) {
    throw ConfigError("c0 must be a positive finite number");
  }
  if (trials < 1) throw ConfigError("trials must be positive");
}

double ModelParams::tail_constant() const { return std::pow(c0, 1.0 + alpha); }

TailLaw::TailLaw(double alpha, double c0) : alpha_(alpha), c0_(c0) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  if (!(c0 > 0.0)) throw ConfigError("c0 must be positive");
}

double TailLaw::survival(double t) const {
  if (t <= c0_) return 1.0;
  return std::pow(c0_ / t, 1.0 + alpha_);
}

double TailLaw::quantile(double u) const {
  return c0_ * std::pow(u, -1.0 / (1.0 + alpha_));
}

double TailLaw::truncated_mean(double lo, double hi) const {
  // Density (1+a) c0^(1+a) x^(-2-a) integrates x over (lo, hi] to
  // ((1+a)/a) c0^(1+a) (lo^-a - hi^-a).
  lo = std::max(lo, c0_);
  if (!(hi > lo)) return 0.0;
  const double scale = (1.0 + alpha_) / alpha_ * std::pow(c0_, 1.0 + alpha_);
  const double upper = std::isinf(hi) ? 0.0 : std::pow(hi, -alpha_);
  return scale * (std::pow(lo, -alpha_) - upper);
}

std::uint64_t set_size_for_weight(double tilde_z, std::uint64_t n,
                                  std::uint64_t m) {
  const double scaled =
      tilde_z * std::sqrt(static_cast<double>(m) / static_cast<double>(n));
  const double rounded = std::floor(scaled + 0.5);
  if (!(rounded < static_cast<double>(m))) return m;
  if (rounded <= 0.0) return 0;
  return static_cast<std::uint64_t>(rounded);
}

VertexWeights weights_from_sizes(std::vector<std::uint64_t> sizes,
                                 std::uint64_t n, std::uint64_t m) {
  VertexWeights w;
  const double factor =
      std::sqrt(static_cast<double>(n) / static_cast<double>(m));
  w.tilde_z.reserve(sizes.size());
  for (std::uint64_t s : sizes) w.tilde_z.push_back(static_cast<double>(s) * factor);
  w.sizes = std::move(sizes);
  return w;
}

VertexWeights sample_tilde_weights(const ModelParams& params, Rng& rng) {
  params.validate();
  const TailLaw law(params.alpha, params.c0);
  VertexWeights w;
  w.tilde_z.resize(params.n);
  w.sizes.resize(params.n);
  for (std::uint64_t i = 0; i < params.n; ++i) {
    // quantile(1) can round a hair below c0; clamp to the support.
    const double z = std::max(params.c0, law.quantile(uniform_half_open(rng)));
    w.tilde_z[i] = z;
    w.sizes[i] = set_size_for_weight(z, params.n, params.m);
  }
  return w;
}

}  // namespace rig
