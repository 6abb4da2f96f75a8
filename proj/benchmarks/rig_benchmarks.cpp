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

#include <benchmark/benchmark.h>

#include "rig/graphgen.hpp"
#include "rig/graphops.hpp"
#include "rig/hubnav.hpp"
#include "rig/hypergeom.hpp"
#include "rig/model.hpp"
#include "rig/random.hpp"

namespace {

rig::GeneratedGraph make_graph(std::uint64_t n) {
  rig::Rng rng = rig::make_stream(1, n, 0);
  return rig::generate(rig::ModelParams::with_default_m(n, 0.8, 1.0), rng);
}

void BM_Generate(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto g = make_graph(n);
    benchmark::DoNotOptimize(g.incidence.incidence_count());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Generate)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Components(benchmark::State& state) {
  const auto g = make_graph(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    auto c = rig::components(g.incidence);
    benchmark::DoNotOptimize(c.giant);
  }
}
BENCHMARK(BM_Components)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BfsAllFrom(benchmark::State& state) {
  const auto g = make_graph(static_cast<std::uint64_t>(state.range(0)));
  rig::BfsWorkspace ws(g.incidence);
  const rig::Vertex src = rig::maximal_vertex(g.weights);
  for (auto _ : state) {
    auto d = ws.all_from(src);
    benchmark::DoNotOptimize(d.data());
  }
}
BENCHMARK(BM_BfsAllFrom)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_PairDistance(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto g = make_graph(n);
  rig::BfsWorkspace ws(g.incidence);
  rig::Rng rng(9);
  for (auto _ : state) {
    const auto u = static_cast<rig::Vertex>(rig::uniform_below(rng, n));
    const auto v = static_cast<rig::Vertex>(rig::uniform_below(rng, n));
    benchmark::DoNotOptimize(ws.distance(u, v));
  }
}
BENCHMARK(BM_PairDistance)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);

void BM_Certificate(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto g = make_graph(n);
  const auto dec = rig::decompose(g.weights, rig::thresholds(n, 0.8, 1.0));
  const rig::Vertex u_max = rig::maximal_vertex(g.weights);
  rig::BfsWorkspace ws(g.incidence);
  rig::Rng rng(9);
  for (auto _ : state) {
    const auto u = static_cast<rig::Vertex>(rig::uniform_below(rng, n));
    const auto v = static_cast<rig::Vertex>(rig::uniform_below(rng, n));
    if (u == v) continue;
    auto c = rig::loglog_certificate(ws, g.incidence, dec, u, v, u_max);
    benchmark::DoNotOptimize(c.exact_hops);
  }
}
BENCHMARK(BM_Certificate)->Arg(100000)->Unit(benchmark::kMicrosecond);

void BM_HypergeomSf(benchmark::State& state) {
  const rig::HypergeomParams p{30, 30, 1000};
  for (auto _ : state) benchmark::DoNotOptimize(rig::hypergeom_sf(p, 3));
}
BENCHMARK(BM_HypergeomSf);

}  // namespace

BENCHMARK_MAIN();
