// Copyright 2026 The wqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <vector>

#include "wqaoa/graph.hpp"
#include "wqaoa/optimizer.hpp"
#include "wqaoa/portfolio.hpp"
#include "wqaoa/qaoa.hpp"
#include "wqaoa/skbias.hpp"
#include "wqaoa/spin_polynomial.hpp"
#include "wqaoa/tree_recursion.hpp"
#include "wqaoa/xy_mixer.hpp"

namespace {

using namespace wqaoa;

WeightedGraph cauchy_graph(int n) {
  const WeightedGraph topo = generate(GraphSpec::random_regular(n, 2, 1));
  Rng rng = make_rng(1, 2);
  return topo.with_weights(WeightDistribution::cauchy().sample(rng, topo.num_edges()));
}

void BM_MaxcutEnergy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  const QaoaSimulator sim(maxcut_poly(cauchy_graph(n)), Mixer::x());
  QaoaParams q{std::vector<double>(p, 0.3), std::vector<double>(p, 0.2), BetaConvention::kClosedForm};
  for (auto _ : state) benchmark::DoNotOptimize(sim.energy(q));
}
BENCHMARK(BM_MaxcutEnergy)->Args({12, 1})->Args({12, 3})->Args({16, 3})->Args({20, 1});

void BM_XyRingApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const XyRingMixer m(n, n / 2);
  SubspaceState s = dicke_state(n, n / 2);
  for (auto _ : state) {
    m.apply(s, 0.37);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_XyRingApply)->Arg(10)->Arg(14)->Arg(18);

void BM_PortfolioEnergy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PortfolioInstance inst = random_portfolio(n, 3);
  const QaoaSimulator sim(portfolio_poly(inst), Mixer::xy_ring(inst.k));
  const QaoaParams q{{0.4}, {0.3}, BetaConvention::kClosedForm};
  for (auto _ : state) benchmark::DoNotOptimize(sim.energy(q));
}
BENCHMARK(BM_PortfolioEnergy)->Arg(10)->Arg(14);

void BM_TreeNu(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const std::vector<double> gamma(p, 0.5), beta(p, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(nu_p(gamma, beta));
}
BENCHMARK(BM_TreeNu)->DenseRange(1, 4);

void BM_TreeFiniteEnergy(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const std::vector<double> gamma(p, 0.5), beta(p, 0.3);
  const auto dist = WeightDistribution::normal(1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(expected_energy_p_finite(100, 2, dist, gamma, beta));
}
BENCHMARK(BM_TreeFiniteEnergy)->DenseRange(1, 3);

void BM_MinimizeP2(benchmark::State& state) {
  const QaoaSimulator sim(maxcut_poly(cauchy_graph(10)), Mixer::x());
  auto f = [&](std::span<const double> x) { return -sim.energy(QaoaParams::from_flat(x)); };
  const std::vector<double> x0{0.2, 0.4, 0.3, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(minimize(f, x0, Bounds::qaoa_default(2)).value);
}
BENCHMARK(BM_MinimizeP2);

void BM_SkMax(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto J = sample_couplings({N, 0.0, 1.0, 5}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sk_max(J, N));
}
BENCHMARK(BM_SkMax)->Arg(12)->Arg(16)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
