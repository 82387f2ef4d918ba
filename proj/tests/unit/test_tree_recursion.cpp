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


#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "wqaoa/analytic_p1.hpp"
#include "wqaoa/graph.hpp"
#include "wqaoa/paramset.hpp"
#include "wqaoa/qaoa.hpp"
#include "wqaoa/tree_recursion.hpp"

using namespace wqaoa;

namespace {

constexpr double kPi = std::numbers::pi;
const double kNu1 = 1.0 / (2.0 * std::sqrt(std::exp(1.0)));

std::vector<double> random_vec(std::mt19937_64& rng, int p, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(static_cast<std::size_t>(p));
  for (double& x : v) x = u(rng);
  return v;
}

// p = 1: g(z1, z0, z-1) = 1/2 <z1|exp(i b X)|z0> <z0|exp(-i b X)|z-1>, spin +1 <-> index 0.
cplx g_oracle_p1(double beta, int z1, int z0, int zm1) {
  const oracle::Mat fwd = oracle::expm_i(oracle::pauli_x(), -beta);
  const oracle::Mat bwd = oracle::expm_i(oracle::pauli_x(), beta);
  auto idx = [](int s) { return s == 1 ? 0 : 1; };
  return 0.5 * fwd(idx(z1), idx(z0)) * bwd(idx(z0), idx(zm1));
}

std::uint32_t pack_p1(int z1, int z0, int zm1) {
  auto bit = [](int s) { return s == 1 ? 0U : 1U; };
  return bit(z1) | (bit(z0) << 1) | (bit(zm1) << 2);
}

WeightedGraph heawood() {
  std::vector<Edge> e;
  for (int i = 0; i < 14; ++i) e.push_back({i, (i + 1) % 14, 1.0});
  for (int i = 0; i < 14; i += 2) e.push_back({i, (i + 5) % 14, 1.0});
  return WeightedGraph(14, e);
}

}  // namespace

TEST_CASE("slot layout") {
  CHECK(num_configs(2) == 32);
  CHECK(config_slot(1, 2) == 0);
  CHECK(config_slot(2, 2) == 1);
  CHECK(config_slot(0, 2) == 2);
  CHECK(config_slot(-2, 2) == 3);
  CHECK(config_slot(-1, 2) == 4);
  const std::vector<double> gamma{0.3, 0.7};
  const auto G = gamma_vector(gamma);
  for (int r = 1; r <= 2; ++r) CHECK(G[config_slot(-r, 2)] == -G[config_slot(r, 2)]);
  CHECK(G[config_slot(0, 2)] == 0.0);
}

TEST_CASE("g at beta = 0") {
  const std::vector<double> beta{0.0};
  CHECK(g_value(beta, pack_p1(1, 1, 1)) == cplx(0.5, 0.0));
  CHECK(g_value(beta, pack_p1(-1, -1, -1)) == cplx(0.5, 0.0));
  CHECK(g_value(beta, pack_p1(-1, 1, 1)) == cplx(0.0, 0.0));
}

TEST_CASE("g matches matrix elements at p = 1") {
  for (double b : {0.2, -0.9, 1.4}) {
    const std::vector<double> beta{b};
    for (int z1 : {1, -1})
      for (int z0 : {1, -1})
        for (int zm : {1, -1}) {
          const cplx d = g_value(beta, pack_p1(z1, z0, zm)) - g_oracle_p1(b, z1, z0, zm);
          CHECK(std::abs(d) < 1e-14);
        }
  }
}

TEST_CASE("g sums to one") {
  std::mt19937_64 rng(3);
  for (int p = 1; p <= 4; ++p) {
    const auto beta = random_vec(rng, p, -kPi, kPi);
    cplx s{0.0, 0.0};
    for (const cplx& v : g_table(beta)) s += v;
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("zero gamma leaves the all-ones table") {
  const std::vector<double> gamma{0.0, 0.0};
  const std::vector<double> beta{0.4, 0.2};
  const auto ctx = TreeContext::make(gamma, beta);
  const HTable h = h_iterate_finite(3, WeightDistribution::exponential(1.0), ctx, HTable::ones(2));
  for (const cplx& v : h.values) CHECK(std::abs(v - 1.0) < 1e-14);
  const HTable hl = h_iterate_limit(2.0, ctx, HTable::ones(2));
  for (const cplx& v : hl.values) CHECK(std::abs(v - 1.0) < 1e-14);
}

TEST_CASE("p = 1 unweighted iteration matches direct expansion") {
  const double gamma = 0.6;
  const double beta = 0.3;
  const int D = 3;
  const std::vector<double> gv{gamma};
  const std::vector<double> bv{beta};
  const auto ctx = TreeContext::make(gv, bv);
  HTable h = HTable::ones(1);
  std::vector<cplx> ref(8, cplx{1.0, 0.0});
  for (int level = 0; level < 2; ++level) {
    h = h_iterate_finite(D, WeightDistribution::point_mass(1.0), ctx, h);
    std::vector<cplx> next(8);
    for (int v1 : {1, -1})
      for (int v0 : {1, -1})
        for (int vm : {1, -1}) {
          cplx acc{0.0, 0.0};
          for (int u1 : {1, -1})
            for (int u0 : {1, -1})
              for (int um : {1, -1}) {
                const double x = gamma * (u1 * v1 - um * vm) / 2.0;
                acc += ref[pack_p1(u1, u0, um)] * g_oracle_p1(beta, u1, u0, um) * std::cos(x);
              }
          next[pack_p1(v1, v0, vm)] = std::pow(acc, D);
        }
    ref = next;
    for (int z = 0; z < 8; ++z) CHECK(std::abs(h.values[z] - ref[z]) < 1e-13);
  }
}

TEST_CASE("normalisation at every level") {
  std::mt19937_64 rng(5);
  for (int p = 1; p <= 3; ++p) {
    const auto gamma = random_vec(rng, p, -1.5, 1.5);
    const auto beta = random_vec(rng, p, -1.0, 1.0);
    const auto ctx = TreeContext::make(gamma, beta);
    HTable hf = HTable::ones(p);
    HTable hl = HTable::ones(p);
    const WeightExpectation e(WeightDistribution::normal(1.0, 0.5));
    for (int level = 0; level < p; ++level) {
      hf = h_iterate_finite(4, e, ctx, hf);
      hl = h_iterate_limit(1.25, ctx, hl);
      CHECK(std::abs(normalization(ctx, hf) - 1.0) < 1e-10);
      CHECK(std::abs(normalization(ctx, hl) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("limit iteration") {
  const std::vector<double> gamma{0.8};
  const std::vector<double> beta{0.35};
  const auto ctx = TreeContext::make(gamma, beta);
  const std::vector<double> small{0.8 / 1000.0};
  const auto ctx_small = TreeContext::make(small, beta);
  const HTable hl = h_iterate_limit(1.0, ctx, HTable::ones(1));
  const HTable hf = h_iterate_finite(1'000'000, WeightDistribution::point_mass(1.0), ctx_small, HTable::ones(1));
  for (int z = 0; z < 8; ++z) CHECK(std::abs(hl.values[z] - hf.values[z]) < 1e-5);

  const double m2 = 2.3;
  const std::vector<double> scaled{0.8 * std::sqrt(m2)};
  const HTable a = h_iterate_limit(m2, ctx, HTable::ones(1));
  const HTable b = h_iterate_limit(1.0, TreeContext::make(scaled, beta), HTable::ones(1));
  for (int z = 0; z < 8; ++z) CHECK(std::abs(a.values[z] - b.values[z]) < 1e-14);
}

TEST_CASE("nu_p anchors") {
  const std::vector<double> zero{0.0, 0.0};
  const std::vector<double> beta2{0.3, 0.1};
  CHECK(std::abs(nu_p(zero, beta2)) < 1e-14);
  const std::vector<double> g1{1.0};
  const std::vector<double> b1{kPi / 8};
  CHECK(nu_p(g1, b1) == doctest::Approx(kNu1).epsilon(1e-12));
  CHECK(sk_value_p(g1, b1) == nu_p(g1, b1));
}

TEST_CASE("tabulated p = 2 and p = 3 points are stationary") {
  const InfParamTable table = InfParamTable::builtin();
  for (int p : {2, 3}) {
    const QaoaParams q = table.get(p);
    std::vector<double> x = q.flatten();
    const double h = 1e-5;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto xp = x;
      auto xm = x;
      xp[i] += h;
      xm[i] -= h;
      const auto fp = QaoaParams::from_flat(xp);
      const auto fm = QaoaParams::from_flat(xm);
      const double d = (nu_p(fp.gamma, fp.beta) - nu_p(fm.gamma, fm.beta)) / (2 * h);
      CHECK(std::abs(d) < 1e-4);
    }
  }
}

TEST_CASE("weighted limit coefficient") {
  const auto pm = WeightDistribution::point_mass(1.0);
  const std::vector<double> gamma{0.6, 1.1};
  const std::vector<double> beta{0.4, 0.2};
  CHECK(theta_p_limit(pm, gamma, beta) == doctest::Approx(nu_p(gamma, beta)).epsilon(1e-12));
  for (const auto& d : {WeightDistribution::exponential(1.0), WeightDistribution::normal(1.0, 0.5)}) {
    for (double gp = 0.0; gp <= 3.0; gp += 0.25) {
      const std::vector<double> g{gp};
      const std::vector<double> b{kPi / 8};
      CHECK(std::abs(theta_p_limit(d, g, b) - theta1_limit(d, gp)) < 1e-9);
    }
  }
}

TEST_CASE("weighted and unweighted limits are related by the rms weight") {
  std::mt19937_64 rng(17);
  for (const auto& d : {WeightDistribution::exponential(1.0), WeightDistribution::normal(1.0, 0.5)}) {
    const double mu = *d.mean();
    const double rms = std::sqrt(*d.second_moment());
    for (int p = 1; p <= 2; ++p) {
      for (int t = 0; t < 10; ++t) {
        const auto gamma = random_vec(rng, p, -1.5, 1.5);
        const auto beta = random_vec(rng, p, -1.0, 1.0);
        std::vector<double> gs = gamma;
        for (double& x : gs) x /= rms;
        const double lhs = nu_p(gamma, beta);
        const double rhs = mu / rms * theta_p_limit(d, gs, beta);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1e-3, std::abs(lhs)));
      }
    }
  }
}

TEST_CASE("gamma argmax scales with the rms weight") {
  const auto d = WeightDistribution::exponential(0.5);
  const double rms = std::sqrt(*d.second_moment());
  const std::vector<double> beta{kPi / 8};
  const double step = 1e-3;
  double best_nu = -1.0, arg_nu = 0.0, best_th = -1.0, arg_th = 0.0;
  for (double g = step; g < 3.0; g += step) {
    const std::vector<double> gv{g};
    const double v = nu_p(gv, beta);
    if (v > best_nu) best_nu = v, arg_nu = g;
  }
  for (double g = step / 10; g < 3.0 / rms; g += step / 10) {
    const std::vector<double> gv{g};
    const double v = theta_p_limit(d, gv, beta);
    if (v > best_th) best_th = v, arg_th = g;
  }
  CHECK(std::abs(arg_th - arg_nu / rms) <= step);
}

TEST_CASE("finite-D energy at p = 1 equals the closed form") {
  const std::vector<double> beta{kPi / 8};
  for (const auto& d : {WeightDistribution::exponential(1.0), WeightDistribution::normal(1.0, 0.5),
                        WeightDistribution::uniform_plus()}) {
    for (int D : {1, 2, 5, 20}) {
      for (double g : {0.1, 0.5, 1.3}) {
        const std::vector<double> gv{g};
        CHECK(std::abs(expected_energy_p_finite(30, D, d, gv, beta) - expected_energy_general(30, D, d, g)) < 1e-9);
      }
    }
  }
  const std::vector<double> zero{0.0, 0.0};
  const std::vector<double> b2{0.3, 0.2};
  CHECK(expected_energy_p_finite(12, 2, WeightDistribution::exponential(0.5), zero, b2) ==
        doctest::Approx(12 * 3 * 2.0 / 4));
}

TEST_CASE("finite-D energy at p = 2 matches sampled simulation on the Heawood graph") {
  const WeightedGraph topo = heawood();
  REQUIRE(topo.regular_degree() == 3);
  REQUIRE(girth(topo) == 6);
  const auto dist = WeightDistribution::exponential(1.0);
  const QaoaParams params{{0.35, 0.6}, {0.45, 0.25}, BetaConvention::kClosedForm};
  const int M = 3000;
  Rng rng = make_rng(23);
  double s = 0.0, s2 = 0.0;
  for (int m = 0; m < M; ++m) {
    const double e = qaoa_energy(maxcut_poly(topo.with_weights(dist.sample(rng, topo.num_edges()))), params);
    s += e;
    s2 += e * e;
  }
  const double mean = s / M;
  const double se = std::sqrt((s2 / M - mean * mean) / (M - 1));
  CHECK(std::abs(mean - expected_energy_p_finite(14, 2, dist, params.gamma, params.beta)) < 3 * se);
}

TEST_CASE("sampled weight expectations") {
  const auto d = WeightDistribution::normal(1.0, 0.5);
  const auto mc = WeightExpectation::monte_carlo(d, 200'000, 3);
  CHECK(mc.is_sampled());
  CHECK(std::abs(mc.cos(0.7) - d.cos_expectation(0.7)) < 5e-3);
  CHECK(std::abs(mc.mean() - 1.0) < 5e-3);
  CHECK(std::abs(mc.second_moment() - 1.25) < 1e-2);
  const std::vector<double> g{0.4};
  const std::vector<double> b{0.3};
  CHECK(std::abs(expected_energy_p_finite(10, 2, mc, g, b) - expected_energy_p_finite(10, 2, d, g, b)) < 0.05);
}

TEST_CASE("depth five evaluates quickly") {
  const std::vector<double> gamma{0.2, 0.4, 0.5, 0.6, 0.7};
  const std::vector<double> beta{0.5, 0.4, 0.3, 0.2, 0.1};
  const auto t0 = std::chrono::steady_clock::now();
  const double v = nu_p(gamma, beta);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(std::isfinite(v));
  CHECK(secs < 10.0);
}
