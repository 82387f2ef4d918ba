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

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wqaoa/analytic_p1.hpp"
#include "wqaoa/graph.hpp"
#include "wqaoa/portfolio.hpp"
#include "wqaoa/qaoa.hpp"
#include "wqaoa/statevector.hpp"
#include "wqaoa/xy_mixer.hpp"

using namespace wqaoa;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  StateVector s(n);
  double norm = 0.0;
  for (cplx& a : s.amplitudes()) {
    a = {nd(rng), nd(rng)};
    norm += std::norm(a);
  }
  for (cplx& a : s.amplitudes()) a /= std::sqrt(norm);
  return s;
}

std::vector<double> random_cost(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> c(dim);
  for (double& x : c) x = u(rng);
  return c;
}

WeightedGraph weighted(const WeightedGraph& topo, const WeightDistribution& d, std::uint64_t seed) {
  Rng rng = make_rng(seed, 5);
  return topo.with_weights(d.sample(rng, topo.num_edges()));
}

}  // namespace

TEST_CASE("basis and plus states") {
  const StateVector plus = StateVector::plus_state(3);
  for (const cplx& a : plus.amplitudes()) CHECK(std::abs(a - 1.0 / std::sqrt(8.0)) < 1e-15);
  const StateVector b = StateVector::basis_state(3, 5);
  CHECK(b.amplitudes()[5] == cplx(1.0, 0.0));
  CHECK(b.norm() == doctest::Approx(1.0));
}

TEST_CASE("phase separator") {
  StateVector s = random_state(4, 1);
  const StateVector before = s;
  const auto c = random_cost(16, 2);
  apply_phase(s, c, 0.0);
  for (std::size_t i = 0; i < 16; ++i) CHECK(s.amplitudes()[i] == before.amplitudes()[i]);
  apply_phase(s, c, 0.8);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(std::abs(s.amplitudes()[i] - before.amplitudes()[i] * std::exp(cplx(0, -0.8 * c[i]))) < 1e-14);
    CHECK(std::abs(std::norm(s.amplitudes()[i]) - std::norm(before.amplitudes()[i])) < 1e-12);
  }
  StateVector t = before;
  apply_phase(t, std::vector<double>(16, 2.0), 0.5);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(std::abs(t.amplitudes()[i] - before.amplitudes()[i] * std::exp(cplx(0, -1.0))) < 1e-14);
  }
  CHECK_THROWS(apply_phase(t, std::vector<double>(8, 0.0), 0.5));
}

TEST_CASE("x mixer") {
  StateVector one(1);
  apply_x_mixer(one, kPi / 4);
  CHECK(std::abs(one.amplitudes()[0] - std::cos(kPi / 4)) < 1e-15);
  CHECK(std::abs(one.amplitudes()[1] - cplx(0, -std::sin(kPi / 4))) < 1e-15);
  const StateVector r = random_state(5, 3);
  StateVector s = r;
  apply_x_mixer(s, 0.0);
  for (std::size_t i = 0; i < 32; ++i) CHECK(s.amplitudes()[i] == r.amplitudes()[i]);
  apply_x_mixer(s, 0.37);
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
  oracle::Vec v(32);
  for (int i = 0; i < 32; ++i) v(i) = r.amplitudes()[static_cast<std::size_t>(i)];
  const oracle::Vec ref = oracle::expm_i(oracle::x_mixer_generator(5), 0.37) * v;
  for (int i = 0; i < 32; ++i) CHECK(std::abs(s.amplitudes()[static_cast<std::size_t>(i)] - ref(i)) < 1e-12);
}

TEST_CASE("dicke states") {
  const SubspaceState d21 = dicke_state(2, 1);
  CHECK(d21.basis() == std::vector<std::uint64_t>{0b01, 0b10});
  for (const cplx& a : d21.amplitudes()) CHECK(std::abs(a - 1.0 / std::sqrt(2.0)) < 1e-15);
  const SubspaceState d42 = dicke_state(4, 2);
  CHECK(d42.dimension() == 6);
  CHECK(d42.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d42.index_of(0b0101) == 1);
  CHECK_THROWS(d42.index_of(0b0111));
  CHECK(binomial(20, 10) == 184756);
}

TEST_CASE("xy ring mixer small cases") {
  const XyRingMixer m21(2, 1);
  CHECK(m21.dense_matrix() == std::vector<double>{0, 1, 1, 0});
  SubspaceState s(2, 1);
  s.amplitudes()[0] = 1.0;
  m21.apply(s, 0.0);
  CHECK(s.amplitudes()[0] == cplx(1.0, 0.0));
  m21.apply(s, 0.6);
  CHECK(std::abs(s.amplitudes()[0] - std::cos(0.6)) < 1e-14);
  CHECK(std::abs(s.amplitudes()[1] - cplx(0, -std::sin(0.6))) < 1e-14);
}

TEST_CASE("xy ring mixer matches dense exponentials") {
  for (auto [n, k] : {std::pair{6, 3}, std::pair{5, 2}, std::pair{8, 3}}) {
    const XyRingMixer m(n, k);
    // Sector matrix against the full-space generator.
    const oracle::Mat full = oracle::xy_ring_generator(n);
    const auto dense = m.dense_matrix();
    const auto& basis = m.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        CHECK(std::abs(dense[i * basis.size() + j] - full(static_cast<Eigen::Index>(basis[i]), static_cast<Eigen::Index>(basis[j]))) < 1e-14);
    // Evolution embedded in the full space.
    SubspaceState s = dicke_state(n, k);
    s.amplitudes()[0] *= cplx(0.3, 0.8);
    const double nrm = s.norm();
    for (cplx& a : s.amplitudes()) a /= nrm;
    const StateVector before = s.embed();
    const double beta = 0.77;
    m.apply(s, beta);
    oracle::Vec v(static_cast<Eigen::Index>(before.dimension()));
    for (std::size_t i = 0; i < before.dimension(); ++i) v(static_cast<Eigen::Index>(i)) = before.amplitudes()[i];
    const oracle::Vec ref = oracle::expm_i(full, beta) * v;
    const StateVector after = s.embed();
    for (std::size_t i = 0; i < after.dimension(); ++i) CHECK(std::abs(after.amplitudes()[i] - ref(static_cast<Eigen::Index>(i))) < 1e-10);
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("krylov path agrees with the dense path") {
  XyRingMixer::Options krylov;
  krylov.dense_limit = 0;
  const XyRingMixer a(10, 5);
  const XyRingMixer b(10, 5, krylov);
  CHECK(a.uses_dense());
  CHECK_FALSE(b.uses_dense());
  SubspaceState s = dicke_state(10, 5);
  s.amplitudes()[3] = cplx(0.0, 0.5);
  SubspaceState t = s;
  a.apply(s, 1.3);
  b.apply(t, 1.3);
  for (std::size_t i = 0; i < s.dimension(); ++i) CHECK(std::abs(s.amplitudes()[i] - t.amplitudes()[i]) < 1e-10);
}

TEST_CASE("zero angles give half the weight at any depth") {
  const WeightedGraph g = weighted(generate(GraphSpec::random_regular(8, 2, 1)), WeightDistribution::exponential(0.3), 1);
  const QaoaParams zero{{0, 0, 0}, {0, 0, 0}, BetaConvention::kClosedForm};
  CHECK(qaoa_energy(maxcut_poly(g), zero) == doctest::Approx(g.total_weight() / 2).epsilon(1e-12));
}

TEST_CASE("p = 1 simulator equals the closed form") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ug(-2, 2), ub(-kPi / 2, kPi / 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const WeightedGraph g = weighted(generate(GraphSpec::random_bipartite_regular(5 + static_cast<int>(seed % 3), 2, seed)),
                                     WeightDistribution::normal(0.2, 1.0), seed);
    const QaoaSimulator sim(maxcut_poly(g), Mixer::x());
    const double gamma = ug(rng), beta = ub(rng);
    CHECK(std::abs(sim.energy({{gamma}, {beta}, BetaConvention::kClosedForm}) - energy_p1(g, gamma, beta)) < 1e-9);
  }
}

TEST_CASE("simulator matches dense circuits at depth three") {
  const WeightedGraph g = weighted(generate(GraphSpec::erdos_renyi(7, 0.5, 4)), WeightDistribution::cauchy(), 2);
  const std::vector<double> gamma{0.3, -0.5, 0.8};
  const std::vector<double> beta{0.2, 0.9, -0.4};
  const auto c = oracle::cut_vector(g);
  const auto psi = oracle::dense_qaoa_state(oracle::plus_vector(7), c, oracle::x_mixer_generator(7), gamma, beta);
  const StateVector s = QaoaSimulator(maxcut_poly(g), Mixer::x()).full_state({gamma, beta, BetaConvention::kClosedForm});
  for (int i = 0; i < 128; ++i) CHECK(std::abs(s.amplitudes()[static_cast<std::size_t>(i)] - psi(i)) < 1e-12);
  CHECK(std::abs(s.norm() - 1.0) < 1e-10);
}

TEST_CASE("table convention parameters are converted") {
  const WeightedGraph g = generate(GraphSpec::cycle(6));
  const double a = qaoa_energy(maxcut_poly(g), {{0.7}, {kPi / 4}, BetaConvention::kTable});
  const double b = qaoa_energy(maxcut_poly(g), {{0.7}, {kPi / 8}, BetaConvention::kClosedForm});
  CHECK(a == doctest::Approx(b).epsilon(1e-14));
}

TEST_CASE("xy mixer circuits stay in the sector") {
  const PortfolioInstance inst = random_portfolio(6, 3);
  const SpinPolynomial poly = portfolio_poly(inst);
  const QaoaSimulator sim(poly, Mixer::xy_ring(inst.k));
  const QaoaParams q{{0.4, 0.9}, {0.3, 0.6}, BetaConvention::kClosedForm};
  const SubspaceState s = sim.sector_state(q);
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-10));
  // Dense reference: Dicke start, full-space phase and XY exponential.
  const auto c = cost_vector(poly);
  const StateVector start = dicke_state(6, inst.k).embed();
  oracle::Vec v(64);
  for (int i = 0; i < 64; ++i) v(i) = start.amplitudes()[static_cast<std::size_t>(i)];
  const auto psi = oracle::dense_qaoa_state(v, c, oracle::xy_ring_generator(6), q.gamma, q.beta);
  const StateVector full = s.embed();
  for (int i = 0; i < 64; ++i) {
    CHECK(std::abs(full.amplitudes()[static_cast<std::size_t>(i)] - psi(i)) < 1e-10);
    if (std::popcount(static_cast<unsigned>(i)) != inst.k) CHECK(std::norm(psi(i)) < 1e-20);
  }
  CHECK(sim.energy(q) == doctest::Approx(oracle::dense_expectation(psi, c)).epsilon(1e-10));
}

TEST_CASE("norm is preserved through deep circuits") {
  const WeightedGraph g = weighted(generate(GraphSpec::random_regular(10, 2, 2)), WeightDistribution::uniform_sym(), 4);
  const QaoaParams q{{0.1, 0.7, -1.2, 2.0, 0.4}, {0.3, -0.2, 0.9, 1.1, -0.6}, BetaConvention::kClosedForm};
  CHECK(std::abs(QaoaSimulator(maxcut_poly(g), Mixer::x()).full_state(q).norm() - 1.0) < 1e-10);
  const PortfolioInstance inst = random_portfolio(8, 1);
  CHECK(std::abs(QaoaSimulator(portfolio_poly(inst), Mixer::xy_ring(inst.k)).sector_state(q).norm() - 1.0) < 1e-10);
}

TEST_CASE("energy is invariant under (gamma, C) -> (gamma / s, s C)") {
  const SpinPolynomial p = portfolio_poly(random_portfolio(7, 2));
  const double s = 3.7;
  const SpinPolynomial ps = p.scaled(s);
  for (Mixer m : {Mixer::x(), Mixer::xy_ring(3)}) {
    const QaoaParams a{{0.6, -0.3}, {0.2, 0.5}, BetaConvention::kClosedForm};
    const QaoaParams b{{0.6 / s, -0.3 / s}, {0.2, 0.5}, BetaConvention::kClosedForm};
    CHECK(std::abs(qaoa_energy(ps, b, m) - s * qaoa_energy(p, a, m)) < 1e-12 * std::max(1.0, std::abs(s * qaoa_energy(p, a, m))));
  }
}

TEST_CASE("landscape grids") {
  const SpinPolynomial p = portfolio_poly(random_portfolio(6, 5));
  const LandscapeGrid one = landscape_grid(p, Mixer::xy_ring(3), {0.4, 0.4, 1}, {0.2, 0.2, 1});
  CHECK(one.values.size() == 1);
  CHECK(one.values[0] == doctest::Approx(qaoa_energy(p, {{0.4}, {0.2}, BetaConvention::kClosedForm}, Mixer::xy_ring(3))));
  const LandscapeGrid g = landscape_grid(p, Mixer::x(), {-1.0, 1.0, 5}, {-0.5, 0.5, 3});
  CHECK(g.gammas.size() == 5);
  CHECK(g.betas.size() == 3);
  CHECK(g.values.size() == 15);
  // Rescaled polynomial at gamma * s equals the original landscape / s.
  const RescaledPolynomial r = rescale_poly(p);
  const LandscapeGrid gr = landscape_grid(r.poly, Mixer::x(), {-r.scale, r.scale, 5}, {-0.5, 0.5, 3});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) CHECK(std::abs(gr.at(i, j) - g.at(i, j) / r.scale) < 1e-9);
  std::ostringstream os;
  write_landscape_csv(os, g);
  std::istringstream is(os.str());
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) rows += line.rfind('#', 0) != 0;
  CHECK(rows == 4);
}

TEST_CASE("time reversal symmetry for maxcut") {
  const WeightedGraph g = weighted(generate(GraphSpec::erdos_renyi(8, 0.4, 6)), WeightDistribution::normal(0.0, 1.0), 6);
  const SpinPolynomial p = maxcut_poly(g);
  const LandscapeGrid a = landscape_grid(p, Mixer::x(), {-1.5, 1.5, 7}, {-0.6, 0.6, 5});
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 7; ++j) CHECK(std::abs(a.at(i, j) - a.at(4 - i, 6 - j)) < 1e-10);
}
