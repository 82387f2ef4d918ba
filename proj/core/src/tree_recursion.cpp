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

#include "wqaoa/tree_recursion.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "wqaoa/errors.hpp"
#include "wqaoa/rng.hpp"

namespace wqaoa {

namespace {

constexpr int kMaxDepth = 8;
constexpr double kTolerance = 1e-10;

cplx ipow(cplx base, int e) {
  cplx r{1.0, 0.0};
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// <a|exp(i sign beta X)|b> for spins a, b.
cplx mixer_element(int a, int b, double beta, int sign) {
  return a == b ? cplx{std::cos(beta), 0.0} : cplx{0.0, sign * std::sin(beta)};
}

void check_normalized(const TreeContext& ctx, const HTable& h, double tol) {
  const cplx s = normalization(ctx, h);
  if (std::abs(s - 1.0) > tol) {
    std::ostringstream os;
    os << "H table at depth " << h.depth << " lost normalisation: sum g H = " << s;
    throw NumericalError(os.str());
  }
}

double real_part_checked(cplx v, const char* what) {
  if (std::abs(v.imag()) > kTolerance * std::max(1.0, std::abs(v.real()))) {
    std::ostringstream os;
    os << what << " has imaginary part " << v.imag();
    throw NumericalError(os.str());
  }
  return v.real();
}

std::vector<double> x_table(int p, const std::vector<double>& Gamma) {
  const int m = num_configs(p);
  std::vector<double> x(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) {
    double acc = 0.0;
    for (int i = 0; i < 2 * p + 1; ++i) acc += Gamma[static_cast<std::size_t>(i)] * config_spin(s, i);
    x[static_cast<std::size_t>(s)] = acc / 2.0;
  }
  return x;
}

// sum_{zL, zR} zL^0 zR^0 a(zL) a(zR) f(x(zL ^ zR)), with a = g H.
template <typename F>
cplx root_sum(const TreeContext& ctx, const HTable& h, F f) {
  const int m = ctx.size();
  const int slot0 = config_slot(0, ctx.p);
  std::vector<cplx> a(static_cast<std::size_t>(m));
  for (int z = 0; z < m; ++z) {
    a[static_cast<std::size_t>(z)] = static_cast<double>(config_spin(z, slot0)) * ctx.g[static_cast<std::size_t>(z)] *
                                     h.values[static_cast<std::size_t>(z)];
  }
  std::vector<double> fx(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) fx[static_cast<std::size_t>(s)] = f(ctx.x[static_cast<std::size_t>(s)]);
  cplx total{0.0, 0.0};
  for (int l = 0; l < m; ++l) {
    cplx row{0.0, 0.0};
    for (int r = 0; r < m; ++r) row += a[static_cast<std::size_t>(r)] * fx[static_cast<std::size_t>(l ^ r)];
    total += a[static_cast<std::size_t>(l)] * row;
  }
  return total;
}

// out(v) = sum_u a(u) kernel(u ^ v)
std::vector<cplx> xor_apply(const std::vector<cplx>& a, const std::vector<double>& kernel) {
  const std::size_t m = a.size();
  std::vector<cplx> out(m);
  for (std::size_t v = 0; v < m; ++v) {
    cplx acc{0.0, 0.0};
    for (std::size_t u = 0; u < m; ++u) acc += a[u] * kernel[u ^ v];
    out[v] = acc;
  }
  return out;
}

void check_params(std::span<const double> gamma, std::span<const double> beta) {
  require(!gamma.empty(), "depth p must be at least 1");
  require(gamma.size() == beta.size(), "gamma and beta must have equal length");
  require(gamma.size() <= static_cast<std::size_t>(kMaxDepth), "tree recursion supports p <= 8");
}

}  // namespace

int num_configs(int p) { return 1 << (2 * p + 1); }

int config_slot(int r, int p) {
  require(r >= -p && r <= p, "spin index out of range");
  if (r > 0) return r - 1;
  if (r == 0) return p;
  return 2 * p + 1 + r;
}

std::vector<double> gamma_vector(std::span<const double> gamma) {
  const int p = static_cast<int>(gamma.size());
  std::vector<double> G(static_cast<std::size_t>(2 * p + 1), 0.0);
  for (int r = 1; r <= p; ++r) {
    G[static_cast<std::size_t>(config_slot(r, p))] = gamma[static_cast<std::size_t>(r - 1)];
    G[static_cast<std::size_t>(config_slot(-r, p))] = -gamma[static_cast<std::size_t>(r - 1)];
  }
  return G;
}

cplx g_value(std::span<const double> beta, std::uint32_t z) {
  const int p = static_cast<int>(beta.size());
  require(p >= 1, "depth p must be at least 1");
  auto s = [&](int r) { return config_spin(z, config_slot(r, p)); };
  const double bp = beta[static_cast<std::size_t>(p - 1)];
  cplx v = 0.5 * mixer_element(s(p), s(0), bp, +1) * mixer_element(s(0), s(-p), bp, -1);
  for (int r = 1; r < p; ++r) {
    const double b = beta[static_cast<std::size_t>(r - 1)];
    v *= mixer_element(s(-(r + 1)), s(-r), b, -1) * mixer_element(s(r), s(r + 1), b, +1);
  }
  return v;
}

std::vector<cplx> g_table(std::span<const double> beta) {
  const int m = num_configs(static_cast<int>(beta.size()));
  std::vector<cplx> g(static_cast<std::size_t>(m));
  for (int z = 0; z < m; ++z) g[static_cast<std::size_t>(z)] = g_value(beta, static_cast<std::uint32_t>(z));
  return g;
}

TreeContext TreeContext::make(std::span<const double> gamma, std::span<const double> beta) {
  check_params(gamma, beta);
  TreeContext ctx;
  ctx.p = static_cast<int>(gamma.size());
  ctx.Gamma = gamma_vector(gamma);
  ctx.g = g_table(beta);
  ctx.x = x_table(ctx.p, ctx.Gamma);
  return ctx;
}

HTable HTable::ones(int p) {
  return {p, 0, std::vector<cplx>(static_cast<std::size_t>(num_configs(p)), cplx{1.0, 0.0})};
}

cplx normalization(const TreeContext& ctx, const HTable& h) {
  require(h.values.size() == ctx.g.size(), "H table size does not match context");
  cplx s{0.0, 0.0};
  for (std::size_t z = 0; z < ctx.g.size(); ++z) s += ctx.g[z] * h.values[z];
  return s;
}

WeightExpectation::WeightExpectation(const WeightDistribution& dist) : dist_(dist) {}

WeightExpectation WeightExpectation::monte_carlo(const WeightDistribution& dist, std::size_t samples,
                                                 std::uint64_t seed) {
  require(samples > 0, "Monte-Carlo expectation needs at least one sample");
  WeightExpectation e(dist);
  Rng rng = make_rng(seed, 0);
  e.samples_ = dist.sample(rng, samples);
  return e;
}

double WeightExpectation::cos(double x) const {
  if (samples_.empty()) return dist_.cos_expectation(x);
  double acc = 0.0;
  for (double w : samples_) acc += std::cos(w * x);
  return acc / static_cast<double>(samples_.size());
}

double WeightExpectation::w_sin(double x) const {
  if (samples_.empty()) return dist_.w_sin_expectation(x);
  if (!dist_.mean()) throw UnsupportedMomentError("E[w sin(w x)] diverges for " + dist_.name());
  double acc = 0.0;
  for (double w : samples_) acc += w * std::sin(w * x);
  return acc / static_cast<double>(samples_.size());
}

double WeightExpectation::mean() const {
  if (samples_.empty()) return dist_.moments().mean;
  double acc = 0.0;
  for (double w : samples_) acc += w;
  return acc / static_cast<double>(samples_.size());
}

double WeightExpectation::second_moment() const {
  if (samples_.empty()) return dist_.moments().second_moment;
  double acc = 0.0;
  for (double w : samples_) acc += w * w;
  return acc / static_cast<double>(samples_.size());
}

HTable h_iterate_finite(int D, const WeightExpectation& e, const TreeContext& ctx, const HTable& prev) {
  require(D >= 1, "D must be at least 1");
  check_normalized(ctx, prev, kTolerance);
  const int m = ctx.size();
  std::vector<cplx> a(static_cast<std::size_t>(m));
  for (int z = 0; z < m; ++z) a[static_cast<std::size_t>(z)] = ctx.g[static_cast<std::size_t>(z)] * prev.values[static_cast<std::size_t>(z)];
  std::vector<double> kernel(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) kernel[static_cast<std::size_t>(s)] = e.cos(ctx.x[static_cast<std::size_t>(s)]);
  std::vector<cplx> child = xor_apply(a, kernel);
  HTable next{ctx.p, prev.depth + 1, {}};
  next.values.resize(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) next.values[static_cast<std::size_t>(v)] = ipow(child[static_cast<std::size_t>(v)], D);
  // Raising to the power D amplifies rounding in the child sum by D.
  const double tol = kTolerance + 64.0 * std::numeric_limits<double>::epsilon() * m * D;
  check_normalized(ctx, next, tol);
  return next;
}

HTable h_iterate_finite(int D, const WeightDistribution& dist, const TreeContext& ctx, const HTable& prev) {
  return h_iterate_finite(D, WeightExpectation(dist), ctx, prev);
}

HTable h_iterate_limit(double m2, const TreeContext& ctx, const HTable& prev) {
  require(std::isfinite(m2) && m2 > 0.0, "second moment must be positive and finite");
  check_normalized(ctx, prev, kTolerance);
  const int m = ctx.size();
  std::vector<cplx> a(static_cast<std::size_t>(m));
  for (int z = 0; z < m; ++z) a[static_cast<std::size_t>(z)] = ctx.g[static_cast<std::size_t>(z)] * prev.values[static_cast<std::size_t>(z)];
  std::vector<double> kernel(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) {
    const double x = ctx.x[static_cast<std::size_t>(s)];
    kernel[static_cast<std::size_t>(s)] = x * x;
  }
  std::vector<cplx> q = xor_apply(a, kernel);
  HTable next{ctx.p, prev.depth + 1, {}};
  next.values.resize(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) next.values[static_cast<std::size_t>(v)] = std::exp(-0.5 * m2 * q[static_cast<std::size_t>(v)]);
  check_normalized(ctx, next, kTolerance);
  return next;
}

HTable h_root_finite(int D, const WeightExpectation& e, const TreeContext& ctx) {
  HTable h = HTable::ones(ctx.p);
  for (int r = 0; r < ctx.p; ++r) h = h_iterate_finite(D, e, ctx, h);
  return h;
}

HTable h_root_limit(double m2, const TreeContext& ctx) {
  HTable h = HTable::ones(ctx.p);
  for (int r = 0; r < ctx.p; ++r) h = h_iterate_limit(m2, ctx, h);
  return h;
}

namespace {

double theta_assembly(double mu, double m2, std::span<const double> gamma, std::span<const double> beta) {
  const TreeContext ctx = TreeContext::make(gamma, beta);
  const HTable h = h_root_limit(m2, ctx);
  const cplx s = root_sum(ctx, h, [](double x) { return x; });
  return real_part_checked(cplx{0.0, m2 / (2.0 * mu)} * s, "theta_p");
}

}  // namespace

double nu_p(std::span<const double> gamma, std::span<const double> beta) {
  return theta_assembly(1.0, 1.0, gamma, beta);
}

double theta_p_limit(const WeightDistribution& dist, std::span<const double> gamma,
                     std::span<const double> beta) {
  const MomentSummary m = dist.moments();
  if (m.mean == 0.0) throw PreconditionError("theta_p normalisation requires mu != 0");
  if (!(m.second_moment > 0.0)) throw UnsupportedMomentError("theta_p requires E[w^2] > 0");
  return theta_assembly(m.mean, m.second_moment, gamma, beta);
}

double expected_weighted_zz(int D, const WeightExpectation& e, std::span<const double> gamma,
                            std::span<const double> beta) {
  const TreeContext ctx = TreeContext::make(gamma, beta);
  const HTable h = h_root_finite(D, e, ctx);
  const cplx s = root_sum(ctx, h, [&](double x) { return e.w_sin(x); });
  return real_part_checked(cplx{0.0, -1.0} * s, "E[w <ZZ>]");
}

double expected_energy_p_finite(int N, int D, const WeightExpectation& e,
                                std::span<const double> gamma, std::span<const double> beta) {
  require(N > 0, "vertex count must be positive");
  const double wzz = expected_weighted_zz(D, e, gamma, beta);
  const double edges = N * (D + 1) / 4.0;
  return edges * e.mean() - edges * wzz;
}

double expected_energy_p_finite(int N, int D, const WeightDistribution& dist,
                                std::span<const double> gamma, std::span<const double> beta) {
  return expected_energy_p_finite(N, D, WeightExpectation(dist), gamma, beta);
}

}  // namespace wqaoa
