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

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "wqaoa/distributions.hpp"

namespace wqaoa {

using cplx = std::complex<double>;

// Light-cone tree evaluation of depth-p QAOA on (D+1)-regular graphs of
// girth > 2p+1, averaged over i.i.d. edge weights.
//
// A vertex carries 2p+1 spins z^[r], r in {1..p, 0, -p..-1}. They are packed
// into an integer with one bit per slot (bit set = spin -1); slot order is
// r = 1..p, then 0, then -p..-1. All betas are in the closed-form convention.

int num_configs(int p);
int config_slot(int r, int p);
inline int config_spin(std::uint32_t z, int slot) { return ((z >> slot) & 1U) ? -1 : 1; }

// Gamma_r = gamma_r, Gamma_-r = -gamma_r, Gamma_0 = 0, in slot order.
std::vector<double> gamma_vector(std::span<const double> gamma);

cplx g_value(std::span<const double> beta, std::uint32_t z);
std::vector<cplx> g_table(std::span<const double> beta);

// Everything that depends only on (gamma, beta): g over all configurations
// and the phase argument x(s) = Gamma . spins(s) / 2 for s = z_u XOR z_v.
struct TreeContext {
  int p = 0;
  std::vector<double> Gamma;
  std::vector<cplx> g;
  std::vector<double> x;

  static TreeContext make(std::span<const double> gamma, std::span<const double> beta);
  int size() const { return static_cast<int>(g.size()); }
};

struct HTable {
  int p = 0;
  int depth = 0;
  std::vector<cplx> values;

  static HTable ones(int p);
};

// Sum_z g(z) H(z); equal to one for every valid table.
cplx normalization(const TreeContext& ctx, const HTable& h);

// E_w[cos(w x)] and E_w[w sin(w x)], either in closed form or as sample means.
class WeightExpectation {
 public:
  explicit WeightExpectation(const WeightDistribution& dist);
  static WeightExpectation monte_carlo(const WeightDistribution& dist, std::size_t samples,
                                       std::uint64_t seed);

  double cos(double x) const;
  double w_sin(double x) const;
  double mean() const;
  double second_moment() const;
  bool is_sampled() const { return !samples_.empty(); }

 private:
  WeightDistribution dist_;
  std::vector<double> samples_;
};

// H(z_v) = [ sum_u H_prev(u) g(u) E[cos(w x(u ^ v))] ]^D.
HTable h_iterate_finite(int D, const WeightExpectation& e, const TreeContext& ctx, const HTable& prev);
HTable h_iterate_finite(int D, const WeightDistribution& dist, const TreeContext& ctx, const HTable& prev);

// Large-D form: H(z_v) = exp( -(m2/2) sum_u g(u) H_prev(u) x(u ^ v)^2 ).
HTable h_iterate_limit(double m2, const TreeContext& ctx, const HTable& prev);

// Depth-p tables on the two root subtrees.
HTable h_root_finite(int D, const WeightExpectation& e, const TreeContext& ctx);
HTable h_root_limit(double m2, const TreeContext& ctx);

// Unweighted infinite-D coefficient: cut fraction 1/2 + nu_p / sqrt(D).
double nu_p(std::span<const double> gamma, std::span<const double> beta);

// The optimal value of the SK model at depth p coincides with nu_p.
inline double sk_value_p(std::span<const double> gamma, std::span<const double> beta) {
  return nu_p(gamma, beta);
}

// Weighted counterpart (normalised by the mean weight); needs mu != 0.
double theta_p_limit(const WeightDistribution& dist, std::span<const double> gamma,
                     std::span<const double> beta);

// E_w[w <Z_L Z_R>] for one edge of a (D+1)-regular graph of girth > 2p+1.
double expected_weighted_zz(int D, const WeightExpectation& e, std::span<const double> gamma,
                            std::span<const double> beta);

// N(D+1) mu / 4 - N(D+1)/4 * E_w[w <Z_L Z_R>].
double expected_energy_p_finite(int N, int D, const WeightDistribution& dist,
                                std::span<const double> gamma, std::span<const double> beta);
double expected_energy_p_finite(int N, int D, const WeightExpectation& e,
                                std::span<const double> gamma, std::span<const double> beta);

}  // namespace wqaoa
