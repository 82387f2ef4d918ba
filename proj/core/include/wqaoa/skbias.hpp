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

#include <cstdint>
#include <span>
#include <vector>

namespace wqaoa {

// Biased Sherrington-Kirkpatrick model:
//   G(z) = -sum_{i<j} J_ij z_i z_j,  J_ij ~ N(mu, sigma^2).
struct BiasedSKSpec {
  int N = 2;
  double mu = 0.0;
  double sigma = 1.0;
  std::uint64_t seed = 0;

  void validate() const;  // N >= 2 even, sigma > 0
};

inline constexpr double kParisiValue = 0.7632;

// N^2/4 for mu > 0, -C(N,2) for mu < 0, 0 for mu = 0 (even N only). For
// mu > 0 this is the complete-graph MaxCut value per unit weight, which is
// not max_z E[G]; see max_mean_objective.
double h_of_N(int N, double mu);

// max_z E[G(z)] = mu * (N/2) for mu > 0, -mu * C(N,2) for mu < 0, else 0.
double max_mean_objective(int N, double mu);

struct SkBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Valid sandwich for E[max G]: lower = max_z E[G], upper = lower +
// sigma * sqrt(log(4) N C(N,2)).
SkBounds bounds(const BiasedSKSpec& spec);
// The same with mu * h_of_N in place of max_z E[G]. Its lower end exceeds
// E[max G] for mu > 0.
SkBounds bounds_as_printed(const BiasedSKSpec& spec);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::size_t samples = 0;
};

// max_z G(z) for one coupling matrix (row-major N x N, symmetric, zero
// diagonal) by Gray-code enumeration of half the hypercube.
double sk_max(std::span<const double> coupling, int N);

// Monte-Carlo E[max G] over independent coupling draws; N <= 22. Sample s
// uses its own stream derived from spec.seed, so results do not depend on
// `threads`.
MonteCarloEstimate mc_expected_max(const BiasedSKSpec& spec, std::size_t samples, int threads = 1);

std::vector<double> sample_couplings(const BiasedSKSpec& spec, std::uint64_t stream);

enum class SkRegime { kConstantBias, kSqrtNBias, kZeroBias };

const char* to_string(SkRegime r);
SkRegime sk_regime_from_string(const char* name);

// Large-N limit of E[max G] / N^2 (constant bias) or / N^{3/2} (other
// regimes), for G as defined above:
//   constant bias: -mu/2 if mu < 0, else 0
//   zero bias:     sigma * Pi*
//   sqrt(N) bias:  sigma * Pi* + (mu < 0 ? -mu/2 : 0), an upper estimate;
//                  mu is lim mu(N) sqrt(N).
double limiting_value(double mu, SkRegime regime, double sigma = 1.0);

// The closed form mu / (2 (1 + sign mu)), sign(x) = 1 for x >= 0 else 0, with
// sigma * Pi* added outside the constant-bias regime.
double limiting_value_as_printed(double mu, SkRegime regime, double sigma = 1.0);

}  // namespace wqaoa
