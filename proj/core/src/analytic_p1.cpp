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

#include "wqaoa/analytic_p1.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "wqaoa/errors.hpp"

namespace wqaoa {

const char* to_string(BetaConvention c) {
  return c == BetaConvention::kClosedForm ? "closed-form" : "table";
}

BetaConvention beta_convention_from_string(const std::string& name) {
  if (name == "closed-form" || name == "closed_form") return BetaConvention::kClosedForm;
  if (name == "table") return BetaConvention::kTable;
  throw ConfigError("unknown beta convention: " + name);
}

double convert_beta(double beta, BetaConvention from, BetaConvention to) {
  if (from == to) return beta;
  return from == BetaConvention::kTable ? beta / 2.0 : beta * 2.0;
}

double energy_p1(const WeightedGraph& g, double gamma, double beta) {
  if (!is_triangle_free(g)) throw PreconditionError("energy_p1 requires a triangle-free graph");
  const int n = g.num_vertices();
  // Per-vertex product of cos(w gamma) over all incident edges, tracked with a
  // zero count so that dividing out one edge stays exact.
  std::vector<double> prod(static_cast<std::size_t>(n), 1.0);
  std::vector<int> zeros(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (const Neighbor& nb : g.neighbors(v)) {
      const double c = std::cos(nb.w * gamma);
      if (c == 0.0) {
        ++zeros[static_cast<std::size_t>(v)];
      } else {
        prod[static_cast<std::size_t>(v)] *= c;
      }
    }
  }
  auto others = [&](int v, double w) {
    const double c = std::cos(w * gamma);
    const auto sv = static_cast<std::size_t>(v);
    if (c == 0.0) return zeros[sv] == 1 ? prod[sv] : 0.0;
    return zeros[sv] == 0 ? prod[sv] / c : 0.0;
  };
  double base = 0.0;
  double mix = 0.0;
  for (const Edge& e : g.edges()) {
    base += e.w / 2.0;
    mix += e.w * std::sin(e.w * gamma) * (others(e.u, e.w) + others(e.v, e.w));
  }
  return base + std::sin(4.0 * beta) / 4.0 * mix;
}

double expected_energy_exponential(int N, int D, double lambda, double gamma) {
  require(lambda > 0.0, "lambda must be positive");
  require(D >= 1, "D must be at least 1");
  const double l2 = lambda * lambda;
  const double term = gamma * std::pow(l2, D + 1) / std::pow(l2 + gamma * gamma, D + 2);
  return N * (D + 1) / 2.0 * (1.0 / (2.0 * lambda) + term);
}

double optimal_gamma_exponential(int D, double lambda) {
  require(lambda > 0.0, "lambda must be positive");
  require(D >= 1, "D must be at least 1");
  return lambda / std::sqrt(2.0 * D + 3.0);
}

double expected_energy_general(int N, int D, const WeightDistribution& dist, double gamma) {
  require(D >= 1, "D must be at least 1");
  const MomentSummary m = dist.moments();
  const double s = dist.w_sin_expectation(gamma);
  const double c = dist.cos_expectation(gamma);
  return N * (D + 1) / 2.0 * (m.mean / 2.0 + 0.5 * s * std::pow(c, D));
}

namespace {

double nonzero_mean(const WeightDistribution& dist) {
  const double mu = dist.moments().mean;
  if (mu == 0.0) throw PreconditionError("normalisation by the mean weight requires mu != 0");
  return mu;
}

}  // namespace

double theta1_finite(double D, const WeightDistribution& dist, double gamma) {
  require(D >= 1.0, "D must be at least 1");
  const double mu = nonzero_mean(dist);
  const double s = dist.w_sin_expectation(gamma);
  const double c = dist.cos_expectation(gamma);
  return std::sqrt(D) * s * std::pow(c, D) / (2.0 * mu);
}

double theta1_finite(int D, const WeightDistribution& dist, double gamma) {
  return theta1_finite(static_cast<double>(D), dist, gamma);
}

double theta1_limit(const WeightDistribution& dist, double gamma_prime) {
  const double mu = nonzero_mean(dist);
  const double m2 = dist.moments().second_moment;
  return m2 / (2.0 * mu) * gamma_prime * std::exp(-m2 * gamma_prime * gamma_prime / 2.0);
}

}  // namespace wqaoa
