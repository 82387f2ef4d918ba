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

#include <string>

#include "wqaoa/distributions.hpp"
#include "wqaoa/graph.hpp"

namespace wqaoa {

// Two parameter conventions are in use. The simulator ("closed-form") applies
// exp(-i beta sum X), under which the p = 1 optimum sits at beta = pi/8. The
// published parameter tables use a mixer with an extra factor 1/2, so their
// betas are twice as large (p = 1: pi/4). Gammas agree.
enum class BetaConvention { kClosedForm, kTable };

const char* to_string(BetaConvention c);
BetaConvention beta_convention_from_string(const std::string& name);

double convert_beta(double beta, BetaConvention from, BetaConvention to);

// Exact p = 1 expected cut of the QAOA state on a triangle-free graph:
//   sum w / 2 + sin(4 beta)/4 * sum_uv w sin(w gamma) (prod_u cos + prod_v cos)
// where the products run over the other neighbours of each endpoint.
// Throws PreconditionError if the graph contains a triangle.
double energy_p1(const WeightedGraph& g, double gamma, double beta);

// Weight-averaged p = 1 energy (beta = pi/8) on an N-vertex (D+1)-regular
// triangle-free graph with exponential(lambda) weights.
double expected_energy_exponential(int N, int D, double lambda, double gamma);

// Maximiser of expected_energy_exponential: lambda / sqrt(2D + 3).
double optimal_gamma_exponential(int D, double lambda);

// Same average for any distribution with finite mean:
//   N(D+1)/2 * (mu/2 + E[w sin(w g)] E[cos(w g)]^D / 2)
double expected_energy_general(int N, int D, const WeightDistribution& dist, double gamma);

// sqrt(D) * (normalised energy - 1/2); requires mu != 0.
double theta1_finite(int D, const WeightDistribution& dist, double gamma);
double theta1_finite(double D, const WeightDistribution& dist, double gamma);

// Large-D limit at gamma = gamma' / sqrt(D):
//   E[w^2]/(2 mu) * gamma' * exp(-E[w^2] gamma'^2 / 2)
double theta1_limit(const WeightDistribution& dist, double gamma_prime);

}  // namespace wqaoa
