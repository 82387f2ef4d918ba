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

#include <nlohmann/json_fwd.hpp>

#include "wqaoa/spin_polynomial.hpp"

namespace wqaoa {

// Mean-variance selection: minimize q x^T Sigma x - mu^T x over x in {0,1}^n
// with sum x = k.
struct PortfolioInstance {
  int n = 0;
  std::vector<double> sigma;  // row-major n x n
  std::vector<double> mu;
  double q = 0.5;
  int k = 0;

  double cov(int i, int j) const { return sigma[static_cast<std::size_t>(i * n + j)]; }
  // Throws PreconditionError when shapes, symmetry (1e-12) or 0 < k < n fail.
  void validate() const;
  double objective(std::span<const int> x) const;
};

// Substitutes x_j = (1 - z_j)/2; orientation minimize.
SpinPolynomial portfolio_poly(const PortfolioInstance& inst);

enum class PortfolioModel {
  // mu ~ U[0, 0.1], Sigma = A A^T / n with A_ij ~ N(0, 1).
  kFactor,
  // Daily relative returns of independent Gaussian random-walk price paths;
  // mu and Sigma are their sample mean and covariance.
  kRandomWalk,
};

struct PortfolioGenOptions {
  PortfolioModel model = PortfolioModel::kRandomWalk;
  int days = 30;
  double q = 0.5;
  int k = -1;  // -1: floor(n/2)
};

PortfolioInstance random_portfolio(int n, std::uint64_t seed, const PortfolioGenOptions& opts = {});

nlohmann::json to_json(const PortfolioInstance& inst);
PortfolioInstance portfolio_from_json(const nlohmann::json& j);

}  // namespace wqaoa
