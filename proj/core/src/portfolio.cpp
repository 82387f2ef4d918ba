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

#include "wqaoa/portfolio.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "wqaoa/errors.hpp"
#include "wqaoa/rng.hpp"

namespace wqaoa {

void PortfolioInstance::validate() const {
  require(n > 0, "portfolio needs at least one asset");
  require(sigma.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
          "covariance must be n x n");
  require(mu.size() == static_cast<std::size_t>(n), "returns vector must have length n");
  require(k > 0 && k < n, "budget must satisfy 0 < k < n");
  require(std::isfinite(q), "risk factor must be finite");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      require(std::isfinite(cov(i, j)), "covariance entries must be finite");
      require(std::abs(cov(i, j) - cov(j, i)) <= 1e-12, "covariance must be symmetric");
    }
  }
}

double PortfolioInstance::objective(std::span<const int> x) const {
  require(static_cast<int>(x.size()) == n, "selection vector length must equal n");
  double risk = 0.0;
  double ret = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!x[static_cast<std::size_t>(i)]) continue;
    ret += mu[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      if (x[static_cast<std::size_t>(j)]) risk += cov(i, j);
    }
  }
  return q * risk - ret;
}

SpinPolynomial portfolio_poly(const PortfolioInstance& inst) {
  inst.validate();
  const int n = inst.n;
  SpinPolynomial p(n, Orientation::kMinimize);
  // x_i x_j = (1 - z_i - z_j + z_i z_j)/4 for i != j, and x_i^2 = x_i = (1 - z_i)/2.
  for (int i = 0; i < n; ++i) {
    const double sii = inst.cov(i, i);
    p.add_constant(inst.q * sii / 2.0 - inst.mu[static_cast<std::size_t>(i)] / 2.0);
    p.add_term({i}, -inst.q * sii / 2.0 + inst.mu[static_cast<std::size_t>(i)] / 2.0);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double c = inst.q * inst.cov(i, j) / 4.0;
      p.add_constant(c);
      p.add_term({i}, -c);
      p.add_term({j}, -c);
      if (i < j) p.add_term({i, j}, c + inst.q * inst.cov(j, i) / 4.0);
    }
  }
  return p;
}

namespace {

void covariance_from_samples(const std::vector<std::vector<double>>& series, PortfolioInstance& inst) {
  const int n = inst.n;
  const std::size_t t = series.front().size();
  inst.mu.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const auto& s = series[static_cast<std::size_t>(i)];
    double m = 0.0;
    for (double v : s) m += v;
    inst.mu[static_cast<std::size_t>(i)] = m / static_cast<double>(t);
  }
  inst.sigma.assign(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double c = 0.0;
      for (std::size_t d = 0; d < t; ++d) {
        c += (series[static_cast<std::size_t>(i)][d] - inst.mu[static_cast<std::size_t>(i)]) *
             (series[static_cast<std::size_t>(j)][d] - inst.mu[static_cast<std::size_t>(j)]);
      }
      c /= static_cast<double>(t - 1);
      inst.sigma[static_cast<std::size_t>(i * n + j)] = c;
      inst.sigma[static_cast<std::size_t>(j * n + i)] = c;
    }
  }
}

}  // namespace

PortfolioInstance random_portfolio(int n, std::uint64_t seed, const PortfolioGenOptions& opts) {
  require(n >= 2, "portfolio needs at least two assets");
  PortfolioInstance inst;
  inst.n = n;
  inst.q = opts.q;
  inst.k = opts.k < 0 ? n / 2 : opts.k;
  Rng rng = make_rng(seed, 0);
  std::normal_distribution<double> normal(0.0, 1.0);
  if (opts.model == PortfolioModel::kFactor) {
    std::uniform_real_distribution<double> ret(0.0, 0.1);
    inst.mu.resize(static_cast<std::size_t>(n));
    for (double& m : inst.mu) m = ret(rng);
    std::vector<double> a(static_cast<std::size_t>(n * n));
    for (double& v : a) v = normal(rng);
    inst.sigma.assign(static_cast<std::size_t>(n * n), 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        double c = 0.0;
        for (int l = 0; l < n; ++l) c += a[static_cast<std::size_t>(i * n + l)] * a[static_cast<std::size_t>(j * n + l)];
        c /= n;
        inst.sigma[static_cast<std::size_t>(i * n + j)] = c;
        inst.sigma[static_cast<std::size_t>(j * n + i)] = c;
      }
    }
  } else {
    require(opts.days >= 3, "random-walk model needs at least three days");
    std::uniform_real_distribution<double> start(20.0, 100.0);
    std::vector<std::vector<double>> returns(static_cast<std::size_t>(n));
    for (auto& r : returns) {
      double price = start(rng);
      r.reserve(static_cast<std::size_t>(opts.days - 1));
      for (int d = 1; d < opts.days; ++d) {
        const double next = std::max(1.0, price + normal(rng));
        r.push_back(next / price - 1.0);
        price = next;
      }
    }
    covariance_from_samples(returns, inst);
  }
  inst.validate();
  return inst;
}

nlohmann::json to_json(const PortfolioInstance& inst) {
  nlohmann::json sigma = nlohmann::json::array();
  for (int i = 0; i < inst.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < inst.n; ++j) row.push_back(inst.cov(i, j));
    sigma.push_back(std::move(row));
  }
  return {{"n", inst.n}, {"sigma", sigma}, {"mu", inst.mu}, {"q", inst.q}, {"k", inst.k}};
}

PortfolioInstance portfolio_from_json(const nlohmann::json& j) {
  PortfolioInstance inst;
  try {
    inst.n = j.at("n").get<int>();
    for (const auto& row : j.at("sigma")) {
      if (row.size() != static_cast<std::size_t>(inst.n)) throw ConfigError("sigma rows must have length n");
      for (const auto& v : row) inst.sigma.push_back(v.get<double>());
    }
    inst.mu = j.at("mu").get<std::vector<double>>();
    inst.q = j.value("q", 0.5);
    inst.k = j.value("k", inst.n / 2);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("portfolio json: ") + e.what());
  }
  try {
    inst.validate();
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("portfolio json: ") + e.what());
  }
  return inst;
}

}  // namespace wqaoa
