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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wqaoa/rng.hpp"

namespace wqaoa {

enum class DistributionKind {
  kUniformPlus,  // U[0, 1]
  kUniformSym,   // U[-1, 1]
  kExponential,
  kCauchy,
  kNormal,
  kPointMass,
};

struct MomentSummary {
  enum class Source { kAnalytic, kEmpirical };
  double mean = 0.0;
  double second_moment = 0.0;
  Source source = Source::kAnalytic;
};

// Edge-weight distribution: sampling plus the trigonometric expectations
// E[cos(w g)] and E[w sin(w g)] in closed form.
class WeightDistribution {
 public:
  static WeightDistribution uniform_plus();
  static WeightDistribution uniform_sym();
  static WeightDistribution exponential(double lambda);
  static WeightDistribution cauchy(double location = 0.0, double scale = 1.0);
  static WeightDistribution normal(double mu, double sigma);
  static WeightDistribution point_mass(double c);

  DistributionKind kind() const { return kind_; }
  std::string name() const;

  double sample(Rng& rng) const;
  std::vector<double> sample(Rng& rng, std::size_t count) const;

  // nullopt when the moment does not exist (Cauchy).
  std::optional<double> mean() const;
  std::optional<double> second_moment() const;
  // Throws UnsupportedMomentError for Cauchy.
  MomentSummary moments() const;

  // E_w[cos(w g)]; the characteristic function's real part.
  double cos_expectation(double gamma) const;
  // E_w[w sin(w g)] = -d/dg E_w[cos(w g)]. Throws UnsupportedMomentError for Cauchy.
  double w_sin_expectation(double gamma) const;

  // Parameters, meaning depends on kind: exponential (lambda), normal
  // (mu, sigma), cauchy (location, scale), point mass (c).
  double param_a() const { return a_; }
  double param_b() const { return b_; }

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  WeightDistribution(DistributionKind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}

  DistributionKind kind_;
  double a_;
  double b_;
};

// sqrt(mean of w^2) over a weight sample. Throws DegenerateScaleError if the
// list is empty or all zero.
double empirical_scale(std::span<const double> weights);

MomentSummary empirical_moments(std::span<const double> weights);

nlohmann::json to_json(const WeightDistribution& d);
WeightDistribution distribution_from_json(const nlohmann::json& j);

}  // namespace wqaoa
