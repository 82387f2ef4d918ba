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

#include "wqaoa/distributions.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wqaoa/errors.hpp"

namespace wqaoa {

namespace {

// sin(g) / g with a series near zero.
double sinc(double g) {
  if (std::abs(g) < 1e-4) {
    const double g2 = g * g;
    return 1.0 - g2 / 6.0 + g2 * g2 / 120.0;
  }
  return std::sin(g) / g;
}

// (sin g - g cos g) / g^2 = integral_0^1 w sin(w g) dw.
double uniform_w_sin(double g) {
  if (std::abs(g) < 1e-2) {
    const double g2 = g * g;
    return g * (1.0 / 3.0 - g2 / 30.0 + g2 * g2 / 840.0 - g2 * g2 * g2 / 45360.0);
  }
  return (std::sin(g) - g * std::cos(g)) / (g * g);
}

}  // namespace

WeightDistribution WeightDistribution::uniform_plus() {
  return {DistributionKind::kUniformPlus, 0.0, 1.0};
}

WeightDistribution WeightDistribution::uniform_sym() {
  return {DistributionKind::kUniformSym, -1.0, 1.0};
}

WeightDistribution WeightDistribution::exponential(double lambda) {
  require(lambda > 0.0 && std::isfinite(lambda), "exponential rate must be positive");
  return {DistributionKind::kExponential, lambda, 0.0};
}

WeightDistribution WeightDistribution::cauchy(double location, double scale) {
  require(scale > 0.0 && std::isfinite(scale) && std::isfinite(location),
          "Cauchy scale must be positive");
  return {DistributionKind::kCauchy, location, scale};
}

WeightDistribution WeightDistribution::normal(double mu, double sigma) {
  require(sigma > 0.0 && std::isfinite(sigma) && std::isfinite(mu),
          "normal standard deviation must be positive");
  return {DistributionKind::kNormal, mu, sigma};
}

WeightDistribution WeightDistribution::point_mass(double c) {
  require(std::isfinite(c), "point mass must be finite");
  return {DistributionKind::kPointMass, c, 0.0};
}

std::string WeightDistribution::name() const {
  std::ostringstream os;
  switch (kind_) {
    case DistributionKind::kUniformPlus: return "uniform-plus";
    case DistributionKind::kUniformSym: return "uniform-sym";
    case DistributionKind::kExponential: os << "exponential(" << a_ << ")"; break;
    case DistributionKind::kCauchy: os << "cauchy(" << a_ << "," << b_ << ")"; break;
    case DistributionKind::kNormal: os << "normal(" << a_ << "," << b_ << ")"; break;
    case DistributionKind::kPointMass: os << "point-mass(" << a_ << ")"; break;
  }
  return os.str();
}

double WeightDistribution::sample(Rng& rng) const {
  switch (kind_) {
    case DistributionKind::kUniformPlus:
    case DistributionKind::kUniformSym:
      return std::uniform_real_distribution<double>(a_, b_)(rng);
    case DistributionKind::kExponential:
      return std::exponential_distribution<double>(a_)(rng);
    case DistributionKind::kCauchy:
      return std::cauchy_distribution<double>(a_, b_)(rng);
    case DistributionKind::kNormal:
      return std::normal_distribution<double>(a_, b_)(rng);
    case DistributionKind::kPointMass:
      return a_;
  }
  return 0.0;
}

std::vector<double> WeightDistribution::sample(Rng& rng, std::size_t count) const {
  std::vector<double> out(count);
  for (double& x : out) x = sample(rng);
  return out;
}

std::optional<double> WeightDistribution::mean() const {
  switch (kind_) {
    case DistributionKind::kUniformPlus: return 0.5;
    case DistributionKind::kUniformSym: return 0.0;
    case DistributionKind::kExponential: return 1.0 / a_;
    case DistributionKind::kCauchy: return std::nullopt;
    case DistributionKind::kNormal: return a_;
    case DistributionKind::kPointMass: return a_;
  }
  return std::nullopt;
}

std::optional<double> WeightDistribution::second_moment() const {
  switch (kind_) {
    case DistributionKind::kUniformPlus:
    case DistributionKind::kUniformSym: return 1.0 / 3.0;
    case DistributionKind::kExponential: return 2.0 / (a_ * a_);
    case DistributionKind::kCauchy: return std::nullopt;
    case DistributionKind::kNormal: return a_ * a_ + b_ * b_;
    case DistributionKind::kPointMass: return a_ * a_;
  }
  return std::nullopt;
}

MomentSummary WeightDistribution::moments() const {
  auto m = mean();
  auto m2 = second_moment();
  if (!m || !m2) throw UnsupportedMomentError(name() + " has no finite moments");
  return {*m, *m2, MomentSummary::Source::kAnalytic};
}

double WeightDistribution::cos_expectation(double g) const {
  switch (kind_) {
    case DistributionKind::kUniformPlus:
    case DistributionKind::kUniformSym:
      return sinc(g);
    case DistributionKind::kExponential: {
      const double l2 = a_ * a_;
      return l2 / (l2 + g * g);
    }
    case DistributionKind::kCauchy:
      return std::cos(a_ * g) * std::exp(-b_ * std::abs(g));
    case DistributionKind::kNormal:
      return std::exp(-0.5 * b_ * b_ * g * g) * std::cos(a_ * g);
    case DistributionKind::kPointMass:
      return std::cos(a_ * g);
  }
  return 0.0;
}

double WeightDistribution::w_sin_expectation(double g) const {
  switch (kind_) {
    case DistributionKind::kUniformPlus:
    case DistributionKind::kUniformSym:
      // The symmetric case integrates an even integrand, giving the same value.
      return uniform_w_sin(g);
    case DistributionKind::kExponential: {
      const double l2 = a_ * a_;
      const double den = l2 + g * g;
      return 2.0 * g * l2 / (den * den);
    }
    case DistributionKind::kCauchy:
      throw UnsupportedMomentError("E[w sin(w g)] diverges for Cauchy weights");
    case DistributionKind::kNormal: {
      const double s2 = b_ * b_;
      return std::exp(-0.5 * s2 * g * g) * (s2 * g * std::cos(a_ * g) + a_ * std::sin(a_ * g));
    }
    case DistributionKind::kPointMass:
      return a_ * std::sin(a_ * g);
  }
  return 0.0;
}

double empirical_scale(std::span<const double> weights) {
  if (weights.empty()) throw DegenerateScaleError("empirical scale of an empty weight list");
  double s = 0.0;
  for (double w : weights) s += w * w;
  if (s == 0.0) throw DegenerateScaleError("all weights are zero");
  return std::sqrt(s / static_cast<double>(weights.size()));
}

MomentSummary empirical_moments(std::span<const double> weights) {
  require(!weights.empty(), "empirical moments of an empty list");
  double s1 = 0.0;
  double s2 = 0.0;
  for (double w : weights) {
    s1 += w;
    s2 += w * w;
  }
  const double n = static_cast<double>(weights.size());
  return {s1 / n, s2 / n, MomentSummary::Source::kEmpirical};
}

nlohmann::json to_json(const WeightDistribution& d) {
  switch (d.kind()) {
    case DistributionKind::kUniformPlus: return {{"kind", "uniform-plus"}};
    case DistributionKind::kUniformSym: return {{"kind", "uniform-sym"}};
    case DistributionKind::kExponential: return {{"kind", "exponential"}, {"lambda", d.param_a()}};
    case DistributionKind::kCauchy:
      return {{"kind", "cauchy"}, {"location", d.param_a()}, {"scale", d.param_b()}};
    case DistributionKind::kNormal:
      return {{"kind", "normal"}, {"mu", d.param_a()}, {"sigma", d.param_b()}};
    case DistributionKind::kPointMass: return {{"kind", "point-mass"}, {"c", d.param_a()}};
  }
  return {};
}

WeightDistribution distribution_from_json(const nlohmann::json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "uniform-plus") return WeightDistribution::uniform_plus();
    if (kind == "uniform-sym") return WeightDistribution::uniform_sym();
    if (kind == "exponential") return WeightDistribution::exponential(j.value("lambda", 0.2));
    if (kind == "cauchy") {
      return WeightDistribution::cauchy(j.value("location", 0.0), j.value("scale", 1.0));
    }
    if (kind == "normal") return WeightDistribution::normal(j.value("mu", 0.0), j.value("sigma", 1.0));
    if (kind == "point-mass") return WeightDistribution::point_mass(j.value("c", 1.0));
    throw ConfigError("unknown distribution kind '" + kind + "'");
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("bad distribution JSON: ") + ex.what());
  } catch (const PreconditionError& ex) {
    throw ConfigError(ex.what());
  }
}

}  // namespace wqaoa
