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

#include "wqaoa/skbias.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <string>

#include "wqaoa/errors.hpp"
#include "wqaoa/parallel.hpp"
#include "wqaoa/rng.hpp"

namespace wqaoa {

namespace {

constexpr int kMaxSpins = 22;

double pairs(int N) { return 0.5 * N * (N - 1); }

void check_even(int N) {
  require(N >= 2, "N must be at least 2");
  if (N % 2 != 0) throw PreconditionError("biased SK quantities are defined for even N only");
}

}  // namespace

void BiasedSKSpec::validate() const {
  check_even(N);
  require(sigma > 0.0 && std::isfinite(sigma), "sigma must be positive");
  require(std::isfinite(mu), "mu must be finite");
}

double h_of_N(int N, double mu) {
  check_even(N);
  if (mu > 0) return 0.25 * N * N;
  if (mu < 0) return -pairs(N);
  return 0.0;
}

double max_mean_objective(int N, double mu) {
  check_even(N);
  // E[G] = -mu sum_{i<j} z_i z_j = -mu ((sum z)^2 - N) / 2.
  if (mu > 0) return mu * N / 2.0;
  if (mu < 0) return -mu * pairs(N);
  return 0.0;
}

namespace {

double fluctuation_bound(const BiasedSKSpec& spec) {
  return spec.sigma * std::sqrt(std::log(4.0) * spec.N * pairs(spec.N));
}

}  // namespace

SkBounds bounds(const BiasedSKSpec& spec) {
  spec.validate();
  const double lo = max_mean_objective(spec.N, spec.mu);
  return {lo, lo + fluctuation_bound(spec)};
}

SkBounds bounds_as_printed(const BiasedSKSpec& spec) {
  spec.validate();
  const double lo = spec.mu * h_of_N(spec.N, spec.mu);
  return {lo, lo + fluctuation_bound(spec)};
}

std::vector<double> sample_couplings(const BiasedSKSpec& spec, std::uint64_t stream) {
  Rng rng = make_rng(spec.seed, stream);
  std::normal_distribution<double> normal(spec.mu, spec.sigma);
  const auto n = static_cast<std::size_t>(spec.N);
  std::vector<double> j(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) j[a * n + b] = j[b * n + a] = normal(rng);
  }
  return j;
}

double sk_max(std::span<const double> coupling, int N) {
  require(N >= 2 && N <= kMaxSpins, "sk_max supports 2 <= N <= 22");
  const auto n = static_cast<std::size_t>(N);
  require(coupling.size() == n * n, "coupling matrix must be N x N");
  // Start from all spins +1; the last spin stays fixed since G(z) = G(-z).
  std::vector<double> z(n, 1.0);
  std::vector<double> field(n, 0.0);  // field_i = sum_j J_ij z_j
  double g = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) field[a] += coupling[a * n + b];
    for (std::size_t b = a + 1; b < n; ++b) g -= coupling[a * n + b];
  }
  double best = g;
  const std::uint64_t steps = std::uint64_t{1} << (N - 1);
  for (std::uint64_t k = 1; k < steps; ++k) {
    const auto i = static_cast<std::size_t>(std::countr_zero(k));
    const double zi = z[i];
    g += 2.0 * zi * field[i];
    z[i] = -zi;
    const double* row = coupling.data() + i * n;
    const double delta = -2.0 * zi;
    for (std::size_t b = 0; b < n; ++b) field[b] += delta * row[b];
    if (g > best) best = g;
  }
  return best;
}

MonteCarloEstimate mc_expected_max(const BiasedSKSpec& spec, std::size_t samples, int threads) {
  spec.validate();
  if (spec.N > kMaxSpins) throw CapacityError("exhaustive SK maximum limited to N <= 22");
  require(samples >= 2, "need at least two Monte-Carlo samples");
  std::vector<double> values(samples);
  parallel_for(samples, threads, [&](std::size_t s) {
    values[s] = sk_max(sample_couplings(spec, s), spec.N);
  });
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(samples);
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(samples - 1);
  return {mean, std::sqrt(var / static_cast<double>(samples)), samples};
}

const char* to_string(SkRegime r) {
  switch (r) {
    case SkRegime::kConstantBias: return "constant";
    case SkRegime::kSqrtNBias: return "sqrtN";
    case SkRegime::kZeroBias: return "zero";
  }
  return "?";
}

SkRegime sk_regime_from_string(const char* name) {
  const std::string s(name);
  if (s == "constant") return SkRegime::kConstantBias;
  if (s == "sqrtN") return SkRegime::kSqrtNBias;
  if (s == "zero") return SkRegime::kZeroBias;
  throw ConfigError("unknown SK regime: " + s);
}

double limiting_value(double mu, SkRegime regime, double sigma) {
  const double bias = mu < 0 ? -mu / 2.0 : 0.0;
  switch (regime) {
    case SkRegime::kConstantBias: return bias;
    case SkRegime::kZeroBias: return sigma * kParisiValue;
    case SkRegime::kSqrtNBias: return sigma * kParisiValue + bias;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double limiting_value_as_printed(double mu, SkRegime regime, double sigma) {
  const double sign = mu >= 0 ? 1.0 : 0.0;
  const double bias = mu / (2.0 * (1.0 + sign));
  switch (regime) {
    case SkRegime::kConstantBias: return bias;
    case SkRegime::kZeroBias: return sigma * kParisiValue;
    case SkRegime::kSqrtNBias: return sigma * kParisiValue + bias;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace wqaoa
