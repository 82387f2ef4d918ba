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

#include "wqaoa/brute_force.hpp"

#include <bit>
#include <limits>

#include "wqaoa/errors.hpp"

namespace wqaoa {

std::vector<int> spins_from_index(std::uint64_t basis_index, int n) {
  std::vector<int> z(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) z[static_cast<std::size_t>(j)] = spin_of(basis_index, j);
  return z;
}

namespace {

BruteForceResult make_result(double value, std::uint64_t index, int n) {
  return {value, index, spins_from_index(index, n)};
}

}  // namespace

Extrema extrema_of(std::span<const double> cost, int n) {
  require(n >= 0 && n <= kMaxDenseQubits, "variable count out of range");
  require(cost.size() == (std::size_t{1} << n), "cost vector length must be 2^n");
  std::size_t imin = 0;
  std::size_t imax = 0;
  for (std::size_t b = 1; b < cost.size(); ++b) {
    if (cost[b] < cost[imin]) imin = b;
    if (cost[b] > cost[imax]) imax = b;
  }
  return {make_result(cost[imin], imin, n), make_result(cost[imax], imax, n)};
}

Extrema brute_force_extrema(const SpinPolynomial& poly) {
  const auto cost = cost_vector(poly);
  return extrema_of(cost, poly.num_vars());
}

BruteForceResult brute_force_max(const SpinPolynomial& poly) {
  return brute_force_extrema(poly).max;
}

BruteForceResult brute_force_min(const SpinPolynomial& poly) {
  return brute_force_extrema(poly).min;
}

Extrema brute_force_extrema_weight(const SpinPolynomial& poly, int k) {
  const int n = poly.num_vars();
  if (n > kMaxDenseQubits) throw CapacityError("exhaustive search limited to 24 variables");
  require(k >= 0 && k <= n, "Hamming weight out of range");
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  std::uint64_t imin = 0;
  std::uint64_t imax = 0;
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (std::popcount(b) != k) continue;
    const double v = poly.evaluate_basis(b);
    if (v < vmin) vmin = v, imin = b;
    if (v > vmax) vmax = v, imax = b;
  }
  return {make_result(vmin, imin, n), make_result(vmax, imax, n)};
}

}  // namespace wqaoa
