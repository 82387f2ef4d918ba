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

#include "wqaoa/spin_polynomial.hpp"

namespace wqaoa {

struct BruteForceResult {
  double value = 0.0;
  std::uint64_t basis_index = 0;  // lowest index attaining `value`
  std::vector<int> spins;         // z_j = +1 for bit 0, -1 for bit 1
};

struct Extrema {
  BruteForceResult min;
  BruteForceResult max;
};

// Exhaustive search over all 2^n spin assignments. Ties go to the lowest
// basis index. Throws CapacityError for n > kMaxDenseQubits.
BruteForceResult brute_force_max(const SpinPolynomial& poly);
BruteForceResult brute_force_min(const SpinPolynomial& poly);
Extrema brute_force_extrema(const SpinPolynomial& poly);

// Same, over a precomputed cost vector of length 2^n.
Extrema extrema_of(std::span<const double> cost, int n);

// Restricted to basis states with exactly k bits set (budget constraint).
Extrema brute_force_extrema_weight(const SpinPolynomial& poly, int k);

std::vector<int> spins_from_index(std::uint64_t basis_index, int n);

}  // namespace wqaoa
