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
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "wqaoa/graph.hpp"

namespace wqaoa {

enum class Orientation { kMaximize, kMinimize };

const char* to_string(Orientation o);

// Basis convention shared by every dense routine: bit j of a basis index is
// variable j, and bit value 0 means spin +1.
inline int spin_of(std::uint64_t basis_index, int var) {
  return ((basis_index >> var) & 1U) ? -1 : 1;
}

// Sparse multilinear polynomial over spins z_j in {-1, +1}.
//   f(z) = constant + sum_T c_T prod_{j in T} z_j
// Index tuples are strictly increasing and zero coefficients are dropped.
class SpinPolynomial {
 public:
  using Indices = std::vector<int>;

  SpinPolynomial() = default;
  explicit SpinPolynomial(int n, Orientation orientation = Orientation::kMaximize);

  int num_vars() const { return n_; }
  Orientation orientation() const { return orientation_; }
  void set_orientation(Orientation o) { orientation_ = o; }

  double constant() const { return constant_; }
  void add_constant(double c) { constant_ += c; }

  // Accumulates into the term for `indices` (any order, must be distinct).
  void add_term(Indices indices, double coefficient);
  double coefficient(const Indices& sorted_indices) const;

  const std::map<Indices, double>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  int degree() const;

  double evaluate(std::span<const int> spins) const;
  double evaluate_basis(std::uint64_t basis_index) const;

  // Every coefficient and the constant multiplied by `factor`.
  SpinPolynomial scaled(double factor) const;

 private:
  int n_ = 0;
  Orientation orientation_ = Orientation::kMaximize;
  double constant_ = 0.0;
  std::map<Indices, double> terms_;
};

// Cut weight: (1/2) sum_e w_e (1 - z_u z_v). Orientation maximize.
SpinPolynomial maxcut_poly(const WeightedGraph& g);

struct RescaledGraph {
  WeightedGraph graph;
  double scale = 1.0;
};

struct RescaledPolynomial {
  SpinPolynomial poly;
  double scale = 1.0;
};

// Divide every weight by sqrt(mean w^2); the result has unit mean square.
RescaledGraph rescale_graph(const WeightedGraph& g);

// Divide the whole polynomial (constant included) by
//   sqrt( sum over orders k of mean_{|T| = k} c_T^2 ).
// The constant does not enter the scale.
RescaledPolynomial rescale_poly(const SpinPolynomial& p);
double polynomial_scale(const SpinPolynomial& p);

inline constexpr int kMaxDenseQubits = 24;

// Diagonal of the cost Hamiltonian in the computational basis.
std::vector<double> cost_vector(const SpinPolynomial& p);

}  // namespace wqaoa
