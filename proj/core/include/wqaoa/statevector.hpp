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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "wqaoa/spin_polynomial.hpp"

namespace wqaoa {

using cplx = std::complex<double>;

// Dense amplitudes over the 2^n computational basis (bit j = qubit j).
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int n);  // |0...0>

  static StateVector plus_state(int n);
  static StateVector basis_state(int n, std::uint64_t index);

  int num_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<cplx> amplitudes() { return amps_; }
  std::span<const cplx> amplitudes() const { return amps_; }

  double norm() const;
  double expectation(std::span<const double> diagonal) const;
  std::vector<double> probabilities() const;

 private:
  int n_ = 0;
  std::vector<cplx> amps_;
};

// Amplitudes over the Hamming-weight-k sector; basis holds the sector states
// in ascending order.
class SubspaceState {
 public:
  SubspaceState() = default;
  SubspaceState(int n, int k);  // zero amplitudes

  int num_qubits() const { return n_; }
  int weight() const { return k_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<std::uint64_t>& basis() const { return basis_; }
  std::span<cplx> amplitudes() { return amps_; }
  std::span<const cplx> amplitudes() const { return amps_; }

  // Position of a sector basis state; throws PreconditionError if absent.
  std::size_t index_of(std::uint64_t state) const;
  double norm() const;
  double expectation(std::span<const double> diagonal) const;
  StateVector embed() const;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<std::uint64_t> basis_;
  std::vector<cplx> amps_;
};

inline constexpr std::uint64_t kMaxSectorDimension = 2'000'000;

std::uint64_t binomial(int n, int k);
std::vector<std::uint64_t> weight_sector(int n, int k);

// Diagonal of the cost restricted to a sector basis.
std::vector<double> sector_cost(const SpinPolynomial& poly, std::span<const std::uint64_t> basis);

// amplitude_b *= exp(-i gamma cost_b)
void apply_phase(StateVector& state, std::span<const double> cost, double gamma);
void apply_phase(SubspaceState& state, std::span<const double> cost, double gamma);

// exp(-i beta sum_j X_j)
void apply_x_mixer(StateVector& state, double beta);

// Uniform superposition over the weight-k sector; requires 0 < k < n.
SubspaceState dicke_state(int n, int k);

}  // namespace wqaoa
