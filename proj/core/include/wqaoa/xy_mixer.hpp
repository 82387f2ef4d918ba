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
#include <memory>
#include <vector>

#include "wqaoa/statevector.hpp"

namespace wqaoa {

// exp(-i beta B) with B = 1/2 sum_j (X_j X_{j+1} + Y_j Y_{j+1}) on a ring,
// restricted to one Hamming-weight sector. In the sector B hops a single
// excitation across each bond, so it is a real symmetric 0/1 matrix. Each
// unordered bond is counted once (n = 2 has a single bond).
class XyRingMixer {
 public:
  struct Options {
    double tolerance = 1e-12;
    int max_krylov = 40;
    std::size_t dense_limit = 1024;
  };

  XyRingMixer(int n, int k);
  XyRingMixer(int n, int k, Options opts);
  ~XyRingMixer();
  XyRingMixer(XyRingMixer&&) noexcept;
  XyRingMixer& operator=(XyRingMixer&&) noexcept;

  int num_qubits() const { return n_; }
  int weight() const { return k_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<std::uint64_t>& basis() const { return basis_; }
  bool uses_dense() const;

  // y = B x on sector amplitudes.
  void multiply(std::span<const cplx> x, std::span<cplx> y) const;
  // Throws NumericalError if the Krylov scheme cannot reach the tolerance.
  void apply(SubspaceState& state, double beta) const;

  // Sector operator as a dense row-major matrix (tests and small sectors).
  std::vector<double> dense_matrix() const;

 private:
  void apply_krylov(std::span<cplx> v, double beta) const;

  int n_ = 0;
  int k_ = 0;
  Options opts_;
  std::vector<std::uint64_t> basis_;
  std::vector<std::size_t> row_start_;
  std::vector<std::uint32_t> cols_;
  struct Dense;
  std::unique_ptr<Dense> dense_;
};

void apply_xy_ring(SubspaceState& state, double beta);

}  // namespace wqaoa
