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

#include "wqaoa/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "wqaoa/errors.hpp"

namespace wqaoa {

namespace {

void check_qubits(int n) {
  require(n >= 1, "need at least one qubit");
  if (n > kMaxDenseQubits) throw CapacityError("statevector limited to 24 qubits");
}

double norm_of(std::span<const cplx> a) {
  double s = 0.0;
  for (const cplx& c : a) s += std::norm(c);
  return std::sqrt(s);
}

double expectation_of(std::span<const cplx> a, std::span<const double> d) {
  if (a.size() != d.size()) throw PreconditionError("diagonal length does not match state dimension");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i]) * d[i];
  return s;
}

void phase(std::span<cplx> a, std::span<const double> cost, double gamma) {
  if (a.size() != cost.size()) throw PreconditionError("cost vector length does not match state dimension");
  // Spelled-out products: std::complex operator* takes a slow NaN-aware path.
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = -gamma * cost[i];
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double re = a[i].real();
    const double im = a[i].imag();
    a[i] = {re * c - im * s, re * s + im * c};
  }
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
  check_qubits(n);
  amps_.assign(std::size_t{1} << n, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::plus_state(int n) {
  StateVector s(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
  std::fill(s.amps_.begin(), s.amps_.end(), cplx{a, 0.0});
  return s;
}

StateVector StateVector::basis_state(int n, std::uint64_t index) {
  StateVector s(n);
  require(index < s.dimension(), "basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const { return norm_of(amps_); }

double StateVector::expectation(std::span<const double> diagonal) const {
  return expectation_of(amps_, diagonal);
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::vector<std::uint64_t> weight_sector(int n, int k) {
  check_qubits(n);
  require(k >= 0 && k <= n, "Hamming weight out of range");
  const std::uint64_t count = binomial(n, k);
  if (count > kMaxSectorDimension) throw CapacityError("sector dimension exceeds 2e6");
  std::vector<std::uint64_t> basis;
  basis.reserve(count);
  if (k == 0) {
    basis.push_back(0);
    return basis;
  }
  // Gosper's hack enumerates k-subsets in increasing order.
  std::uint64_t b = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (b < limit) {
    basis.push_back(b);
    const std::uint64_t c = b & (~b + 1);
    const std::uint64_t r = b + c;
    b = (((r ^ b) >> 2) / c) | r;
  }
  return basis;
}

SubspaceState::SubspaceState(int n, int k) : n_(n), k_(k), basis_(weight_sector(n, k)) {
  amps_.assign(basis_.size(), cplx{0.0, 0.0});
}

std::size_t SubspaceState::index_of(std::uint64_t state) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), state);
  if (it == basis_.end() || *it != state) throw PreconditionError("state is not in the sector");
  return static_cast<std::size_t>(it - basis_.begin());
}

double SubspaceState::norm() const { return norm_of(amps_); }

double SubspaceState::expectation(std::span<const double> diagonal) const {
  return expectation_of(amps_, diagonal);
}

StateVector SubspaceState::embed() const {
  StateVector full(n_);
  auto a = full.amplitudes();
  a[0] = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i) a[basis_[i]] = amps_[i];
  return full;
}

std::vector<double> sector_cost(const SpinPolynomial& poly, std::span<const std::uint64_t> basis) {
  std::vector<double> c(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) c[i] = poly.evaluate_basis(basis[i]);
  return c;
}

void apply_phase(StateVector& state, std::span<const double> cost, double gamma) {
  phase(state.amplitudes(), cost, gamma);
}

void apply_phase(SubspaceState& state, std::span<const double> cost, double gamma) {
  phase(state.amplitudes(), cost, gamma);
}

void apply_x_mixer(StateVector& state, double beta) {
  // [[c, -i s], [-i s, c]] on each qubit; -i s * (x + iy) = s y - i s x.
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  auto a = state.amplitudes();
  const std::size_t dim = a.size();
  for (int q = 0; q < state.num_qubits(); ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const cplx a0 = a[i];
        const cplx a1 = a[i + stride];
        a[i] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
        a[i + stride] = {c * a1.real() + s * a0.imag(), c * a1.imag() - s * a0.real()};
      }
    }
  }
}

SubspaceState dicke_state(int n, int k) {
  require(k > 0 && k < n, "Dicke state requires 0 < k < n");
  SubspaceState s(n, k);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
  for (cplx& v : s.amplitudes()) v = a;
  return s;
}

}  // namespace wqaoa
