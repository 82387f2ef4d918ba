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

#include "wqaoa/spin_polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "wqaoa/distributions.hpp"
#include "wqaoa/errors.hpp"

namespace wqaoa {

const char* to_string(Orientation o) {
  return o == Orientation::kMaximize ? "maximize" : "minimize";
}

SpinPolynomial::SpinPolynomial(int n, Orientation orientation)
    : n_(n), orientation_(orientation) {
  require(n >= 0, "variable count must be non-negative");
}

void SpinPolynomial::add_term(Indices indices, double coefficient) {
  if (!std::isfinite(coefficient)) throw PreconditionError("coefficient must be finite");
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw PreconditionError("term indices must be distinct");
  }
  for (int j : indices) {
    if (j < 0 || j >= n_) throw PreconditionError("term index out of range");
  }
  if (indices.empty()) {
    constant_ += coefficient;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(std::move(indices), coefficient);
  if (!inserted) it->second += coefficient;
  if (it->second == 0.0) terms_.erase(it);
}

double SpinPolynomial::coefficient(const Indices& sorted_indices) const {
  if (sorted_indices.empty()) return constant_;
  auto it = terms_.find(sorted_indices);
  return it == terms_.end() ? 0.0 : it->second;
}

int SpinPolynomial::degree() const {
  int d = 0;
  for (const auto& [idx, c] : terms_) d = std::max(d, static_cast<int>(idx.size()));
  return d;
}

double SpinPolynomial::evaluate(std::span<const int> spins) const {
  require(static_cast<int>(spins.size()) == n_, "spin vector length must equal variable count");
  double v = constant_;
  for (const auto& [idx, c] : terms_) {
    int s = 1;
    for (int j : idx) s *= spins[static_cast<std::size_t>(j)];
    v += c * s;
  }
  return v;
}

double SpinPolynomial::evaluate_basis(std::uint64_t basis_index) const {
  double v = constant_;
  for (const auto& [idx, c] : terms_) {
    int s = 1;
    for (int j : idx) s *= spin_of(basis_index, j);
    v += c * s;
  }
  return v;
}

SpinPolynomial SpinPolynomial::scaled(double factor) const {
  SpinPolynomial out(n_, orientation_);
  out.constant_ = constant_ * factor;
  for (const auto& [idx, c] : terms_) {
    const double s = c * factor;
    if (s != 0.0) out.terms_.emplace(idx, s);
  }
  return out;
}

SpinPolynomial maxcut_poly(const WeightedGraph& g) {
  SpinPolynomial p(g.num_vertices(), Orientation::kMaximize);
  for (const Edge& e : g.edges()) {
    p.add_constant(0.5 * e.w);
    p.add_term({e.u, e.v}, -0.5 * e.w);
  }
  return p;
}

RescaledGraph rescale_graph(const WeightedGraph& g) {
  const auto w = g.weights();
  const double scale = empirical_scale(w);
  std::vector<double> scaled(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) scaled[i] = w[i] / scale;
  return {g.with_weights(scaled), scale};
}

double polynomial_scale(const SpinPolynomial& p) {
  std::map<std::size_t, std::pair<double, std::size_t>> per_order;
  for (const auto& [idx, c] : p.terms()) {
    auto& [sum_sq, count] = per_order[idx.size()];
    sum_sq += c * c;
    ++count;
  }
  if (per_order.empty()) throw DegenerateScaleError("polynomial has no non-constant terms");
  double total = 0.0;
  for (const auto& [order, acc] : per_order) total += acc.first / static_cast<double>(acc.second);
  if (total == 0.0) throw DegenerateScaleError("all coefficients are zero");
  return std::sqrt(total);
}

RescaledPolynomial rescale_poly(const SpinPolynomial& p) {
  const double scale = polynomial_scale(p);
  return {p.scaled(1.0 / scale), scale};
}

std::vector<double> cost_vector(const SpinPolynomial& p) {
  const int n = p.num_vars();
  if (n > kMaxDenseQubits) {
    throw CapacityError("cost vector limited to " + std::to_string(kMaxDenseQubits) + " variables");
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> c(dim, p.constant());
  for (const auto& [idx, coef] : p.terms()) {
    std::uint64_t mask = 0;
    for (int j : idx) mask |= std::uint64_t{1} << j;
    for (std::size_t b = 0; b < dim; ++b) {
      c[b] += (std::popcount(b & mask) & 1) ? -coef : coef;
    }
  }
  return c;
}

}  // namespace wqaoa
