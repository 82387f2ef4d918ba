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

#include "wqaoa/qaoa.hpp"

#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

#include "wqaoa/csv.hpp"
#include "wqaoa/errors.hpp"

namespace wqaoa {

void QaoaParams::validate() const {
  require(gamma.size() == beta.size(), "gamma and beta must have equal length");
  require(!gamma.empty(), "depth p must be at least 1");
  for (double v : gamma) require(std::isfinite(v), "gamma must be finite");
  for (double v : beta) require(std::isfinite(v), "beta must be finite");
}

QaoaParams QaoaParams::in(BetaConvention target) const {
  QaoaParams out{gamma, beta, target};
  for (double& b : out.beta) b = convert_beta(b, convention, target);
  return out;
}

std::vector<double> QaoaParams::flatten() const {
  std::vector<double> x(gamma);
  x.insert(x.end(), beta.begin(), beta.end());
  return x;
}

QaoaParams QaoaParams::from_flat(std::span<const double> x, BetaConvention convention) {
  require(x.size() % 2 == 0 && !x.empty(), "flat parameter vector must have even, non-zero length");
  const std::size_t p = x.size() / 2;
  return {{x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p)}, {x.begin() + static_cast<std::ptrdiff_t>(p), x.end()}, convention};
}

nlohmann::json to_json(const QaoaParams& params) {
  return {{"p", params.p()}, {"gamma", params.gamma}, {"beta", params.beta},
          {"convention", to_string(params.convention)}};
}

QaoaSimulator::QaoaSimulator(const SpinPolynomial& poly, Mixer mixer) : poly_(poly), mixer_(mixer) {
  if (mixer.kind == MixerKind::kX) {
    cost_ = cost_vector(poly);
  } else {
    require(mixer.k > 0 && mixer.k < poly.num_vars(), "XY mixer requires 0 < k < n");
    xy_ = std::make_unique<XyRingMixer>(poly.num_vars(), mixer.k);
    cost_ = sector_cost(poly, xy_->basis());
  }
}

QaoaSimulator::~QaoaSimulator() = default;
QaoaSimulator::QaoaSimulator(QaoaSimulator&&) noexcept = default;

StateVector QaoaSimulator::full_state(const QaoaParams& params) const {
  require(mixer_.kind == MixerKind::kX, "full_state requires the transverse-field mixer");
  params.validate();
  const QaoaParams cf = params.in(BetaConvention::kClosedForm);
  StateVector s = StateVector::plus_state(poly_.num_vars());
  for (int l = 0; l < cf.p(); ++l) {
    apply_phase(s, cost_, cf.gamma[static_cast<std::size_t>(l)]);
    apply_x_mixer(s, cf.beta[static_cast<std::size_t>(l)]);
  }
  return s;
}

SubspaceState QaoaSimulator::sector_state(const QaoaParams& params) const {
  require(mixer_.kind == MixerKind::kXyRing, "sector_state requires the XY mixer");
  params.validate();
  const QaoaParams cf = params.in(BetaConvention::kClosedForm);
  SubspaceState s = dicke_state(poly_.num_vars(), mixer_.k);
  for (int l = 0; l < cf.p(); ++l) {
    apply_phase(s, cost_, cf.gamma[static_cast<std::size_t>(l)]);
    xy_->apply(s, cf.beta[static_cast<std::size_t>(l)]);
  }
  return s;
}

double QaoaSimulator::energy(const QaoaParams& params) const {
  if (mixer_.kind == MixerKind::kX) return full_state(params).expectation(cost_);
  return sector_state(params).expectation(cost_);
}

double qaoa_energy(const SpinPolynomial& poly, const QaoaParams& params, Mixer mixer) {
  return QaoaSimulator(poly, mixer).energy(params);
}

double AxisRange::at(int i) const {
  if (count <= 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

LandscapeGrid landscape_grid(const SpinPolynomial& poly, Mixer mixer, AxisRange gamma, AxisRange beta,
                             BetaConvention convention) {
  require(gamma.count >= 1 && beta.count >= 1, "grid resolution must be positive");
  const QaoaSimulator sim(poly, mixer);
  LandscapeGrid grid;
  for (int j = 0; j < gamma.count; ++j) grid.gammas.push_back(gamma.at(j));
  for (int i = 0; i < beta.count; ++i) grid.betas.push_back(beta.at(i));
  grid.values.reserve(grid.gammas.size() * grid.betas.size());
  for (double b : grid.betas) {
    for (double g : grid.gammas) grid.values.push_back(sim.energy({{g}, {b}, convention}));
  }
  return grid;
}

void write_landscape_csv(std::ostream& os, const LandscapeGrid& grid) {
  os << "beta\\gamma";
  for (double g : grid.gammas) os << ',' << format_number(g);
  os << '\n';
  for (std::size_t i = 0; i < grid.betas.size(); ++i) {
    os << format_number(grid.betas[i]);
    for (std::size_t j = 0; j < grid.gammas.size(); ++j) os << ',' << format_number(grid.at(static_cast<int>(i), static_cast<int>(j)));
    os << '\n';
  }
}

}  // namespace wqaoa
