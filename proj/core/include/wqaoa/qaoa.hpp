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

#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wqaoa/analytic_p1.hpp"
#include "wqaoa/spin_polynomial.hpp"
#include "wqaoa/statevector.hpp"
#include "wqaoa/xy_mixer.hpp"

namespace wqaoa {

struct QaoaParams {
  std::vector<double> gamma;
  std::vector<double> beta;
  BetaConvention convention = BetaConvention::kClosedForm;

  int p() const { return static_cast<int>(gamma.size()); }
  void validate() const;
  QaoaParams in(BetaConvention target) const;

  // Flat layout (gamma_1..gamma_p, beta_1..beta_p), as used by the optimizer.
  std::vector<double> flatten() const;
  static QaoaParams from_flat(std::span<const double> x,
                              BetaConvention convention = BetaConvention::kClosedForm);
};

nlohmann::json to_json(const QaoaParams& params);

enum class MixerKind { kX, kXyRing };

struct Mixer {
  MixerKind kind = MixerKind::kX;
  int k = 0;  // Hamming weight for the XY ring

  static Mixer x() { return {MixerKind::kX, 0}; }
  static Mixer xy_ring(int k) { return {MixerKind::kXyRing, k}; }
};

// Reusable evaluator: caches the cost diagonal (and sector mixer) once per
// problem so that repeated energies only pay for the circuit.
class QaoaSimulator {
 public:
  QaoaSimulator(const SpinPolynomial& poly, Mixer mixer);
  ~QaoaSimulator();
  QaoaSimulator(QaoaSimulator&&) noexcept;

  const SpinPolynomial& polynomial() const { return poly_; }
  Mixer mixer() const { return mixer_; }

  // <gamma, beta| C |gamma, beta> in cost units (orientation as in the polynomial).
  double energy(const QaoaParams& params) const;
  StateVector full_state(const QaoaParams& params) const;
  SubspaceState sector_state(const QaoaParams& params) const;
  std::span<const double> cost() const { return cost_; }

 private:
  SpinPolynomial poly_;
  Mixer mixer_;
  std::vector<double> cost_;
  std::unique_ptr<XyRingMixer> xy_;
};

double qaoa_energy(const SpinPolynomial& poly, const QaoaParams& params, Mixer mixer = Mixer::x());

struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;  // inclusive linspace; count == 1 yields lo

  double at(int i) const;
};

// p = 1 energies; rows follow beta, columns follow gamma. Betas are in
// `convention`.
struct LandscapeGrid {
  std::vector<double> gammas;
  std::vector<double> betas;
  std::vector<double> values;  // row-major (beta, gamma)

  double at(int beta_index, int gamma_index) const {
    return values[static_cast<std::size_t>(beta_index) * gammas.size() + static_cast<std::size_t>(gamma_index)];
  }
};

LandscapeGrid landscape_grid(const SpinPolynomial& poly, Mixer mixer, AxisRange gamma, AxisRange beta,
                             BetaConvention convention = BetaConvention::kClosedForm);

// First row: empty corner then gamma values; each further row: beta then
// energies. 12 significant digits.
void write_landscape_csv(std::ostream& os, const LandscapeGrid& grid);

}  // namespace wqaoa
