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

#include "wqaoa/xy_mixer.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include <Eigen/Dense>

#include "wqaoa/errors.hpp"

namespace wqaoa {

struct XyRingMixer::Dense {
  Eigen::MatrixXd vectors;
  Eigen::VectorXd values;
};

XyRingMixer::XyRingMixer(int n, int k) : XyRingMixer(n, k, Options{}) {}

XyRingMixer::XyRingMixer(int n, int k, Options opts)
    : n_(n), k_(k), opts_(opts), basis_(weight_sector(n, k)) {
  require(n >= 2, "XY ring needs at least two qubits");
  require(opts.max_krylov >= 2, "Krylov dimension must be at least 2");
  std::set<std::pair<int, int>> bonds;
  for (int j = 0; j < n; ++j) {
    const int a = j;
    const int b = (j + 1) % n;
    bonds.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<std::uint64_t> masks;
  for (const auto& [a, b] : bonds) masks.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b));

  row_start_.reserve(basis_.size() + 1);
  row_start_.push_back(0);
  for (std::uint64_t state : basis_) {
    for (std::uint64_t m : masks) {
      const std::uint64_t bits = state & m;
      if (bits == 0 || bits == m) continue;  // both empty or both occupied
      const std::uint64_t to = state ^ m;
      const auto it = std::lower_bound(basis_.begin(), basis_.end(), to);
      cols_.push_back(static_cast<std::uint32_t>(it - basis_.begin()));
    }
    row_start_.push_back(cols_.size());
  }

  if (basis_.size() <= opts_.dense_limit) {
    const auto d = static_cast<Eigen::Index>(basis_.size());
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      for (std::size_t e = row_start_[static_cast<std::size_t>(r)]; e < row_start_[static_cast<std::size_t>(r) + 1]; ++e) {
        b(r, cols_[e]) = 1.0;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    dense_ = std::make_unique<Dense>(Dense{es.eigenvectors(), es.eigenvalues()});
  }
}

XyRingMixer::~XyRingMixer() = default;
XyRingMixer::XyRingMixer(XyRingMixer&&) noexcept = default;
XyRingMixer& XyRingMixer::operator=(XyRingMixer&&) noexcept = default;

bool XyRingMixer::uses_dense() const { return dense_ != nullptr; }

void XyRingMixer::multiply(std::span<const cplx> x, std::span<cplx> y) const {
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    cplx acc{0.0, 0.0};
    for (std::size_t e = row_start_[r]; e < row_start_[r + 1]; ++e) acc += x[cols_[e]];
    y[r] = acc;
  }
}

std::vector<double> XyRingMixer::dense_matrix() const {
  const std::size_t d = basis_.size();
  std::vector<double> m(d * d, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t e = row_start_[r]; e < row_start_[r + 1]; ++e) m[r * d + cols_[e]] = 1.0;
  }
  return m;
}

void XyRingMixer::apply(SubspaceState& state, double beta) const {
  if (state.num_qubits() != n_ || state.weight() != k_) {
    throw PreconditionError("state sector does not match the mixer");
  }
  auto v = state.amplitudes();
  if (beta == 0.0) return;
  if (dense_) {
    using Vec = Eigen::VectorXcd;
    Eigen::Map<Vec> x(v.data(), static_cast<Eigen::Index>(v.size()));
    Vec coeff = dense_->vectors.transpose().cast<cplx>() * x;
    for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff(i) *= std::polar(1.0, -beta * dense_->values(i));
    x = dense_->vectors.cast<cplx>() * coeff;
    return;
  }
  apply_krylov(v, beta);
}

// Lanczos approximation of exp(-i t B) v. The Krylov basis does not depend on
// t, so each outer step builds one basis and then takes the largest sub-step
// whose a-posteriori error estimate meets the tolerance.
void XyRingMixer::apply_krylov(std::span<cplx> v, double beta) const {
  const std::size_t d = v.size();
  const int mmax = std::min<int>(opts_.max_krylov, static_cast<int>(d));
  std::vector<std::vector<cplx>> q(static_cast<std::size_t>(mmax + 1), std::vector<cplx>(d));
  std::vector<cplx> w(d);
  double remaining = std::abs(beta);
  const double sign = beta < 0 ? -1.0 : 1.0;
  int guard = 0;
  while (remaining > 0.0) {
    if (++guard > 100000) throw NumericalError("Krylov exponential made no progress");
    double vnorm = 0.0;
    for (const cplx& c : v) vnorm += std::norm(c);
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) return;
    for (std::size_t i = 0; i < d; ++i) q[0][i] = v[i] / vnorm;
    std::vector<double> alpha;
    std::vector<double> off;
    int m = 0;
    bool invariant = false;
    double next_beta = 0.0;
    for (int j = 0; j < mmax; ++j) {
      multiply(q[static_cast<std::size_t>(j)], w);
      cplx a{0.0, 0.0};
      for (std::size_t i = 0; i < d; ++i) a += std::conj(q[static_cast<std::size_t>(j)][i]) * w[i];
      alpha.push_back(a.real());
      for (std::size_t i = 0; i < d; ++i) {
        w[i] -= a.real() * q[static_cast<std::size_t>(j)][i];
        if (j > 0) w[i] -= off[static_cast<std::size_t>(j - 1)] * q[static_cast<std::size_t>(j - 1)][i];
      }
      // Full reorthogonalisation keeps the small basis numerically orthonormal.
      for (int l = 0; l <= j; ++l) {
        cplx h{0.0, 0.0};
        for (std::size_t i = 0; i < d; ++i) h += std::conj(q[static_cast<std::size_t>(l)][i]) * w[i];
        for (std::size_t i = 0; i < d; ++i) w[i] -= h * q[static_cast<std::size_t>(l)][i];
      }
      double b = 0.0;
      for (const cplx& c : w) b += std::norm(c);
      b = std::sqrt(b);
      m = j + 1;
      if (b < 1e-14) {
        invariant = true;
        break;
      }
      next_beta = b;
      if (j + 1 < mmax + 1) {
        for (std::size_t i = 0; i < d; ++i) q[static_cast<std::size_t>(j + 1)][i] = w[i] / b;
      }
      if (j + 1 < mmax) off.push_back(b);
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = off[static_cast<std::size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const Eigen::MatrixXd& u = es.eigenvectors();
    const Eigen::VectorXd& lam = es.eigenvalues();
    auto small_exp = [&](double tau) {
      Eigen::VectorXcd c(m);
      for (int i = 0; i < m; ++i) c(i) = u(0, i) * std::polar(1.0, -sign * tau * lam(i));
      return Eigen::VectorXcd(u.cast<cplx>() * c);
    };
    double tau = remaining;
    Eigen::VectorXcd y = small_exp(tau);
    if (!invariant) {
      // Error estimate: norm of the residual component beyond the basis.
      int halvings = 0;
      while (next_beta * std::abs(y(m - 1)) > opts_.tolerance * 0.1) {
        tau *= 0.5;
        y = small_exp(tau);
        if (++halvings > 60) {
          std::ostringstream os;
          os << "Krylov exponential failed to converge: sector dim " << d << ", beta " << beta;
          throw NumericalError(os.str());
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      cplx acc{0.0, 0.0};
      for (int l = 0; l < m; ++l) acc += y(l) * q[static_cast<std::size_t>(l)][i];
      v[i] = vnorm * acc;
    }
    remaining -= tau;
    if (remaining < 1e-15 * std::abs(beta)) remaining = 0.0;
  }
}

void apply_xy_ring(SubspaceState& state, double beta) {
  const XyRingMixer mixer(state.num_qubits(), state.weight());
  mixer.apply(state, beta);
}

}  // namespace wqaoa
