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

#include "wqaoa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include <Eigen/Dense>

#include "wqaoa/csv.hpp"
#include "wqaoa/errors.hpp"

namespace wqaoa {

Bounds Bounds::qaoa_default(int p) {
  Bounds b;
  b.lower.assign(static_cast<std::size_t>(p), -8.0);
  b.upper.assign(static_cast<std::size_t>(p), 8.0);
  b.lower.insert(b.lower.end(), static_cast<std::size_t>(p), -std::numbers::pi);
  b.upper.insert(b.upper.end(), static_cast<std::size_t>(p), std::numbers::pi);
  return b;
}

Bounds Bounds::uniform(int d, double lo, double hi) {
  return {std::vector<double>(static_cast<std::size_t>(d), lo), std::vector<double>(static_cast<std::size_t>(d), hi)};
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::kXtol: return "xtol";
    case Termination::kFtol: return "ftol";
    case Termination::kMaxEvals: return "max_evals";
  }
  return "?";
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

class TrustRegionSolver {
 public:
  TrustRegionSolver(const Objective& f, const Bounds& bounds, const OptimizerOptions& opts,
                    std::span<const double> x0)
      : f_(f), opts_(opts), d_(static_cast<int>(x0.size())), npt_(2 * d_ + 1) {
    require(d_ >= 1, "optimizer needs at least one variable");
    require(bounds.lower.size() == x0.size() && bounds.upper.size() == x0.size(),
            "bounds dimension must match x0");
    scale_ = VectorXd::Ones(d_);
    if (!opts.scales.empty()) {
      require(opts.scales.size() == x0.size(), "scales dimension must match x0");
      for (int i = 0; i < d_; ++i) {
        require(opts.scales[static_cast<std::size_t>(i)] > 0.0, "scales must be positive");
        scale_(i) = opts.scales[static_cast<std::size_t>(i)];
      }
    }
    lower_.resize(d_);
    upper_.resize(d_);
    start_.resize(d_);
    for (int i = 0; i < d_; ++i) {
      const auto si = static_cast<std::size_t>(i);
      require(bounds.lower[si] < bounds.upper[si], "each lower bound must be below its upper bound");
      require(x0[si] >= bounds.lower[si] && x0[si] <= bounds.upper[si], "x0 must lie within the bounds");
      lower_(i) = bounds.lower[si] / scale_(i);
      upper_(i) = bounds.upper[si] / scale_(i);
      start_(i) = x0[si] / scale_(i);
    }
    require(opts.xtol > 0.0 && opts.rho_begin > 0.0, "xtol and rho_begin must be positive");
    require(opts.max_evals >= npt_ + 1, "max_evals must allow the initial interpolation set");
    rho_ = opts.rho_begin;
    for (int i = 0; i < d_; ++i) rho_ = std::min(rho_, (upper_(i) - lower_(i)) / 3.0);
    rho_end_ = std::min(opts.xtol, rho_);
    run_.x0.assign(x0.begin(), x0.end());
  }

  OptimizerRun solve() {
    initialise();
    double delta = rho_;
    while (true) {
      if (run_.evaluations >= opts_.max_evals) {
        run_.reason = Termination::kMaxEvals;
        break;
      }
      const VectorXd s = trust_step(delta);
      const double snorm = s.norm();
      if (snorm < 0.5 * rho_) {
        delta = std::max(0.5 * delta, rho_);
        const auto [k, dist] = farthest();
        if (dist > 2.0 * rho_ && geometry(k, delta)) continue;
        if (rho_ <= rho_end_) {
          run_.reason = Termination::kXtol;
          break;
        }
        delta = reduce_rho();
        continue;
      }
      const VectorXd xnew = clip(xopt() + s);
      const double qred = -(g_.dot(s) + 0.5 * s.dot(H_ * s));
      const double fold = fopt();
      const double fnew = evaluate(xnew);
      const double ratio = qred > 0.0 ? (fold - fnew) / qred : -1.0;
      if (ratio <= 0.1) {
        delta = std::min(0.5 * delta, snorm);
      } else if (ratio <= 0.7) {
        delta = std::max(0.5 * delta, snorm);
      } else {
        delta = std::max(0.5 * delta, 2.0 * snorm);
      }
      if (delta <= 1.5 * rho_) delta = rho_;
      insert(xnew, fnew, -1, delta);
      // Only a well-predicted step counts: a tiny gain from a poor model says
      // nothing about convergence.
      if (ratio >= 0.1 && fold - fnew <= opts_.ftol * std::abs(fnew)) {
        run_.reason = Termination::kFtol;
        break;
      }
      if (ratio >= 0.1) continue;
      const auto [k, dist] = farthest();
      if (dist > 2.0 * delta && geometry(k, delta)) continue;
      if (std::max(delta, snorm) > rho_) continue;
      if (rho_ <= rho_end_) {
        run_.reason = Termination::kXtol;
        break;
      }
      delta = reduce_rho();
    }
    const VectorXd best = xopt();
    run_.x.resize(static_cast<std::size_t>(d_));
    for (int i = 0; i < d_; ++i) run_.x[static_cast<std::size_t>(i)] = best(i) * scale_(i);
    run_.value = fopt();
    return run_;
  }

 private:
  const VectorXd& xopt() const { return pts_[static_cast<std::size_t>(kopt_)]; }
  double fopt() const { return fv_[static_cast<std::size_t>(kopt_)]; }

  VectorXd clip(VectorXd x) const { return x.cwiseMax(lower_).cwiseMin(upper_); }

  double evaluate(const VectorXd& u) {
    std::vector<double> x(static_cast<std::size_t>(d_));
    for (int i = 0; i < d_; ++i) x[static_cast<std::size_t>(i)] = u(i) * scale_(i);
    const double v = f_(x);
    if (!std::isfinite(v)) throw NumericalError("objective returned a non-finite value");
    const bool accepted = run_.trace.empty() || v < best_;
    if (accepted) best_ = v;
    run_.trace.push_back({std::move(x), v, accepted});
    ++run_.evaluations;
    return v;
  }

  void initialise() {
    pts_.clear();
    fv_.clear();
    pts_.push_back(start_);
    fv_.push_back(evaluate(start_));
    for (int i = 0; i < d_; ++i) {
      double a = rho_;
      double b = -rho_;
      if (start_(i) + a > upper_(i)) {
        a = -rho_;
        b = -2.0 * rho_;
      } else if (start_(i) + b < lower_(i)) {
        b = 2.0 * rho_;
      }
      for (double step : {a, b}) {
        VectorXd y = start_;
        y(i) += step;
        pts_.push_back(y);
        fv_.push_back(evaluate(y));
      }
    }
    kopt_ = static_cast<int>(std::min_element(fv_.begin(), fv_.end()) - fv_.begin());
    fq_ = 0.0;
    g_ = VectorXd::Zero(d_);
    H_ = MatrixXd::Zero(d_, d_);
    refit();
  }

  // Makes the model interpolate every point, changing the Hessian as little
  // as possible in Frobenius norm, and refreshes the Lagrange factorisation.
  void refit() {
    const VectorXd& xo = xopt();
    sigma_ = 0.0;
    for (const VectorXd& y : pts_) sigma_ = std::max(sigma_, (y - xo).norm());
    if (sigma_ == 0.0) throw NumericalError("interpolation set collapsed to a point");
    yhat_.resize(npt_, d_);
    for (int k = 0; k < npt_; ++k) yhat_.row(k) = ((pts_[static_cast<std::size_t>(k)] - xo) / sigma_).transpose();
    const int m = npt_ + 1 + d_;
    MatrixXd w = MatrixXd::Zero(m, m);
    const MatrixXd gram = yhat_ * yhat_.transpose();
    w.topLeftCorner(npt_, npt_) = 0.5 * gram.array().square().matrix();
    w.block(0, npt_, npt_, 1).setOnes();
    w.block(npt_, 0, 1, npt_).setOnes();
    w.block(0, npt_ + 1, npt_, d_) = yhat_;
    w.block(npt_ + 1, 0, d_, npt_) = yhat_.transpose();
    lu_.compute(w);
    VectorXd rhs = VectorXd::Zero(m);
    for (int k = 0; k < npt_; ++k) {
      const VectorXd s = pts_[static_cast<std::size_t>(k)] - xo;
      rhs(k) = fv_[static_cast<std::size_t>(k)] - (fq_ + g_.dot(s) + 0.5 * s.dot(H_ * s));
    }
    const VectorXd sol = lu_.solve(rhs);
    const VectorXd lam = sol.head(npt_);
    fq_ += sol(npt_);
    g_ += sol.tail(d_) / sigma_;
    H_ += (yhat_.transpose() * lam.asDiagonal() * yhat_) / (sigma_ * sigma_);
  }

  // Lagrange function t of the current interpolation set at xopt + s.
  double lagrange(int t, const VectorXd& s) const {
    VectorXd e = VectorXd::Zero(npt_ + 1 + d_);
    e(t) = 1.0;
    const VectorXd c = lu_.solve(e);
    const VectorXd sh = s / sigma_;
    const VectorXd proj = yhat_ * sh;
    return c(npt_) + c.tail(d_).dot(sh) + 0.5 * c.head(npt_).dot(proj.array().square().matrix());
  }

  std::pair<int, double> farthest() const {
    int k = kopt_;
    double dist = 0.0;
    for (int i = 0; i < npt_; ++i) {
      const double di = (pts_[static_cast<std::size_t>(i)] - xopt()).norm();
      if (di > dist) {
        dist = di;
        k = i;
      }
    }
    return {k, dist};
  }

  // Replaces point `forced` (or the best-poised choice) by xnew.
  void insert(const VectorXd& xnew, double fnew, int forced, double delta) {
    const bool improved = fnew < fopt();
    const VectorXd s = xnew - xopt();
    int t = forced;
    if (t < 0) {
      double best = 0.0;
      for (int k = 0; k < npt_; ++k) {
        if (k == kopt_ && !improved) continue;
        const double dist = (pts_[static_cast<std::size_t>(k)] - xopt()).norm();
        const double weight = std::max(1.0, std::pow(dist / delta, 2));
        const double score = std::abs(lagrange(k, s)) * weight * weight;
        if (score > best) {
          best = score;
          t = k;
        }
      }
      if (t < 0 || best < 1e-12) {
        if (!improved) return;
        t = t < 0 ? (kopt_ == 0 ? 1 : 0) : t;
      }
    }
    pts_[static_cast<std::size_t>(t)] = xnew;
    fv_[static_cast<std::size_t>(t)] = fnew;
    if (improved) {
      fq_ += g_.dot(s) + 0.5 * s.dot(H_ * s);
      g_ += H_ * s;
      kopt_ = t;
    }
    refit();
  }

  // Moves point k to a position that keeps the interpolation set well poised.
  bool geometry(int k, double delta) {
    const double dist = (pts_[static_cast<std::size_t>(k)] - xopt()).norm();
    const double radius = std::max(std::min(0.1 * dist, delta), rho_);
    const VectorXd s = geometry_step(k, radius);
    if (s.norm() == 0.0 || run_.evaluations >= opts_.max_evals) return false;
    const VectorXd xnew = clip(xopt() + s);
    const double fnew = evaluate(xnew);
    insert(xnew, fnew, k, delta);
    return true;
  }

  VectorXd geometry_step(int t, double radius) const {
    const VectorXd lo = lower_ - xopt();
    const VectorXd hi = upper_ - xopt();
    VectorXd best = VectorXd::Zero(d_);
    double best_val = 0.0;
    auto try_line = [&](VectorXd u) {
      const double nu = u.norm();
      if (nu == 0.0) return;
      u /= nu;
      double amax = radius;
      double amin = -radius;
      for (int i = 0; i < d_; ++i) {
        if (u(i) > 0) {
          amax = std::min(amax, hi(i) / u(i));
          amin = std::max(amin, lo(i) / u(i));
        } else if (u(i) < 0) {
          amax = std::min(amax, lo(i) / u(i));
          amin = std::max(amin, hi(i) / u(i));
        }
      }
      const double l0 = lagrange(t, VectorXd::Zero(d_));
      const double lp = lagrange(t, u);
      const double lm = lagrange(t, -u);
      const double a = 0.5 * (lp - lm);
      const double b = lp + lm - 2.0 * l0;
      std::vector<double> cand = {amin, amax};
      if (b != 0.0 && -a / b > amin && -a / b < amax) cand.push_back(-a / b);
      for (double alpha : cand) {
        const double v = std::abs(l0 + a * alpha + 0.5 * b * alpha * alpha);
        if (v > best_val && alpha != 0.0) {
          best_val = v;
          best = alpha * u;
        }
      }
    };
    for (int k = 0; k < npt_; ++k) {
      if (k != kopt_) try_line(pts_[static_cast<std::size_t>(k)] - xopt());
    }
    VectorXd e = VectorXd::Zero(npt_ + 1 + d_);
    e(t) = 1.0;
    try_line(VectorXd(lu_.solve(e).tail(d_)));
    for (int i = 0; i < d_; ++i) try_line(VectorXd::Unit(d_, i));
    return best;
  }

  // Approximately minimises the model over ||s|| <= delta within the bounds:
  // conjugate gradients on the free variables, fixing a variable whenever a
  // step reaches its bound.
  VectorXd trust_step(double delta) const {
    const VectorXd lo = lower_ - xopt();
    const VectorXd hi = upper_ - xopt();
    VectorXd s = VectorXd::Zero(d_);
    std::vector<bool> fixed(static_cast<std::size_t>(d_), false);
    for (int i = 0; i < d_; ++i) {
      if ((lo(i) >= 0.0 && g_(i) > 0.0) || (hi(i) <= 0.0 && g_(i) < 0.0)) fixed[static_cast<std::size_t>(i)] = true;
    }
    auto mask = [&](VectorXd v) {
      for (int i = 0; i < d_; ++i) {
        if (fixed[static_cast<std::size_t>(i)]) v(i) = 0.0;
      }
      return v;
    };
    const double gnorm = g_.norm();
    for (int outer = 0; outer <= d_; ++outer) {
      VectorXd r = mask(-(g_ + H_ * s));
      double rr = r.squaredNorm();
      if (rr <= std::pow(1e-12 * std::max(gnorm, 1e-300), 2)) break;
      VectorXd p = r;
      bool restart = false;
      for (int it = 0; it < d_; ++it) {
        const VectorXd hp = mask(H_ * p);
        const double curv = p.dot(hp);
        const double pp = p.squaredNorm();
        const double sp = s.dot(p);
        const double ss = s.squaredNorm();
        const double disc = std::max(0.0, sp * sp + pp * (delta * delta - ss));
        const double a_tr = (std::sqrt(disc) - sp) / pp;
        double a_bd = std::numeric_limits<double>::infinity();
        int hit = -1;
        for (int i = 0; i < d_; ++i) {
          if (fixed[static_cast<std::size_t>(i)] || p(i) == 0.0) continue;
          const double room = p(i) > 0 ? (hi(i) - s(i)) / p(i) : (lo(i) - s(i)) / p(i);
          if (room < a_bd) {
            a_bd = std::max(0.0, room);
            hit = i;
          }
        }
        const double a_cg = curv > 0.0 ? rr / curv : std::numeric_limits<double>::infinity();
        const double alpha = std::min({a_tr, a_bd, a_cg});
        s += alpha * p;
        if (alpha == a_bd && hit >= 0 && a_bd < a_tr) {
          s(hit) = p(hit) > 0 ? hi(hit) : lo(hit);
          fixed[static_cast<std::size_t>(hit)] = true;
          restart = true;
          break;
        }
        if (alpha == a_tr) return s;
        const VectorXd rn = r - alpha * hp;
        const double rrn = rn.squaredNorm();
        if (rrn <= std::pow(1e-12 * std::max(gnorm, 1e-300), 2)) return s;
        p = rn + (rrn / rr) * p;
        r = rn;
        rr = rrn;
      }
      if (!restart) break;
    }
    return s;
  }

  double reduce_rho() {
    const double ratio = rho_ / rho_end_;
    double next = 0.1 * rho_;
    if (ratio <= 16.0) {
      next = rho_end_;
    } else if (ratio <= 250.0) {
      next = std::sqrt(ratio) * rho_end_;
    }
    const double delta = std::max(0.5 * rho_, next);
    rho_ = next;
    return delta;
  }

  const Objective& f_;
  OptimizerOptions opts_;
  int d_;
  int npt_;
  VectorXd scale_, lower_, upper_, start_;
  double rho_ = 0.1;
  double rho_end_ = 1e-8;
  std::vector<VectorXd> pts_;
  std::vector<double> fv_;
  int kopt_ = 0;
  double fq_ = 0.0;
  VectorXd g_;
  MatrixXd H_;
  double sigma_ = 1.0;
  MatrixXd yhat_;
  Eigen::FullPivLU<MatrixXd> lu_;
  double best_ = 0.0;
  OptimizerRun run_;
};

}  // namespace

OptimizerRun minimize(const Objective& f, std::span<const double> x0, const Bounds& bounds,
                      const OptimizerOptions& options) {
  return TrustRegionSolver(f, bounds, options, x0).solve();
}

MultistartResult multistart_optimize(const Objective& f, const std::vector<std::vector<double>>& starts,
                                     const Bounds& bounds, const OptimizerOptions& options) {
  require(!starts.empty(), "multistart needs at least one start");
  MultistartResult out;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    out.runs.push_back(minimize(f, starts[i], bounds, options));
    if (out.runs.back().value < out.runs[static_cast<std::size_t>(out.best_index)].value) {
      out.best_index = static_cast<int>(i);
    }
  }
  out.best = out.runs[static_cast<std::size_t>(out.best_index)];
  return out;
}

void write_trace_csv(std::ostream& os, const OptimizerRun& run, const std::vector<std::string>& names) {
  const std::size_t d = run.x0.size();
  std::vector<std::string> cols = {"iteration"};
  for (std::size_t i = 0; i < d; ++i) cols.push_back(i < names.size() ? names[i] : "x" + std::to_string(i));
  cols.push_back("value");
  cols.push_back("accepted");
  CsvWriter w(os, "optimizer_trace", cols);
  for (std::size_t it = 0; it < run.trace.size(); ++it) {
    w.field(it + 1);
    for (double v : run.trace[it].x) w.field(v);
    w.field(run.trace[it].value).field(run.trace[it].accepted ? 1 : 0);
    w.end_row();
  }
}

}  // namespace wqaoa
