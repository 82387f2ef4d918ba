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

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace wqaoa {

using Objective = std::function<double(std::span<const double>)>;

struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  // gamma in [-8, 8], beta in [-pi, pi] for the (gamma..., beta...) layout.
  static Bounds qaoa_default(int p);
  static Bounds uniform(int d, double lo, double hi);
};

struct OptimizerOptions {
  double xtol = 1e-8;       // final trust-region radius
  double ftol = 1e-8;       // relative decrease below which a step ends the run
  int max_evals = 5000;
  double rho_begin = 0.1;   // initial trust-region radius
  // Optional per-variable scale: the method works in x / scale coordinates.
  std::vector<double> scales;
};

enum class Termination { kXtol, kFtol, kMaxEvals };

const char* to_string(Termination t);

struct TracePoint {
  std::vector<double> x;
  double value = 0.0;
  bool accepted = false;  // became the incumbent when evaluated
};

struct OptimizerRun {
  std::vector<double> x0;
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  std::vector<TracePoint> trace;
  Termination reason = Termination::kXtol;
  std::string method = "bobyqa";
};

// Bound-constrained derivative-free minimisation with a quadratic model
// interpolating 2d+1 points (minimum Frobenius-norm model updates) inside a
// trust region, in the spirit of Powell's BOBYQA. x0 must lie in the bounds.
OptimizerRun minimize(const Objective& f, std::span<const double> x0, const Bounds& bounds,
                      const OptimizerOptions& options = {});

struct MultistartResult {
  OptimizerRun best;
  int best_index = 0;
  std::vector<OptimizerRun> runs;
};

// Runs minimize from every start; the lowest final value wins (first on ties).
MultistartResult multistart_optimize(const Objective& f, const std::vector<std::vector<double>>& starts,
                                     const Bounds& bounds, const OptimizerOptions& options = {});

// Columns: iteration, x0..x{d-1}, value, accepted.
void write_trace_csv(std::ostream& os, const OptimizerRun& run, const std::vector<std::string>& names = {});

}  // namespace wqaoa
