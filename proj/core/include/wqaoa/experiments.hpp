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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wqaoa/distributions.hpp"
#include "wqaoa/graph.hpp"
#include "wqaoa/optimizer.hpp"
#include "wqaoa/paramset.hpp"
#include "wqaoa/portfolio.hpp"
#include "wqaoa/qaoa.hpp"
#include "wqaoa/skbias.hpp"

namespace wqaoa {

// Lower median (element floor((n-1)/2) of the sorted values).
double lower_median(std::vector<double> values);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------- MaxCut ---

struct MaxcutBenchConfig {
  int instances = 50;  // per (distribution, n)
  std::vector<int> n = {8, 10, 12};
  std::vector<int> p = {1, 2, 3};
  std::vector<WeightDistribution> distributions = {WeightDistribution::exponential(0.2),
                                                    WeightDistribution::cauchy()};
  // Instance i uses graph_kinds[i % size]; regular graphs are (branching+1)-
  // regular, Erdos-Renyi graphs target er_avg_degree.
  std::vector<GraphKind> graph_kinds = {GraphKind::kRandomRegular, GraphKind::kErdosRenyi};
  int branching = 2;
  double er_avg_degree = 3.0;
  int starts = 20;
  OptimizerOptions optimizer{1e-5, 1e-9, 800, 0.1, {}};
  InfParamTable table = InfParamTable::builtin();
  std::optional<InfParamTable> median;  // baseline gammas; defaults to table
};

struct BenchmarkRecord {
  int instance = 0;
  int n = 0;
  int p = 0;
  std::string distribution;
  std::string graph_kind;
  std::string scheme;  // method_i, method_ii, baseline, optimized
  double energy = 0.0;
  double max_cut = 0.0;
  double min_cut = 0.0;
  double ratio = 0.0;
  double gap = 0.0;  // optimized ratio minus this ratio
  QaoaParams params;
};

// True when approximation ratios use (E - min)/(max - min).
bool uses_minmax_ratio(const WeightDistribution& dist);

std::vector<BenchmarkRecord> run_maxcut_benchmark(const MaxcutBenchConfig& cfg, std::uint64_t seed,
                                                  int threads = 1);

struct GapSummary {
  std::string distribution;
  int p = 0;
  std::string scheme;
  std::size_t count = 0;
  double median_ratio = 0.0;
  double median_gap = 0.0;
};

// Medians per (distribution, p, scheme), pooled over n.
std::vector<GapSummary> summarize_gaps(const std::vector<BenchmarkRecord>& records);

void write_benchmark_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records);
void write_gap_table_csv(std::ostream& os, const std::vector<GapSummary>& rows);

// ------------------------------------------------------------- Portfolio ---

struct PortfolioStudyConfig {
  std::vector<int> n = {7, 8, 9, 10, 11, 12, 13, 14};
  int instances_per_n = 10;
  PortfolioGenOptions generator;
  OptimizerOptions optimizer{1e-8, 1e-8, 20000, 0.1, {}};
  // Closed-form start: the table point (1, pi/4) mapped onto a minimised raw
  // polynomial. exp(-i g sum w(1-zz)/2) is exp(+i g f) for f = sum (w/2) zz, and
  // f has rms coefficient 1/2, so (1, pi/8) becomes (-1/2, pi/8) ~ (1/2, -pi/8).
  double start_gamma = 0.5;
  double start_beta = -0.39269908169872414;
  double gamma_bound = 8.0;                       // rescaled arm: |gamma| <= bound
  // Give the original arm the image of the rescaled box, |gamma| <= bound/s,
  // so both arms search the same physical parameter region.
  bool scale_original_bounds = true;
  double same_tolerance = 1e-6;  // |E_original - s * E_rescaled|, original units
};

struct PortfolioRecord {
  int instance = 0;
  int n = 0;
  int k = 0;
  double scale = 1.0;
  int iterations_original = 0;
  int iterations_rescaled = 0;
  double value_original = 0.0;  // original units
  double value_rescaled = 0.0;  // rescaled optimum times the scale
  double constrained_min = 0.0;
  bool same_optimum = false;
  std::string termination_original;
  std::string termination_rescaled;
  QaoaParams params_original;
  QaoaParams params_rescaled;
};

std::vector<PortfolioRecord> run_portfolio_study(const PortfolioStudyConfig& cfg, std::uint64_t seed,
                                                 int threads = 1);

struct PortfolioSummary {
  std::size_t instances = 0;
  double same_fraction = 0.0;
  double median_ratio = 0.0;  // iterations original / rescaled
  double mean_ratio = 0.0;
};

PortfolioSummary summarize_portfolio(const std::vector<PortfolioRecord>& records);

void write_portfolio_csv(std::ostream& os, const std::vector<PortfolioRecord>& records);
// Fraction of instances solved (same optimum found) within each budget.
void write_performance_profile_csv(std::ostream& os, const std::vector<PortfolioRecord>& records);

// --------------------------------------------------------- Concentration ---

struct ConcentrationConfig {
  std::vector<int> D = {2, 3, 5, 9};
  int samples = 2000;
  std::vector<WeightDistribution> distributions = {WeightDistribution::uniform_plus(),
                                                    WeightDistribution::normal(1.0, 0.5)};
  // Random bipartite (D+1)-regular graphs with sides of side_factor * (D+1).
  int side_factor = 2;
};

struct ConcentrationRecord {
  std::string distribution;
  int D = 0;
  int n = 0;
  double gamma = 0.0;
  double mean = 0.0;
  double std_dev = 0.0;
  double rel_std = 0.0;
};

std::vector<ConcentrationRecord> run_concentration(const ConcentrationConfig& cfg, std::uint64_t seed);

// log-log slope of rel_std against D for one distribution.
double concentration_slope(const std::vector<ConcentrationRecord>& records, const std::string& distribution);

void write_concentration_csv(std::ostream& os, const std::vector<ConcentrationRecord>& records);

// ------------------------------------------------------------- Landscape ---

struct LandscapeConfig {
  int n = 8;
  std::uint64_t instance = 0;
  PortfolioGenOptions generator;
  AxisRange gamma{-4.0, 4.0, 41};
  AxisRange beta{-1.5707963267948966, 1.5707963267948966, 41};  // closed-form convention
};

struct LandscapeResult {
  PortfolioInstance instance;
  double scale = 1.0;
  LandscapeGrid original;
  LandscapeGrid rescaled;
};

LandscapeResult emit_landscape(const LandscapeConfig& cfg, std::uint64_t seed);

// std / |mean| over all grid values.
double variation_coefficient(const LandscapeGrid& grid);

// ----------------------------------------------------------- Tree / SK -----

struct NuOptimum {
  int p = 0;
  double value = 0.0;
  QaoaParams params;  // closed-form convention
};

// Multi-start maximisation of nu_p; deterministic in seed.
NuOptimum optimize_nu(int p, int starts, std::uint64_t seed);

struct SkTableConfig {
  std::vector<int> N = {8, 12, 16};
  std::vector<double> mu = {-1.0, 0.0, 1.0};
  std::vector<double> sigma = {1.0};
  std::size_t samples = 10000;
};

struct SkRow {
  BiasedSKSpec spec;
  SkBounds sandwich;
  SkBounds printed;
  MonteCarloEstimate mc;
};

std::vector<SkRow> run_sk_table(const SkTableConfig& cfg, std::uint64_t seed, int threads = 1);
void write_sk_csv(std::ostream& os, const std::vector<SkRow>& rows);

// ------------------------------------------------------------- Datasets ----

struct GraphDatasetConfig {
  GraphSpec spec;
  int count = 10;
  WeightDistribution weights = WeightDistribution::point_mass(1.0);
};

// One JSON object per line: {"schema":..., "index":i, "seed":s, "graph":{...}}.
void write_graph_dataset(std::ostream& os, const GraphDatasetConfig& cfg, std::uint64_t seed);

// --------------------------------------------------------------- Config ----

struct ExperimentConfig {
  std::uint64_t seed = 1;
  int threads = 1;
  std::string output_dir = "out";
  MaxcutBenchConfig maxcut;
  PortfolioStudyConfig portfolio;
  ConcentrationConfig concentration;
  LandscapeConfig landscape;
  SkTableConfig sk;
  GraphDatasetConfig graphs;
  nlohmann::json to_json() const;
};

// Missing keys keep their defaults. Throws ConfigError on malformed input.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::string& path);

}  // namespace wqaoa
