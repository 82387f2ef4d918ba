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

#include "wqaoa/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>

#include <nlohmann/json.hpp>

#include "wqaoa/analytic_p1.hpp"
#include "wqaoa/brute_force.hpp"
#include "wqaoa/csv.hpp"
#include "wqaoa/errors.hpp"
#include "wqaoa/parallel.hpp"
#include "wqaoa/rng.hpp"
#include "wqaoa/tree_recursion.hpp"

namespace wqaoa {

double lower_median(std::vector<double> values) {
  require(!values.empty(), "median of an empty set");
  const std::size_t mid = (values.size() - 1) / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  return values[mid];
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size() && x.size() >= 2, "slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] > 0 && y[i] > 0, "log-log fit needs positive values");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

std::vector<double> clip_to(std::vector<double> x, const Bounds& b) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], b.lower[i], b.upper[i]);
  return x;
}

WeightedGraph benchmark_topology(const MaxcutBenchConfig& cfg, GraphKind kind, int n, std::uint64_t seed) {
  if (kind == GraphKind::kErdosRenyi) {
    // Resample until the average degree exceeds one, as the schemes require.
    for (int attempt = 0; attempt < 1000; ++attempt) {
      WeightedGraph g = generate(GraphSpec::erdos_renyi_avg_degree(n, cfg.er_avg_degree, derive_seed(seed, static_cast<std::uint64_t>(attempt))));
      if (g.num_edges() > 0 && average_degree(g) > 1.0) return g;
    }
    throw GenerationError("could not draw an Erdos-Renyi graph with average degree > 1");
  }
  if (kind == GraphKind::kRandomRegular) return generate(GraphSpec::random_regular(n, cfg.branching, seed));
  throw ConfigError("benchmark supports random-regular and erdos-renyi graphs only");
}

}  // namespace

bool uses_minmax_ratio(const WeightDistribution& dist) {
  switch (dist.kind()) {
    case DistributionKind::kUniformSym:
    case DistributionKind::kCauchy:
    case DistributionKind::kNormal:
      return true;
    case DistributionKind::kPointMass:
      return dist.param_a() < 0;
    default:
      return false;
  }
}

std::vector<BenchmarkRecord> run_maxcut_benchmark(const MaxcutBenchConfig& cfg, std::uint64_t seed, int threads) {
  require(cfg.starts >= 1 && cfg.instances >= 1, "benchmark needs instances and starts");
  require(!cfg.graph_kinds.empty(), "benchmark needs at least one graph kind");
  struct Cell {
    std::size_t dist;
    int n;
    int instance;
  };
  std::vector<Cell> cells;
  for (std::size_t d = 0; d < cfg.distributions.size(); ++d) {
    for (int n : cfg.n) {
      for (int i = 0; i < cfg.instances; ++i) cells.push_back({d, n, i});
    }
  }
  std::vector<std::vector<BenchmarkRecord>> out(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t c) {
    const Cell& cell = cells[c];
    const WeightDistribution& dist = cfg.distributions[cell.dist];
    const std::uint64_t inst_seed =
        derive_seed(derive_seed(derive_seed(seed, cell.dist), static_cast<std::uint64_t>(cell.n)),
                    static_cast<std::uint64_t>(cell.instance));
    const GraphKind kind = cfg.graph_kinds[static_cast<std::size_t>(cell.instance) % cfg.graph_kinds.size()];
    const WeightedGraph topo = benchmark_topology(cfg, kind, cell.n, inst_seed);
    Rng wrng = make_rng(inst_seed, 1);
    const WeightedGraph g = topo.with_weights(dist.sample(wrng, topo.num_edges()));
    const QaoaSimulator sim(maxcut_poly(g), Mixer::x());
    const Extrema ext = extrema_of(sim.cost(), cell.n);
    const bool minmax = uses_minmax_ratio(dist);
    auto ratio = [&](double e) {
      if (minmax) return (e - ext.min.value) / (ext.max.value - ext.min.value);
      return e / ext.max.value;
    };
    const double rms = empirical_scale(g.weights());
    const SchemeInputs in{&cfg.table, cfg.median ? &*cfg.median : nullptr};
    for (int p : cfg.p) {
      const Bounds bounds = Bounds::qaoa_default(p);
      const std::vector<SchemeChoice> schemes = {SchemeChoice::kMethodI, SchemeChoice::kMethodII,
                                                 SchemeChoice::kBaselineRef9};
      std::vector<QaoaParams> chosen;
      std::vector<double> energies;
      std::vector<std::vector<double>> starts;
      for (SchemeChoice s : schemes) {
        chosen.push_back(apply_scheme(s, g, in, p));
        energies.push_back(sim.energy(chosen.back()));
        starts.push_back(clip_to(chosen.back().flatten(), bounds));
      }
      Rng srng = make_rng(inst_seed, 100 + static_cast<std::uint64_t>(p));
      std::uniform_real_distribution<double> log_factor(-0.5, 0.5);
      std::uniform_real_distribution<double> shift(-0.3, 0.3);
      const std::vector<double> centre = chosen[1].flatten();
      while (static_cast<int>(starts.size()) < cfg.starts) {
        std::vector<double> x = centre;
        for (int j = 0; j < p; ++j) x[static_cast<std::size_t>(j)] *= std::exp(log_factor(srng));
        for (int j = p; j < 2 * p; ++j) x[static_cast<std::size_t>(j)] += shift(srng);
        starts.push_back(clip_to(std::move(x), bounds));
      }
      starts.resize(static_cast<std::size_t>(cfg.starts));
      OptimizerOptions opts = cfg.optimizer;
      opts.scales.assign(static_cast<std::size_t>(2 * p), 1.0);
      for (int j = 0; j < p; ++j) opts.scales[static_cast<std::size_t>(j)] = 1.0 / rms;
      const Objective f = [&](std::span<const double> x) { return -sim.energy(QaoaParams::from_flat(x)); };
      const MultistartResult ms = multistart_optimize(f, starts, bounds, opts);
      double best = -ms.best.value;
      QaoaParams best_params = QaoaParams::from_flat(ms.best.x);
      for (std::size_t s = 0; s < energies.size(); ++s) {
        if (energies[s] > best) {
          best = energies[s];
          best_params = chosen[s];
        }
      }
      const double r_opt = ratio(best);
      auto record = [&](const std::string& scheme, double e, const QaoaParams& params) {
        out[c].push_back({cell.instance, cell.n, p, dist.name(), to_string(kind), scheme, e, ext.max.value,
                          ext.min.value, ratio(e), r_opt - ratio(e), params});
      };
      record("optimized", best, best_params);
      for (std::size_t s = 0; s < schemes.size(); ++s) record(to_string(schemes[s]), energies[s], chosen[s]);
    }
  });
  std::vector<BenchmarkRecord> all;
  for (auto& v : out) all.insert(all.end(), v.begin(), v.end());
  return all;
}

std::vector<GapSummary> summarize_gaps(const std::vector<BenchmarkRecord>& records) {
  std::vector<GapSummary> rows;
  std::vector<std::vector<double>> ratios;
  std::vector<std::vector<double>> gaps;
  for (const BenchmarkRecord& r : records) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const GapSummary& s) {
      return s.distribution == r.distribution && s.p == r.p && s.scheme == r.scheme;
    });
    std::size_t idx;
    if (it == rows.end()) {
      rows.push_back({r.distribution, r.p, r.scheme, 0, 0.0, 0.0});
      ratios.emplace_back();
      gaps.emplace_back();
      idx = rows.size() - 1;
    } else {
      idx = static_cast<std::size_t>(it - rows.begin());
    }
    ratios[idx].push_back(r.ratio);
    gaps[idx].push_back(r.gap);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].count = ratios[i].size();
    rows[i].median_ratio = lower_median(ratios[i]);
    rows[i].median_gap = lower_median(gaps[i]);
  }
  return rows;
}

namespace {

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + format_number(v[i]);
  return s;
}

}  // namespace

void write_benchmark_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records) {
  CsvWriter w(os, "maxcut_benchmark",
              {"instance", "n", "p", "distribution", "graph", "scheme", "energy", "max_cut", "min_cut", "ratio",
               "gap", "gamma", "beta"});
  for (const BenchmarkRecord& r : records) {
    w.field(r.instance).field(r.n).field(r.p).field(r.distribution).field(r.graph_kind).field(r.scheme);
    w.field(r.energy).field(r.max_cut).field(r.min_cut).field(r.ratio).field(r.gap);
    w.field(join(r.params.gamma)).field(join(r.params.beta));
    w.end_row();
  }
}

void write_gap_table_csv(std::ostream& os, const std::vector<GapSummary>& rows) {
  CsvWriter w(os, "maxcut_gap_table", {"distribution", "p", "scheme", "count", "median_ratio", "median_gap"});
  for (const GapSummary& r : rows) {
    w.field(r.distribution).field(r.p).field(r.scheme).field(r.count).field(r.median_ratio).field(r.median_gap);
    w.end_row();
  }
}

std::vector<PortfolioRecord> run_portfolio_study(const PortfolioStudyConfig& cfg, std::uint64_t seed, int threads) {
  struct Cell {
    int n;
    int instance;
  };
  std::vector<Cell> cells;
  for (int n : cfg.n) {
    for (int i = 0; i < cfg.instances_per_n; ++i) cells.push_back({n, i});
  }
  std::vector<PortfolioRecord> out(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t c) {
    const Cell& cell = cells[c];
    const std::uint64_t inst_seed =
        derive_seed(derive_seed(seed, static_cast<std::uint64_t>(cell.n)), static_cast<std::uint64_t>(cell.instance));
    const PortfolioInstance inst = random_portfolio(cell.n, inst_seed, cfg.generator);
    const SpinPolynomial poly = portfolio_poly(inst);
    const RescaledPolynomial resc = rescale_poly(poly);
    const double s = resc.scale;
    const QaoaSimulator sim_o(poly, Mixer::xy_ring(inst.k));
    const QaoaSimulator sim_r(resc.poly, Mixer::xy_ring(inst.k));

    Bounds b_r = Bounds::qaoa_default(1);
    b_r.lower[0] = -cfg.gamma_bound;
    b_r.upper[0] = cfg.gamma_bound;
    Bounds b_o = b_r;
    if (cfg.scale_original_bounds) {
      b_o.lower[0] /= s;
      b_o.upper[0] /= s;
    }
    const std::vector<double> start = {cfg.start_gamma, cfg.start_beta};
    const Objective f_o = [&](std::span<const double> x) { return sim_o.energy(QaoaParams::from_flat(x)); };
    const Objective f_r = [&](std::span<const double> x) { return sim_r.energy(QaoaParams::from_flat(x)); };
    const OptimizerRun run_o = minimize(f_o, clip_to(start, b_o), b_o, cfg.optimizer);
    const OptimizerRun run_r = minimize(f_r, clip_to(start, b_r), b_r, cfg.optimizer);

    PortfolioRecord& r = out[c];
    r.instance = cell.instance;
    r.n = cell.n;
    r.k = inst.k;
    r.scale = s;
    r.iterations_original = run_o.evaluations;
    r.iterations_rescaled = run_r.evaluations;
    r.value_original = run_o.value;
    r.value_rescaled = run_r.value * s;
    r.constrained_min = brute_force_extrema_weight(poly, inst.k).min.value;
    r.same_optimum = std::abs(r.value_original - r.value_rescaled) < cfg.same_tolerance;
    r.termination_original = to_string(run_o.reason);
    r.termination_rescaled = to_string(run_r.reason);
    r.params_original = QaoaParams::from_flat(run_o.x);
    r.params_rescaled = QaoaParams::from_flat(run_r.x);
  });
  return out;
}

PortfolioSummary summarize_portfolio(const std::vector<PortfolioRecord>& records) {
  PortfolioSummary s;
  s.instances = records.size();
  if (records.empty()) return s;
  std::vector<double> ratios;
  std::size_t same = 0;
  double total = 0.0;
  for (const PortfolioRecord& r : records) {
    if (r.same_optimum) ++same;
    const double q = static_cast<double>(r.iterations_original) / r.iterations_rescaled;
    ratios.push_back(q);
    total += q;
  }
  s.same_fraction = static_cast<double>(same) / records.size();
  s.median_ratio = lower_median(ratios);
  s.mean_ratio = total / records.size();
  return s;
}

void write_portfolio_csv(std::ostream& os, const std::vector<PortfolioRecord>& records) {
  CsvWriter w(os, "portfolio_study",
              {"instance", "n", "k", "scale", "iterations_original", "iterations_rescaled", "value_original",
               "value_rescaled", "constrained_min", "same_optimum", "termination_original",
               "termination_rescaled", "gamma_original", "beta_original", "gamma_rescaled", "beta_rescaled"});
  for (const PortfolioRecord& r : records) {
    w.field(r.instance).field(r.n).field(r.k).field(r.scale).field(r.iterations_original).field(r.iterations_rescaled);
    w.field(r.value_original).field(r.value_rescaled).field(r.constrained_min).field(r.same_optimum ? 1 : 0);
    w.field(r.termination_original).field(r.termination_rescaled);
    w.field(r.params_original.gamma[0]).field(r.params_original.beta[0]);
    w.field(r.params_rescaled.gamma[0]).field(r.params_rescaled.beta[0]);
    w.end_row();
  }
}

void write_performance_profile_csv(std::ostream& os, const std::vector<PortfolioRecord>& records) {
  std::vector<int> budgets;
  for (const PortfolioRecord& r : records) {
    budgets.push_back(r.iterations_original);
    budgets.push_back(r.iterations_rescaled);
  }
  std::sort(budgets.begin(), budgets.end());
  budgets.erase(std::unique(budgets.begin(), budgets.end()), budgets.end());
  CsvWriter w(os, "portfolio_profile", {"iterations", "fraction_original", "fraction_rescaled"});
  const double total = records.empty() ? 1.0 : static_cast<double>(records.size());
  for (int b : budgets) {
    std::size_t o = 0;
    std::size_t s = 0;
    for (const PortfolioRecord& r : records) {
      if (!r.same_optimum) continue;
      if (r.iterations_original <= b) ++o;
      if (r.iterations_rescaled <= b) ++s;
    }
    w.field(b).field(o / total).field(s / total);
    w.end_row();
  }
}

std::vector<ConcentrationRecord> run_concentration(const ConcentrationConfig& cfg, std::uint64_t seed) {
  require(cfg.samples >= 2, "concentration needs at least two samples");
  std::vector<ConcentrationRecord> out;
  for (std::size_t d = 0; d < cfg.distributions.size(); ++d) {
    const WeightDistribution& dist = cfg.distributions[d];
    const MomentSummary m = dist.moments();
    for (int D : cfg.D) {
      const int side = cfg.side_factor * (D + 1);
      const std::uint64_t gseed = derive_seed(seed, static_cast<std::uint64_t>(D));
      const WeightedGraph topo = generate(GraphSpec::random_bipartite_regular(side, D, gseed));
      const double gamma = 1.0 / std::sqrt(m.second_moment * D);
      const double beta = std::numbers::pi / 8.0;
      Rng rng = make_rng(derive_seed(gseed, d), 1);
      std::vector<double> values(static_cast<std::size_t>(cfg.samples));
      for (double& v : values) v = energy_p1(topo.with_weights(dist.sample(rng, topo.num_edges())), gamma, beta);
      // Shifted sums: exact zero variance when every draw gives the same value.
      const double shift = values.front();
      double s1 = 0.0;
      double s2 = 0.0;
      for (double v : values) {
        s1 += v - shift;
        s2 += (v - shift) * (v - shift);
      }
      const double count = static_cast<double>(values.size());
      const double mean = shift + s1 / count;
      const double sd = std::sqrt(std::max(0.0, (s2 - s1 * s1 / count) / (count - 1.0)));
      out.push_back({dist.name(), D, topo.num_vertices(), gamma, mean, sd, sd / std::abs(mean)});
    }
  }
  return out;
}

double concentration_slope(const std::vector<ConcentrationRecord>& records, const std::string& distribution) {
  std::vector<double> x;
  std::vector<double> y;
  for (const ConcentrationRecord& r : records) {
    if (r.distribution != distribution) continue;
    x.push_back(r.D);
    y.push_back(r.rel_std);
  }
  return loglog_slope(x, y);
}

void write_concentration_csv(std::ostream& os, const std::vector<ConcentrationRecord>& records) {
  CsvWriter w(os, "concentration", {"distribution", "D", "n", "gamma", "mean", "std", "rel_std"});
  for (const ConcentrationRecord& r : records) {
    w.field(r.distribution).field(r.D).field(r.n).field(r.gamma).field(r.mean).field(r.std_dev).field(r.rel_std);
    w.end_row();
  }
}

LandscapeResult emit_landscape(const LandscapeConfig& cfg, std::uint64_t seed) {
  LandscapeResult res;
  res.instance = random_portfolio(cfg.n, derive_seed(seed, cfg.instance), cfg.generator);
  const SpinPolynomial poly = portfolio_poly(res.instance);
  const RescaledPolynomial resc = rescale_poly(poly);
  res.scale = resc.scale;
  const Mixer mixer = Mixer::xy_ring(res.instance.k);
  res.original = landscape_grid(poly, mixer, cfg.gamma, cfg.beta);
  res.rescaled = landscape_grid(resc.poly, mixer, cfg.gamma, cfg.beta);
  return res;
}

double variation_coefficient(const LandscapeGrid& grid) {
  require(grid.values.size() >= 2, "need at least two grid values");
  double mean = 0.0;
  for (double v : grid.values) mean += v;
  mean /= static_cast<double>(grid.values.size());
  double var = 0.0;
  for (double v : grid.values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(grid.values.size());
  return std::sqrt(var) / std::abs(mean);
}

NuOptimum optimize_nu(int p, int starts, std::uint64_t seed) {
  require(p >= 1 && starts >= 1, "optimize_nu needs p >= 1 and at least one start");
  Rng rng = make_rng(seed, static_cast<std::uint64_t>(p));
  std::uniform_real_distribution<double> g0(0.3, 1.5);
  std::uniform_real_distribution<double> b0(0.05, 0.6);
  std::vector<std::vector<double>> xs;
  for (int s = 0; s < starts; ++s) {
    std::vector<double> x;
    for (int j = 0; j < p; ++j) x.push_back(g0(rng));
    for (int j = 0; j < p; ++j) x.push_back(b0(rng));
    xs.push_back(std::move(x));
  }
  const Objective f = [p](std::span<const double> x) { return -nu_p(x.subspan(0, static_cast<std::size_t>(p)), x.subspan(static_cast<std::size_t>(p))); };
  OptimizerOptions opts;
  opts.xtol = 1e-10;
  opts.ftol = 1e-15;
  opts.max_evals = 20000;
  const MultistartResult ms = multistart_optimize(f, xs, Bounds::qaoa_default(p), opts);
  return {p, -ms.best.value, QaoaParams::from_flat(ms.best.x)};
}

std::vector<SkRow> run_sk_table(const SkTableConfig& cfg, std::uint64_t seed, int threads) {
  std::vector<SkRow> rows;
  std::uint64_t stream = 0;
  for (int N : cfg.N) {
    for (double mu : cfg.mu) {
      for (double sigma : cfg.sigma) {
        BiasedSKSpec spec{N, mu, sigma, derive_seed(seed, stream++)};
        rows.push_back({spec, bounds(spec), bounds_as_printed(spec), mc_expected_max(spec, cfg.samples, threads)});
      }
    }
  }
  return rows;
}

void write_sk_csv(std::ostream& os, const std::vector<SkRow>& rows) {
  CsvWriter w(os, "sk_bounds", {"N", "mu", "sigma", "lower", "estimate", "stderr", "upper", "lower_printed", "upper_printed"});
  for (const SkRow& r : rows) {
    w.field(r.spec.N).field(r.spec.mu).field(r.spec.sigma).field(r.sandwich.lower).field(r.mc.estimate);
    w.field(r.mc.stderr_).field(r.sandwich.upper).field(r.printed.lower).field(r.printed.upper);
    w.end_row();
  }
}

void write_graph_dataset(std::ostream& os, const GraphDatasetConfig& cfg, std::uint64_t seed) {
  for (int i = 0; i < cfg.count; ++i) {
    GraphSpec spec = cfg.spec;
    spec.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    const WeightedGraph topo = generate(spec);
    Rng rng = make_rng(spec.seed, 1);
    const WeightedGraph g = topo.with_weights(cfg.weights.sample(rng, topo.num_edges()));
    nlohmann::json line = {{"schema", "wqaoa.graph"}, {"version", kCsvSchemaVersion}, {"index", i},
                           {"seed", spec.seed}, {"kind", to_string(spec.kind)}, {"weights", to_json(cfg.weights)},
                           {"graph", to_json(g)}};
    os << line.dump() << '\n';
  }
}

// ---------------------------------------------------------------- config ---

namespace {

using nlohmann::json;

OptimizerOptions optimizer_from_json(const json& j, OptimizerOptions o) {
  o.xtol = j.value("xtol", o.xtol);
  o.ftol = j.value("ftol", o.ftol);
  o.max_evals = j.value("max_evals", o.max_evals);
  o.rho_begin = j.value("rho_begin", o.rho_begin);
  return o;
}

json optimizer_to_json(const OptimizerOptions& o) {
  return {{"xtol", o.xtol}, {"ftol", o.ftol}, {"max_evals", o.max_evals}, {"rho_begin", o.rho_begin}};
}

std::vector<WeightDistribution> distributions_from_json(const json& j) {
  std::vector<WeightDistribution> out;
  for (const json& d : j) out.push_back(distribution_from_json(d));
  return out;
}

json distributions_to_json(const std::vector<WeightDistribution>& ds) {
  json a = json::array();
  for (const auto& d : ds) a.push_back(to_json(d));
  return a;
}

AxisRange axis_from_json(const json& j, AxisRange a) {
  a.lo = j.value("lo", a.lo);
  a.hi = j.value("hi", a.hi);
  a.count = j.value("count", a.count);
  return a;
}

json axis_to_json(const AxisRange& a) { return {{"lo", a.lo}, {"hi", a.hi}, {"count", a.count}}; }

PortfolioGenOptions generator_from_json(const json& j, PortfolioGenOptions g) {
  if (j.contains("model")) {
    const std::string m = j.at("model").get<std::string>();
    if (m == "random_walk") {
      g.model = PortfolioModel::kRandomWalk;
    } else if (m == "factor") {
      g.model = PortfolioModel::kFactor;
    } else {
      throw ConfigError("unknown portfolio model: " + m);
    }
  }
  g.days = j.value("days", g.days);
  g.q = j.value("q", g.q);
  g.k = j.value("k", g.k);
  return g;
}

json generator_to_json(const PortfolioGenOptions& g) {
  return {{"model", g.model == PortfolioModel::kRandomWalk ? "random_walk" : "factor"},
          {"days", g.days}, {"q", g.q}, {"k", g.k}};
}

InfParamTable table_from_json(const json& j) {
  if (j.is_string()) return InfParamTable::load(j.get<std::string>());
  return inf_table_from_json(j);
}

}  // namespace

nlohmann::json ExperimentConfig::to_json() const {
  json kinds = json::array();
  for (GraphKind k : maxcut.graph_kinds) kinds.push_back(wqaoa::to_string(k));
  json mc = {{"instances", maxcut.instances}, {"n", maxcut.n}, {"p", maxcut.p},
             {"distributions", distributions_to_json(maxcut.distributions)}, {"graph_kinds", kinds},
             {"branching", maxcut.branching}, {"er_avg_degree", maxcut.er_avg_degree}, {"starts", maxcut.starts},
             {"optimizer", optimizer_to_json(maxcut.optimizer)}, {"param_table", wqaoa::to_json(maxcut.table)}};
  if (maxcut.median) mc["median_table"] = wqaoa::to_json(*maxcut.median);
  json pf = {{"n", portfolio.n}, {"instances_per_n", portfolio.instances_per_n},
             {"generator", generator_to_json(portfolio.generator)},
             {"optimizer", optimizer_to_json(portfolio.optimizer)}, {"start_gamma", portfolio.start_gamma},
             {"start_beta", portfolio.start_beta}, {"gamma_bound", portfolio.gamma_bound},
             {"scale_original_bounds", portfolio.scale_original_bounds},
             {"same_tolerance", portfolio.same_tolerance}};
  json cc = {{"D", concentration.D}, {"samples", concentration.samples},
             {"distributions", distributions_to_json(concentration.distributions)},
             {"side_factor", concentration.side_factor}};
  json ls = {{"n", landscape.n}, {"instance", landscape.instance},
             {"generator", generator_to_json(landscape.generator)}, {"gamma", axis_to_json(landscape.gamma)},
             {"beta", axis_to_json(landscape.beta)}};
  json sk_j = {{"N", sk.N}, {"mu", sk.mu}, {"sigma", sk.sigma}, {"samples", sk.samples}};
  json gr = {{"kind", wqaoa::to_string(graphs.spec.kind)}, {"n", graphs.spec.n}, {"D", graphs.spec.branching},
             {"p", graphs.spec.edge_probability}, {"a", graphs.spec.part_a}, {"b", graphs.spec.part_b},
             {"girth_above", graphs.spec.girth_above}, {"count", graphs.count},
             {"weights", wqaoa::to_json(graphs.weights)}};
  return {{"seed", seed}, {"threads", threads}, {"output_dir", output_dir}, {"maxcut", mc}, {"portfolio", pf},
          {"concentration", cc}, {"landscape", ls}, {"sk", sk_j}, {"graphs", gr}};
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  try {
    c.seed = j.value("seed", c.seed);
    c.threads = j.value("threads", c.threads);
    c.output_dir = j.value("output_dir", c.output_dir);
    if (j.contains("maxcut")) {
      const json& m = j.at("maxcut");
      auto& b = c.maxcut;
      b.instances = m.value("instances", b.instances);
      b.n = m.value("n", b.n);
      b.p = m.value("p", b.p);
      if (m.contains("distributions")) b.distributions = distributions_from_json(m.at("distributions"));
      if (m.contains("graph_kinds")) {
        b.graph_kinds.clear();
        for (const json& k : m.at("graph_kinds")) b.graph_kinds.push_back(graph_kind_from_string(k.get<std::string>()));
      }
      b.branching = m.value("branching", b.branching);
      b.er_avg_degree = m.value("er_avg_degree", b.er_avg_degree);
      b.starts = m.value("starts", b.starts);
      if (m.contains("optimizer")) b.optimizer = optimizer_from_json(m.at("optimizer"), b.optimizer);
      if (m.contains("param_table")) b.table = table_from_json(m.at("param_table"));
      if (m.contains("median_table")) b.median = table_from_json(m.at("median_table"));
    }
    if (j.contains("portfolio")) {
      const json& m = j.at("portfolio");
      auto& p = c.portfolio;
      p.n = m.value("n", p.n);
      p.instances_per_n = m.value("instances_per_n", p.instances_per_n);
      if (m.contains("generator")) p.generator = generator_from_json(m.at("generator"), p.generator);
      if (m.contains("optimizer")) p.optimizer = optimizer_from_json(m.at("optimizer"), p.optimizer);
      p.start_gamma = m.value("start_gamma", p.start_gamma);
      p.start_beta = m.value("start_beta", p.start_beta);
      p.gamma_bound = m.value("gamma_bound", p.gamma_bound);
      p.scale_original_bounds = m.value("scale_original_bounds", p.scale_original_bounds);
      p.same_tolerance = m.value("same_tolerance", p.same_tolerance);
    }
    if (j.contains("concentration")) {
      const json& m = j.at("concentration");
      auto& k = c.concentration;
      k.D = m.value("D", k.D);
      k.samples = m.value("samples", k.samples);
      if (m.contains("distributions")) k.distributions = distributions_from_json(m.at("distributions"));
      k.side_factor = m.value("side_factor", k.side_factor);
    }
    if (j.contains("landscape")) {
      const json& m = j.at("landscape");
      auto& l = c.landscape;
      l.n = m.value("n", l.n);
      l.instance = m.value("instance", l.instance);
      if (m.contains("generator")) l.generator = generator_from_json(m.at("generator"), l.generator);
      if (m.contains("gamma")) l.gamma = axis_from_json(m.at("gamma"), l.gamma);
      if (m.contains("beta")) l.beta = axis_from_json(m.at("beta"), l.beta);
    }
    if (j.contains("sk")) {
      const json& m = j.at("sk");
      c.sk.N = m.value("N", c.sk.N);
      c.sk.mu = m.value("mu", c.sk.mu);
      c.sk.sigma = m.value("sigma", c.sk.sigma);
      c.sk.samples = m.value("samples", c.sk.samples);
    }
    if (j.contains("graphs")) {
      const json& m = j.at("graphs");
      c.graphs.spec = graph_spec_from_json(m);
      c.graphs.count = m.value("count", c.graphs.count);
      if (m.contains("weights")) c.graphs.weights = distribution_from_json(m.at("weights"));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("experiment config: ") + e.what());
  }
  require(c.threads >= 1, "threads must be at least 1");
  return c;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return experiment_config_from_json(j);
}

}  // namespace wqaoa
