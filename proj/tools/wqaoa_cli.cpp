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


// Command-line front end for the experiment drivers.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wqaoa/analytic_p1.hpp"
#include "wqaoa/distributions.hpp"
#include "wqaoa/errors.hpp"
#include "wqaoa/experiments.hpp"
#include "wqaoa/qaoa.hpp"
#include "wqaoa/tree_recursion.hpp"

namespace fs = std::filesystem;
using namespace wqaoa;

namespace {

struct Common {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
};

ExperimentConfig resolve(const Common& c) {
  ExperimentConfig cfg = c.config.empty() ? ExperimentConfig{} : load_experiment_config(c.config);
  if (!c.out.empty()) cfg.output_dir = c.out;
  if (c.seed) cfg.seed = *c.seed;
  if (c.threads) cfg.threads = *c.threads;
  require(cfg.threads >= 1, "--threads must be at least 1");
  fs::create_directories(cfg.output_dir);
  std::ofstream(fs::path(cfg.output_dir) / "config.json") << cfg.to_json().dump(2) << '\n';
  return cfg;
}

std::ofstream open_out(const ExperimentConfig& cfg, const std::string& name) {
  const fs::path path = fs::path(cfg.output_dir) / name;
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write " + path.string());
  std::cerr << "writing " << path.string() << '\n';
  return os;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "JSON experiment configuration")->check(CLI::ExistingFile);
  app->add_option("--out", c.out, "output directory");
  app->add_option("--seed", c.seed, "master seed");
  app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
}

void cmd_gen_graphs(const Common& c) {
  const ExperimentConfig cfg = resolve(c);
  auto os = open_out(cfg, "graphs.jsonl");
  write_graph_dataset(os, cfg.graphs, cfg.seed);
}

void cmd_bench_maxcut(const Common& c) {
  const ExperimentConfig cfg = resolve(c);
  const auto records = run_maxcut_benchmark(cfg.maxcut, cfg.seed, cfg.threads);
  auto rec = open_out(cfg, "maxcut_records.csv");
  write_benchmark_csv(rec, records);
  const auto rows = summarize_gaps(records);
  auto tab = open_out(cfg, "maxcut_gap_table.csv");
  write_gap_table_csv(tab, rows);
  for (const GapSummary& r : rows) {
    std::printf("%-18s p=%d %-10s n=%zu median_ratio=%.4f median_gap=%.4f\n", r.distribution.c_str(), r.p,
                r.scheme.c_str(), r.count, r.median_ratio, r.median_gap);
  }
}

void cmd_bench_portfolio(const Common& c) {
  const ExperimentConfig cfg = resolve(c);
  const auto records = run_portfolio_study(cfg.portfolio, cfg.seed, cfg.threads);
  auto rec = open_out(cfg, "portfolio_records.csv");
  write_portfolio_csv(rec, records);
  auto prof = open_out(cfg, "portfolio_profile.csv");
  write_performance_profile_csv(prof, records);
  const PortfolioSummary s = summarize_portfolio(records);
  std::printf("instances=%zu same_optimum=%.3f median_iteration_ratio=%.3f mean_iteration_ratio=%.3f\n",
              s.instances, s.same_fraction, s.median_ratio, s.mean_ratio);
}

void cmd_landscape(const Common& c) {
  const ExperimentConfig cfg = resolve(c);
  const LandscapeResult r = emit_landscape(cfg.landscape, cfg.seed);
  auto o = open_out(cfg, "landscape_original.csv");
  write_landscape_csv(o, r.original);
  auto s = open_out(cfg, "landscape_rescaled.csv");
  write_landscape_csv(s, r.rescaled);
  std::printf("scale=%.6g cv_original=%.6g cv_rescaled=%.6g\n", r.scale, variation_coefficient(r.original),
              variation_coefficient(r.rescaled));
}

void cmd_concentration(const Common& c) {
  const ExperimentConfig cfg = resolve(c);
  const auto records = run_concentration(cfg.concentration, cfg.seed);
  auto os = open_out(cfg, "concentration.csv");
  write_concentration_csv(os, records);
  for (const WeightDistribution& d : cfg.concentration.distributions) {
    std::printf("%-18s slope=%.4f\n", d.name().c_str(), concentration_slope(records, d.name()));
  }
}

void cmd_sk(const Common& c) {
  const ExperimentConfig cfg = resolve(c);
  const auto rows = run_sk_table(cfg.sk, cfg.seed, cfg.threads);
  auto os = open_out(cfg, "sk_bounds.csv");
  write_sk_csv(os, rows);
  for (const SkRow& r : rows) {
    std::printf("N=%-3d mu=%-5g lower=%-10.4f estimate=%-10.4f stderr=%-8.4f upper=%.4f\n", r.spec.N, r.spec.mu,
                r.sandwich.lower, r.mc.estimate, r.mc.stderr_, r.sandwich.upper);
  }
}

struct TreeArgs {
  std::vector<double> gamma;
  std::vector<double> beta;
  std::string convention = "closed-form";
  std::optional<int> D;
  std::string dist;
  bool optimize = false;
  int depth = 1;
  int starts = 8;
  std::uint64_t seed = 1;
};

void cmd_tree(const TreeArgs& a) {
  if (a.optimize) {
    const NuOptimum opt = optimize_nu(a.depth, a.starts, a.seed);
    std::cout << nlohmann::json{{"p", opt.p}, {"nu", opt.value}, {"params", to_json(opt.params)}}.dump() << '\n';
    return;
  }
  require(!a.gamma.empty() && a.gamma.size() == a.beta.size(), "--gamma and --beta need equal, nonzero length");
  QaoaParams params{a.gamma, a.beta, beta_convention_from_string(a.convention)};
  params = params.in(BetaConvention::kClosedForm);
  nlohmann::json out = {{"p", params.p()}, {"nu", nu_p(params.gamma, params.beta)}};
  if (!a.dist.empty()) {
    const WeightDistribution dist = distribution_from_json(nlohmann::json::parse(a.dist));
    out["distribution"] = dist.name();
    out["theta_limit"] = theta_p_limit(dist, params.gamma, params.beta);
    if (a.D) {
      const WeightExpectation e(dist);
      out["D"] = *a.D;
      out["edge_weighted_zz"] = expected_weighted_zz(*a.D, e, params.gamma, params.beta);
    }
  }
  std::cout << out.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted-QAOA experiment driver"};
  app.require_subcommand(1);

  Common graphs, maxcut, portfolio, landscape, conc, sk;
  auto* g = app.add_subcommand("gen-graphs", "write a seeded weighted-graph dataset (JSON lines)");
  add_common(g, graphs);
  auto* m = app.add_subcommand("bench-maxcut", "parameter schemes vs. optimized parameters on MaxCut");
  add_common(m, maxcut);
  auto* p = app.add_subcommand("bench-portfolio", "original vs. rescaled portfolio optimisation");
  add_common(p, portfolio);
  auto* l = app.add_subcommand("landscape", "energy grids of one portfolio instance");
  add_common(l, landscape);
  auto* c = app.add_subcommand("concentration", "spread of the p=1 energy over weight draws");
  add_common(c, conc);
  auto* s = app.add_subcommand("sk-bounds", "Monte-Carlo maximum of the biased SK model vs. bounds");
  add_common(s, sk);

  TreeArgs tree;
  auto* t = app.add_subcommand("tree-eval", "evaluate or optimise the infinite-size coefficients");
  t->add_option("--gamma", tree.gamma, "gamma_1..gamma_p")->delimiter(',');
  t->add_option("--beta", tree.beta, "beta_1..beta_p")->delimiter(',');
  t->add_option("--convention", tree.convention, "beta convention: closed-form or table");
  t->add_option("--D", tree.D, "finite branching for the edge expectation")->check(CLI::PositiveNumber);
  t->add_option("--dist", tree.dist, "weight distribution as JSON, e.g. {\"kind\":\"exponential\",\"lambda\":1}");
  t->add_flag("--optimize", tree.optimize, "maximise nu_p by multistart");
  t->add_option("--depth", tree.depth, "depth for --optimize")->check(CLI::PositiveNumber);
  t->add_option("--starts", tree.starts, "starts for --optimize")->check(CLI::PositiveNumber);
  t->add_option("--seed", tree.seed, "seed for --optimize");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*g) cmd_gen_graphs(graphs);
    if (*m) cmd_bench_maxcut(maxcut);
    if (*p) cmd_bench_portfolio(portfolio);
    if (*l) cmd_landscape(landscape);
    if (*c) cmd_concentration(conc);
    if (*s) cmd_sk(sk);
    if (*t) cmd_tree(tree);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
