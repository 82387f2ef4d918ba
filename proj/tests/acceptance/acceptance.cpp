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


// Acceptance run: one PASS/FAIL line per criterion. Optional arguments select
// criteria by number, e.g. `wqaoa_acceptance 1 5 9`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wqaoa/analytic_p1.hpp"
#include "wqaoa/brute_force.hpp"
#include "wqaoa/experiments.hpp"
#include "wqaoa/graph.hpp"
#include "wqaoa/portfolio.hpp"
#include "wqaoa/qaoa.hpp"
#include "wqaoa/skbias.hpp"
#include "wqaoa/spin_polynomial.hpp"
#include "wqaoa/tree_recursion.hpp"

using namespace wqaoa;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20261014;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

WeightedGraph weighted(const WeightedGraph& topo, const WeightDistribution& d, Rng& rng) {
  return topo.with_weights(d.sample(rng, topo.num_edges()));
}

// 1. p = 1 simulator against the closed form on triangle-free graphs.
Outcome closed_form_oracle() {
  Rng rng = make_rng(kSeed, 1);
  const std::vector<WeightDistribution> dists = {WeightDistribution::exponential(1.0), WeightDistribution::normal(0.3, 1.0),
                                                 WeightDistribution::cauchy(), WeightDistribution::uniform_sym()};
  std::uniform_real_distribution<double> ug(-2.0, 2.0), ub(-kPi / 2, kPi / 2);
  double worst = 0.0;
  int graphs = 0;
  for (int i = 0; graphs < 100; ++i) {
    WeightedGraph topo;
    const std::uint64_t s = derive_seed(kSeed, static_cast<std::uint64_t>(i));
    switch (i % 3) {
      case 0: topo = generate(GraphSpec::random_bipartite_regular(3 + i % 6, 1 + i % 3, s)); break;
      case 1: topo = generate(GraphSpec::erdos_renyi(8 + i % 9, 0.25, s)); break;
      default: topo = generate(GraphSpec::cycle(4 + i % 13)); break;
    }
    if (topo.num_vertices() > 16 || topo.num_edges() == 0 || !is_triangle_free(topo)) continue;
    const WeightedGraph g = weighted(topo, dists[static_cast<std::size_t>(graphs) % dists.size()], rng);
    const double gamma = ug(rng), beta = ub(rng);
    const double sim = qaoa_energy(maxcut_poly(g), {{gamma}, {beta}, BetaConvention::kClosedForm});
    worst = std::max(worst, std::abs(sim - energy_p1(g, gamma, beta)));
    ++graphs;
  }
  return {worst < 1e-9, "100 graphs, max |delta| = " + fmt("%.2e", worst)};
}

// 2. Grid argmax of the exponential-weight energy against lambda / sqrt(2D + 3).
Outcome theorem1_grid() {
  const double step = 1e-4;
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (int D : {1, 3, 10}) {
      double best = -1e300, arg = 0.0;
      for (int k = 0; k * step <= 4.0; ++k) {
        const double v = expected_energy_exponential(100, D, lambda, k * step);
        if (v > best) best = v, arg = k * step;
      }
      worst = std::max(worst, std::abs(arg - optimal_gamma_exponential(D, lambda)));
    }
  }
  return {worst <= step, "max |argmax - lambda/sqrt(2D+3)| = " + fmt("%.2e", worst)};
}

// 3. Finite-D coefficient against its large-D limit.
Outcome theorem2_limit() {
  const std::vector<WeightDistribution> dists = {WeightDistribution::point_mass(1.0), WeightDistribution::exponential(1.0),
                                                 WeightDistribution::normal(1.0, 0.5)};
  bool ok = true;
  std::ostringstream os;
  for (int D : {100, 1000, 10000}) {
    double sup = 0.0;
    for (const auto& d : dists) {
      for (int k = 0; k <= 60; ++k) {
        const double gp = 0.05 * k;
        sup = std::max(sup, std::abs(theta1_finite(D, d, gp / std::sqrt(static_cast<double>(D))) - theta1_limit(d, gp)));
      }
    }
    ok = ok && sup <= 5.0 / D;
    os << "D=" << D << " C=" << fmt("%.3f", sup * D) << " ";
  }
  return {ok, os.str() + "(need C <= 5)"};
}

// 4. Unweighted and weighted limits related through the rms weight.
Outcome theorem3_identity() {
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> ug(0.1, 1.5), ub(0.05, 0.7);
  double worst = 0.0;
  for (const auto& d : {WeightDistribution::exponential(1.0), WeightDistribution::normal(1.0, 0.5)}) {
    const double rms = std::sqrt(*d.second_moment());
    for (int p = 1; p <= 2; ++p) {
      for (int t = 0; t < 10; ++t) {
        std::vector<double> gamma, beta, scaled;
        for (int i = 0; i < p; ++i) {
          gamma.push_back(ug(rng));
          beta.push_back(ub(rng));
          scaled.push_back(gamma.back() / rms);
        }
        const double lhs = nu_p(gamma, beta);
        const double rhs = *d.mean() / rms * theta_p_limit(d, scaled, beta);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
      }
    }
  }
  return {worst < 1e-9, "max relative error = " + fmt("%.2e", worst)};
}

// 5. Optimised nu_1 against the closed-form limit maximum.
Outcome nu1_anchor() {
  const NuOptimum o = optimize_nu(1, 8, kSeed);
  const double limit_max = theta1_limit(WeightDistribution::point_mass(1.0), 1.0);
  const double closed = 1.0 / (2.0 * std::sqrt(std::exp(1.0)));
  const double err = std::max(std::abs(o.value - limit_max), std::abs(o.value - closed));
  return {err <= 1e-9, "nu_1* = " + fmt("%.15f", o.value) + ", |delta| = " + fmt("%.2e", err)};
}

// 6. Finite-D recursion against sampled statevector averages.
Outcome recursion_vs_simulator() {
  GraphSpec spec = GraphSpec::random_regular(12, 2, kSeed);
  spec.girth_above = 3;
  const std::vector<WeightedGraph> graphs = {generate(GraphSpec::complete_bipartite(3, 3)), generate(spec)};
  const std::vector<WeightDistribution> dists = {WeightDistribution::exponential(1.0), WeightDistribution::normal(1.0, 0.5),
                                                 WeightDistribution::uniform_plus()};
  const int M = 10000;
  const std::vector<double> gamma{0.45};
  const std::vector<double> beta{0.3};
  bool ok = true;
  double worst = 0.0;
  Rng rng = make_rng(kSeed, 6);
  for (const auto& topo : graphs) {
    for (const auto& d : dists) {
      double s = 0.0, s2 = 0.0;
      for (int m = 0; m < M; ++m) {
        const double e = qaoa_energy(maxcut_poly(weighted(topo, d, rng)), {gamma, beta, BetaConvention::kClosedForm});
        s += e;
        s2 += e * e;
      }
      const double mean = s / M;
      const double se = std::sqrt((s2 / M - mean * mean) / (M - 1));
      const double z = std::abs(mean - expected_energy_p_finite(topo.num_vertices(), 2, d, gamma, beta)) / se;
      worst = std::max(worst, z);
      ok = ok && z < 3.0;
    }
  }
  return {ok, "6 (graph, distribution) cells, max |z| = " + fmt("%.2f", worst)};
}

// 7. MaxCut benchmark ordering at desk scale.
Outcome maxcut_trend() {
  const ExperimentConfig cfg;
  const auto records = run_maxcut_benchmark(cfg.maxcut, cfg.seed);
  const auto rows = summarize_gaps(records);
  {
    std::ofstream os("acceptance_maxcut_gap_table.csv");
    write_gap_table_csv(os, rows);
  }
  std::map<std::pair<std::string, int>, std::map<std::string, double>> gap;
  std::size_t min_count = records.size();
  for (const GapSummary& r : rows) {
    gap[{r.distribution, r.p}][r.scheme] = r.median_gap;
    min_count = std::min(min_count, r.count);
  }
  bool ok = min_count >= 50 * cfg.maxcut.n.size();
  std::ostringstream os;
  for (const auto& [key, m] : gap) {
    const bool cell = m.at("method_i") <= m.at("baseline") && m.at("method_ii") <= m.at("baseline");
    ok = ok && cell;
    if (!cell) os << "order fails at " << key.first << " p=" << key.second << "; ";
  }
  const auto& c3 = gap.at({WeightDistribution::cauchy().name(), 3});
  const double reduction = c3.at("baseline") / std::max(c3.at("method_i"), c3.at("method_ii"));
  ok = ok && reduction >= 3.0;
  os << "methods <= baseline in " << gap.size() << " cells; Cauchy p=3 baseline " << fmt("%.4f", c3.at("baseline"))
     << " vs methods " << fmt("%.4f", c3.at("method_i")) << "/" << fmt("%.4f", c3.at("method_ii")) << " (x"
     << fmt("%.1f", reduction) << ")";
  return {ok, os.str()};
}

// 8. Portfolio rescaling study.
Outcome portfolio_study() {
  const ExperimentConfig cfg;
  const auto recs = run_portfolio_study(cfg.portfolio, cfg.seed);
  {
    std::ofstream os("acceptance_portfolio_records.csv");
    write_portfolio_csv(os, recs);
  }
  const PortfolioSummary s = summarize_portfolio(recs);
  int strict = 0;
  for (const auto& r : recs) strict += std::abs(r.value_original - r.value_rescaled) / r.scale < cfg.portfolio.same_tolerance;
  const bool ok = s.instances >= 80 && s.same_fraction >= 0.9 && s.median_ratio >= 2.0;
  std::ostringstream os;
  os << s.instances << " instances, same-optimum " << fmt("%.3f", s.same_fraction) << " (rescaled-unit tolerance: "
     << fmt("%.3f", static_cast<double>(strict) / recs.size()) << "), median iteration ratio "
     << fmt("%.2f", s.median_ratio) << " (mean " << fmt("%.2f", s.mean_ratio) << ")";
  return {ok, os.str()};
}

// 9. Concentration of the p = 1 energy over weight draws.
Outcome concentration() {
  const ExperimentConfig cfg;
  const auto recs = run_concentration(cfg.concentration, cfg.seed);
  bool ok = true;
  std::ostringstream os;
  for (const auto& d : cfg.concentration.distributions) {
    const double slope = concentration_slope(recs, d.name());
    ok = ok && slope >= -1.5 && slope <= -0.6;
    os << d.name() << " slope " << fmt("%.3f", slope) << "; ";
  }
  return {ok, os.str()};
}

// 10. Biased SK sandwich and zero-bias growth.
Outcome sk_bounds() {
  SkTableConfig cfg;
  const auto rows = run_sk_table(cfg, kSeed);
  int inside = 0;
  int printed_violations = 0;
  for (const SkRow& r : rows) {
    const double lo = r.mc.estimate + 3 * r.mc.stderr_;
    const double hi = r.mc.estimate - 3 * r.mc.stderr_;
    inside += lo >= r.sandwich.lower && hi <= r.sandwich.upper;
    printed_violations += lo < r.printed.lower || hi > r.printed.upper;
  }
  {
    std::ofstream os("acceptance_sk_bounds.csv");
    write_sk_csv(os, rows);
  }
  std::vector<double> Ns, est;
  for (const SkRow& r : rows) {
    if (r.spec.mu == 0.0) {
      Ns.push_back(r.spec.N);
      est.push_back(r.mc.estimate);
    }
  }
  // N = 20 enters the growth fit only.
  const MonteCarloEstimate n20 = mc_expected_max({20, 0.0, 1.0, derive_seed(kSeed, 20)}, cfg.samples);
  Ns.push_back(20);
  est.push_back(n20.estimate);
  const double slope = loglog_slope(Ns, est);
  const bool ok = inside == static_cast<int>(rows.size()) && slope >= 1.3 && slope <= 1.7;
  std::ostringstream os;
  os << inside << "/" << rows.size() << " cells inside the sandwich (3 stderr); mu=0 growth exponent "
     << fmt("%.3f", slope) << " over N=8..20; printed-form sandwich violated in " << printed_violations << " cells";
  return {ok, os.str()};
}

// 11. Invariant suites.
Outcome invariants() {
  Rng rng = make_rng(kSeed, 11);
  std::uniform_real_distribution<double> ua(-1.5, 1.5);
  double norm_err = 0.0, h_err = 0.0, idem_err = 0.0, id_err = 0.0;
  bool argmax_ok = true;
  for (int t = 0; t < 20; ++t) {
    const std::uint64_t s = derive_seed(kSeed, static_cast<std::uint64_t>(100 + t));
    const WeightedGraph g = weighted(generate(GraphSpec::random_regular(10, 2, s)), WeightDistribution::cauchy(), rng);
    const PortfolioInstance inst = random_portfolio(8, s);
    const SpinPolynomial pp = portfolio_poly(inst);
    const int p = 1 + t % 5;
    QaoaParams q{{}, {}, BetaConvention::kClosedForm};
    for (int i = 0; i < p; ++i) q.gamma.push_back(ua(rng)), q.beta.push_back(ua(rng));
    norm_err = std::max(norm_err, std::abs(QaoaSimulator(maxcut_poly(g), Mixer::x()).full_state(q).norm() - 1.0));
    norm_err = std::max(norm_err, std::abs(QaoaSimulator(pp, Mixer::xy_ring(inst.k)).sector_state(q).norm() - 1.0));

    const int pt = 1 + t % 3;
    const auto ctx = TreeContext::make(std::span(q.gamma).first(pt), std::span(q.beta).first(pt));
    HTable hf = HTable::ones(pt), hl = HTable::ones(pt);
    const WeightExpectation e(WeightDistribution::exponential(0.5));
    for (int level = 0; level < pt; ++level) {
      hf = h_iterate_finite(3, e, ctx, hf);
      hl = h_iterate_limit(2.0, ctx, hl);
      h_err = std::max({h_err, std::abs(normalization(ctx, hf) - 1.0), std::abs(normalization(ctx, hl) - 1.0)});
    }

    const RescaledPolynomial r = rescale_poly(pp);
    idem_err = std::max(idem_err, std::abs(rescale_poly(r.poly).scale - 1.0));
    const RescaledGraph rg = rescale_graph(g);
    idem_err = std::max(idem_err, std::abs(rescale_graph(rg.graph).scale - 1.0));
    argmax_ok = argmax_ok && brute_force_min(r.poly).basis_index == brute_force_min(pp).basis_index &&
                brute_force_max(maxcut_poly(rg.graph)).basis_index == brute_force_max(maxcut_poly(g)).basis_index;

    const double sc = 0.1 + 5.0 * (t + 1) / 20.0;
    QaoaParams qs = q;
    for (double& x : qs.gamma) x /= sc;
    for (Mixer m : {Mixer::x(), Mixer::xy_ring(inst.k)}) {
      const double a = sc * qaoa_energy(pp, q, m);
      const double b = qaoa_energy(pp.scaled(sc), qs, m);
      id_err = std::max(id_err, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
  }
  const bool ok = norm_err <= 1e-10 && h_err <= 1e-10 && idem_err <= 1e-12 && argmax_ok && id_err <= 1e-12;
  std::ostringstream os;
  os << "norm " << fmt("%.1e", norm_err) << ", H normalisation " << fmt("%.1e", h_err) << ", rescale idempotence "
     << fmt("%.1e", idem_err) << ", argmax invariance " << (argmax_ok ? "ok" : "broken") << ", energy identity "
     << fmt("%.1e", id_err);
  return {ok, os.str()};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "closed-form oracle", 60, closed_form_oracle},
      {2, "optimal gamma grid", 5, theorem1_grid},
      {3, "large-D limit", 5, theorem2_limit},
      {4, "rms-weight identity", 30, theorem3_identity},
      {5, "p=1 limit anchor", 0, nu1_anchor},
      {6, "recursion vs simulator", 300, recursion_vs_simulator},
      {7, "maxcut benchmark trend", 0, maxcut_trend},
      {8, "portfolio study", 1800, portfolio_study},
      {9, "concentration", 0, concentration},
      {10, "biased SK bounds", 0, sk_bounds},
      {11, "invariant suites", 600, invariants},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += " [over the " + fmt("%.0f", c.budget_seconds) + " s budget]";
    }
    std::printf("CRITERION %2d %s: %s -- %s (%.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
