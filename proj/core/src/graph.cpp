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

#include "wqaoa/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "wqaoa/errors.hpp"

namespace wqaoa {

WeightedGraph::WeightedGraph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n)) {
  require(n >= 0, "vertex count must be non-negative");
}

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : WeightedGraph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e);
}

void WeightedGraph::add_edge(Edge e) {
  if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
  if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
    throw PreconditionError("edge endpoint out of range");
  }
  if (!std::isfinite(e.w)) throw PreconditionError("edge weight must be finite");
  if (e.u > e.v) std::swap(e.u, e.v);
  if (has_edge(e.u, e.v)) {
    throw PreconditionError("duplicate edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "}");
  }
  edges_.push_back(e);
  adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
  adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
}

bool WeightedGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_) return false;
  const auto& adj = adjacency_[static_cast<std::size_t>(u)];
  return std::any_of(adj.begin(), adj.end(), [v](const Neighbor& nb) { return nb.vertex == v; });
}

double WeightedGraph::total_weight() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.w;
  return s;
}

std::vector<double> WeightedGraph::weights() const {
  std::vector<double> w;
  w.reserve(edges_.size());
  for (const Edge& e : edges_) w.push_back(e.w);
  return w;
}

WeightedGraph WeightedGraph::with_weights(std::span<const double> weights) const {
  require(weights.size() == edges_.size(), "weight count must match edge count");
  std::vector<Edge> edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = weights[i];
  return WeightedGraph(n_, std::move(edges));
}

bool WeightedGraph::adjacency_consistent() const {
  std::vector<std::vector<std::pair<int, double>>> rebuilt(static_cast<std::size_t>(n_));
  for (const Edge& e : edges_) {
    rebuilt[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
    rebuilt[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
  }
  for (int v = 0; v < n_; ++v) {
    auto have = adjacency_[static_cast<std::size_t>(v)];
    auto& want = rebuilt[static_cast<std::size_t>(v)];
    if (have.size() != want.size()) return false;
    for (std::size_t i = 0; i < have.size(); ++i) {
      if (have[i].vertex != want[i].first || have[i].w != want[i].second) return false;
    }
  }
  return true;
}

std::optional<int> WeightedGraph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const int d = degree(0);
  for (int v = 1; v < n_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kRandomRegular: return "random-regular";
    case GraphKind::kRandomBipartiteRegular: return "random-bipartite-regular";
    case GraphKind::kErdosRenyi: return "erdos-renyi";
    case GraphKind::kComplete: return "complete";
    case GraphKind::kCycle: return "cycle";
    case GraphKind::kCompleteBipartite: return "complete-bipartite";
  }
  return "unknown";
}

GraphKind graph_kind_from_string(const std::string& name) {
  for (GraphKind k : {GraphKind::kRandomRegular, GraphKind::kRandomBipartiteRegular,
                      GraphKind::kErdosRenyi, GraphKind::kComplete, GraphKind::kCycle,
                      GraphKind::kCompleteBipartite}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown graph kind '" + name + "'");
}

GraphSpec GraphSpec::random_regular(int n, int branching, std::uint64_t seed) {
  GraphSpec s;
  s.kind = GraphKind::kRandomRegular;
  s.n = n;
  s.branching = branching;
  s.seed = seed;
  return s;
}

GraphSpec GraphSpec::erdos_renyi(int n, double probability, std::uint64_t seed) {
  GraphSpec s;
  s.kind = GraphKind::kErdosRenyi;
  s.n = n;
  s.edge_probability = probability;
  s.seed = seed;
  return s;
}

GraphSpec GraphSpec::erdos_renyi_avg_degree(int n, double avg_degree, std::uint64_t seed) {
  require(n >= 2, "Erdos-Renyi graph needs at least two vertices");
  return erdos_renyi(n, std::clamp(avg_degree / (n - 1), 0.0, 1.0), seed);
}

GraphSpec GraphSpec::complete(int n) {
  GraphSpec s;
  s.kind = GraphKind::kComplete;
  s.n = n;
  return s;
}

GraphSpec GraphSpec::cycle(int n) {
  GraphSpec s;
  s.kind = GraphKind::kCycle;
  s.n = n;
  return s;
}

GraphSpec GraphSpec::random_bipartite_regular(int m, int branching, std::uint64_t seed) {
  GraphSpec s;
  s.kind = GraphKind::kRandomBipartiteRegular;
  s.n = 2 * m;
  s.branching = branching;
  s.seed = seed;
  return s;
}

GraphSpec GraphSpec::complete_bipartite(int a, int b) {
  GraphSpec s;
  s.kind = GraphKind::kCompleteBipartite;
  s.n = a + b;
  s.part_a = a;
  s.part_b = b;
  return s;
}

namespace {

// Configuration model: one uniform pairing of the stubs. Returns nullopt when
// the pairing produced a loop or a repeated edge.
std::optional<WeightedGraph> pair_stubs(int n, int degree, Rng& rng) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n * degree));
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < degree; ++k) stubs.push_back(v);
  }
  std::shuffle(stubs.begin(), stubs.end(), rng);
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    int u = stubs[i];
    int v = stubs[i + 1];
    if (u == v) return std::nullopt;
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) return std::nullopt;
    edges.push_back({u, v, 1.0});
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return WeightedGraph(n, std::move(edges));
}

// Bipartite circulant: left i joins right (i + s) mod m for `degree` distinct
// random shifts, then both sides are relabelled by random permutations.
WeightedGraph bipartite_circulant(int m, int degree, Rng& rng) {
  std::vector<int> shifts(static_cast<std::size_t>(m));
  std::iota(shifts.begin(), shifts.end(), 0);
  std::shuffle(shifts.begin(), shifts.end(), rng);
  shifts.resize(static_cast<std::size_t>(degree));
  std::vector<int> left(static_cast<std::size_t>(m));
  std::vector<int> right(static_cast<std::size_t>(m));
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), m);
  std::shuffle(left.begin(), left.end(), rng);
  std::shuffle(right.begin(), right.end(), rng);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int s : shifts) {
      int u = left[static_cast<std::size_t>(i)];
      int v = right[static_cast<std::size_t>((i + s) % m)];
      edges.push_back({std::min(u, v), std::max(u, v), 1.0});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return WeightedGraph(2 * m, std::move(edges));
}

WeightedGraph generate_once(const GraphSpec& spec, Rng& rng, bool& rejected) {
  rejected = false;
  switch (spec.kind) {
    case GraphKind::kRandomRegular: {
      auto g = pair_stubs(spec.n, spec.branching + 1, rng);
      if (!g) {
        rejected = true;
        return WeightedGraph(spec.n);
      }
      return *std::move(g);
    }
    case GraphKind::kRandomBipartiteRegular:
      return bipartite_circulant(spec.n / 2, spec.branching + 1, rng);
    case GraphKind::kErdosRenyi: {
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      std::vector<Edge> edges;
      for (int u = 0; u < spec.n; ++u) {
        for (int v = u + 1; v < spec.n; ++v) {
          if (unif(rng) < spec.edge_probability) edges.push_back({u, v, 1.0});
        }
      }
      return WeightedGraph(spec.n, std::move(edges));
    }
    case GraphKind::kComplete: {
      std::vector<Edge> edges;
      for (int u = 0; u < spec.n; ++u) {
        for (int v = u + 1; v < spec.n; ++v) edges.push_back({u, v, 1.0});
      }
      return WeightedGraph(spec.n, std::move(edges));
    }
    case GraphKind::kCycle: {
      std::vector<Edge> edges;
      for (int u = 0; u < spec.n; ++u) {
        int v = (u + 1) % spec.n;
        edges.push_back({std::min(u, v), std::max(u, v), 1.0});
      }
      return WeightedGraph(spec.n, std::move(edges));
    }
    case GraphKind::kCompleteBipartite: {
      std::vector<Edge> edges;
      for (int u = 0; u < spec.part_a; ++u) {
        for (int v = spec.part_a; v < spec.part_a + spec.part_b; ++v) edges.push_back({u, v, 1.0});
      }
      return WeightedGraph(spec.part_a + spec.part_b, std::move(edges));
    }
  }
  throw GenerationError("unhandled graph kind");
}

void validate(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphKind::kRandomRegular: {
      const int d = spec.branching + 1;
      if (spec.branching < 0) throw GenerationError("branching must be non-negative");
      if ((static_cast<long long>(spec.n) * d) % 2 != 0) {
        throw GenerationError("n * degree is odd: no " + std::to_string(d) +
                              "-regular graph on " + std::to_string(spec.n) + " vertices");
      }
      if (d >= spec.n) throw GenerationError("degree must be smaller than n");
      break;
    }
    case GraphKind::kRandomBipartiteRegular:
      if (spec.n % 2 != 0) throw GenerationError("bipartite regular graph needs even n");
      if (spec.branching + 1 > spec.n / 2) throw GenerationError("degree exceeds side size");
      break;
    case GraphKind::kErdosRenyi:
      if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
        throw GenerationError("edge probability must lie in [0, 1]");
      }
      break;
    case GraphKind::kCycle:
      if (spec.n < 3) throw GenerationError("cycle needs at least 3 vertices");
      break;
    case GraphKind::kCompleteBipartite:
      if (spec.part_a < 1 || spec.part_b < 1) throw GenerationError("empty bipartition side");
      break;
    case GraphKind::kComplete:
      break;
  }
  if (spec.n < 0) throw GenerationError("negative vertex count");
}

}  // namespace

WeightedGraph generate(const GraphSpec& spec) {
  validate(spec);
  Rng rng(mix_seed(spec.seed));
  const int attempts = std::max(1, spec.max_retries);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    bool rejected = false;
    WeightedGraph g = generate_once(spec, rng, rejected);
    if (rejected) continue;
    if (spec.girth_above > 0) {
      auto gi = girth(g);
      if (gi && *gi <= spec.girth_above) continue;
    }
    return g;
  }
  throw GenerationError("no " + to_string(spec.kind) + " graph satisfying constraints after " +
                        std::to_string(attempts) + " attempts");
}

std::optional<int> girth(const WeightedGraph& g) {
  const int n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      const int du = dist[static_cast<std::size_t>(u)];
      if (2 * du + 1 >= best) break;
      for (const Neighbor& nb : g.neighbors(u)) {
        const auto v = static_cast<std::size_t>(nb.vertex);
        if (dist[v] < 0) {
          dist[v] = du + 1;
          parent[v] = u;
          queue.push_back(nb.vertex);
        } else if (parent[static_cast<std::size_t>(u)] != nb.vertex) {
          best = std::min(best, du + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

bool is_triangle_free(const WeightedGraph& g) {
  auto gi = girth(g);
  return !gi || *gi > 3;
}

nlohmann::json to_json(const WeightedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.w});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

WeightedGraph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ConfigError("edge must be [u, v, w]");
      edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
    }
    return WeightedGraph(n, std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("bad graph JSON: ") + ex.what());
  }
}

GraphSpec graph_spec_from_json(const nlohmann::json& j) {
  try {
    GraphSpec s;
    s.kind = graph_kind_from_string(j.at("kind").get<std::string>());
    s.n = j.value("n", 0);
    if (j.contains("degree")) {
      s.branching = j.at("degree").get<int>() - 1;
    } else {
      s.branching = j.value("D", 2);
    }
    s.edge_probability = j.value("p", 0.5);
    if (j.contains("avg_degree")) {
      s.edge_probability = std::clamp(j.at("avg_degree").get<double>() / (s.n - 1), 0.0, 1.0);
    }
    s.part_a = j.value("a", 0);
    s.part_b = j.value("b", 0);
    if (s.kind == GraphKind::kCompleteBipartite) s.n = s.part_a + s.part_b;
    s.seed = j.value("seed", std::uint64_t{0});
    s.girth_above = j.value("girth_above", 0);
    s.max_retries = j.value("max_retries", 10000);
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("bad graph spec JSON: ") + ex.what());
  }
}

}  // namespace wqaoa
