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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wqaoa/rng.hpp"

namespace wqaoa {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  int vertex = 0;
  double w = 1.0;
};

// Simple undirected weighted graph with 0-based vertices. Edges are stored
// canonically (u < v) in insertion order; adjacency is derived and kept in
// sync. Immutable once built except through with_weights().
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);
  WeightedGraph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }

  bool has_edge(int u, int v) const;
  double total_weight() const;
  std::vector<double> weights() const;

  // Same topology, new weights in edge order.
  WeightedGraph with_weights(std::span<const double> weights) const;

  // Rebuilds adjacency from the edge list and compares; used by tests.
  bool adjacency_consistent() const;

  std::optional<int> regular_degree() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void add_edge(Edge e);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

enum class GraphKind {
  kRandomRegular,
  kRandomBipartiteRegular,
  kErdosRenyi,
  kComplete,
  kCycle,
  kCompleteBipartite,
};

std::string to_string(GraphKind kind);
GraphKind graph_kind_from_string(const std::string& name);

// Generation request. For the regular kinds `branching` is D, so every
// vertex gets degree D + 1 (the D-ary tree convention used throughout).
struct GraphSpec {
  GraphKind kind = GraphKind::kRandomRegular;
  int n = 0;
  int branching = 2;
  double edge_probability = 0.5;
  int part_a = 0;
  int part_b = 0;
  std::uint64_t seed = 0;
  // Accept only graphs with girth strictly greater than this (0: no check).
  int girth_above = 0;
  int max_retries = 10000;

  static GraphSpec random_regular(int n, int branching, std::uint64_t seed);
  static GraphSpec erdos_renyi(int n, double probability, std::uint64_t seed);
  // Edge probability chosen so the expected average degree is `avg_degree`.
  static GraphSpec erdos_renyi_avg_degree(int n, double avg_degree, std::uint64_t seed);
  // 2m vertices; left/right sides of size m.
  static GraphSpec random_bipartite_regular(int m, int branching, std::uint64_t seed);
  static GraphSpec complete(int n);
  static GraphSpec cycle(int n);
  static GraphSpec complete_bipartite(int a, int b);
};

// Unit-weight graph; deterministic in spec.seed. Throws GenerationError when
// the degree sequence is infeasible or the retry cap is exhausted.
WeightedGraph generate(const GraphSpec& spec);

// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const WeightedGraph& g);

bool is_triangle_free(const WeightedGraph& g);

nlohmann::json to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const nlohmann::json& j);
GraphSpec graph_spec_from_json(const nlohmann::json& j);

}  // namespace wqaoa
