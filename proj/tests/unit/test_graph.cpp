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


#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "wqaoa/brute_force.hpp"
#include "wqaoa/errors.hpp"
#include "wqaoa/graph.hpp"
#include "wqaoa/spin_polynomial.hpp"

using namespace wqaoa;

TEST_CASE("complete bipartite K33") {
  const WeightedGraph g = generate(GraphSpec::complete_bipartite(3, 3));
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 9);
  CHECK(g.regular_degree() == 3);
  CHECK(girth(g) == 4);
  CHECK(is_triangle_free(g));
  CHECK(g.adjacency_consistent());
}

TEST_CASE("cycle and triangle girth") {
  const WeightedGraph c5 = generate(GraphSpec::cycle(5));
  CHECK(c5.num_edges() == 5);
  CHECK(c5.regular_degree() == 2);
  CHECK(girth(c5) == 5);
  CHECK(girth(generate(GraphSpec::cycle(3))) == 3);
  CHECK_FALSE(is_triangle_free(generate(GraphSpec::complete(4))));
}

TEST_CASE("forest has no girth") {
  const WeightedGraph path(5, {{0, 1, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}, {3, 4, 1.0}});
  CHECK_FALSE(girth(path).has_value());
}

TEST_CASE("random regular parity and degree") {
  CHECK_THROWS_AS(generate(GraphSpec::random_regular(7, 2, 1)), GenerationError);
  for (int n : {8, 10, 14}) {
    for (int D : {1, 2, 3}) {
      const WeightedGraph g = generate(GraphSpec::random_regular(n, D, 42));
      CHECK(g.regular_degree() == D + 1);
      CHECK(g.adjacency_consistent());
    }
  }
}

TEST_CASE("generation is deterministic in the seed") {
  CHECK(generate(GraphSpec::random_regular(12, 2, 7)) == generate(GraphSpec::random_regular(12, 2, 7)));
  CHECK(generate(GraphSpec::erdos_renyi(12, 0.3, 5)) == generate(GraphSpec::erdos_renyi(12, 0.3, 5)));
  CHECK_FALSE(generate(GraphSpec::random_regular(12, 2, 7)) == generate(GraphSpec::random_regular(12, 2, 8)));
}

TEST_CASE("girth constraint is honoured") {
  GraphSpec spec = GraphSpec::random_regular(14, 2, 3);
  spec.girth_above = 4;
  const WeightedGraph g = generate(spec);
  CHECK(girth(g).value() > 4);
}

TEST_CASE("bipartite regular graphs are triangle free") {
  const WeightedGraph g = generate(GraphSpec::random_bipartite_regular(8, 3, 11));
  CHECK(g.num_vertices() == 16);
  CHECK(g.regular_degree() == 4);
  CHECK(is_triangle_free(g));
}

TEST_CASE("graph invariants reject bad edges") {
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 0, 1.0}}), PreconditionError);
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, 1.0}, {1, 0, 2.0}}), PreconditionError);
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 3, 1.0}}), PreconditionError);
  const WeightedGraph g(3, {{2, 0, 1.5}});
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 2);
}

TEST_CASE("json round trip") {
  const WeightedGraph g = generate(GraphSpec::random_regular(8, 2, 9)).with_weights(std::vector<double>(12, 0.25));
  CHECK(graph_from_json(to_json(g)) == g);
}

TEST_CASE("brute force max cut") {
  const WeightedGraph c5 = generate(GraphSpec::cycle(5));
  CHECK(brute_force_max(maxcut_poly(c5)).value == doctest::Approx(4.0));
  const WeightedGraph edge(2, {{0, 1, 3.0}});
  const auto r = brute_force_max(maxcut_poly(edge));
  CHECK(r.value == doctest::Approx(3.0));
  CHECK(r.basis_index == 1);  // lowest index among {01, 10}
}

TEST_CASE("brute force matches an independent enumeration") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const WeightedGraph topo = generate(GraphSpec::erdos_renyi(8, 0.5, seed));
    Rng rng = make_rng(seed, 3);
    const WeightedGraph g = topo.with_weights(WeightDistribution::normal(0.3, 1.0).sample(rng, topo.num_edges()));
    const Extrema ext = brute_force_extrema(maxcut_poly(g));
    CHECK(ext.max.value == doctest::Approx(oracle::max_cut(g)).epsilon(1e-12));
    CHECK(oracle::cut_weight(g, ext.max.basis_index) == doctest::Approx(ext.max.value).epsilon(1e-12));
  }
}

TEST_CASE("brute force capacity") {
  SpinPolynomial big(kMaxDenseQubits + 1);
  big.add_term({0}, 1.0);
  CHECK_THROWS_AS(brute_force_max(big), CapacityError);
}
