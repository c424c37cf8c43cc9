#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "unrel/error.hpp"
#include "unrel/exact.hpp"
#include "unrel/gomory_hu.hpp"

using namespace unrel;

TEST_CASE("max flow on small graphs") {
  const MultiGraph c5 = generate("cycle", {.n = 5});
  MaxFlow flow(c5);
  CHECK(flow.run(0, 2) == 2);
  CHECK(flow.run(1, 4) == 2);
  const MultiGraph k2 = generate("two_vertex", {.k = 3});
  MaxFlow f2(k2);
  CHECK(f2.run(0, 1) == 3);
  CHECK(f2.source_side() == std::vector<bool>{true, false});
  CHECK_THROWS_AS(f2.run(0, 0), InvalidArgument);
}

TEST_CASE("Gomory-Hu tree examples") {
  const GomoryHuTree c5 = build_gomory_hu(generate("cycle", {.n = 5}));
  CHECK(c5.sorted_weights() == std::vector<int>{2, 2, 2, 2});
  CHECK(min_cut_value(c5) == 2);
  CHECK(gamma(c5) == doctest::Approx(1.5));

  const GomoryHuTree k2 = build_gomory_hu(generate("two_vertex", {.k = 3}));
  CHECK(k2.edge_weights() == std::vector<int>{3});
  CHECK(min_cut_value(k2) == 3);
  CHECK(gamma(k2) == doctest::Approx(2.25));

  CHECK_THROWS_AS(build_gomory_hu(MultiGraph(3, {{0, 1}})), DisconnectedGraph);
  CHECK_THROWS_AS(build_gomory_hu(MultiGraph(1, {})), InvalidArgument);
}

TEST_CASE("cycles have gamma 1.5 at every size") {
  for (int n = 3; n <= 30; ++n) CHECK(gamma(build_gomory_hu(generate("cycle", {.n = n}))) == doctest::Approx(1.5));
}

TEST_CASE("path minima equal independent max flows") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    const MultiGraph g = oracle::random_connected(n, std::uniform_int_distribution<int>(n - 1, 3 * n)(rng), rng);
    const GomoryHuTree tree = build_gomory_hu(g);
    REQUIRE(tree.num_vertices() == n);
    REQUIRE(tree.edges().size() == static_cast<std::size_t>(n - 1));
    for (int s = 0; s < n; ++s) {
      for (int t = s + 1; t < n; ++t) REQUIRE(tree.path_min(s, t) == oracle::max_flow(g, s, t));
    }
    if (n <= 10) CHECK(min_cut_value(tree) == oracle::brute_min_cut(g));
  }
}

TEST_CASE("gamma matches sort-and-sum and stays in [3/4 lambda, lambda]") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    const MultiGraph g = oracle::random_connected(n, std::uniform_int_distribution<int>(n - 1, 4 * n)(rng), rng);
    const GomoryHuTree tree = build_gomory_hu(g);
    std::vector<int> w = tree.edge_weights();
    std::sort(w.begin(), w.end());
    const int k = std::min(static_cast<int>(std::ceil(std::exp2(-2.0 / 3.0) * n)), n - 1);
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += w[i];
    const double lambda = w.front();
    const double expected = std::min(lambda, 0.75 * s / k);
    CHECK(gamma(tree) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(gamma(tree) >= 0.75 * lambda);
    CHECK(gamma(tree) <= lambda);
  }
}

TEST_CASE("tau_rank") {
  CHECK(tau_rank(2) == 1);
  CHECK(tau_rank(9) == 3);
  CHECK(tau_rank(10) == 4);
  CHECK(tau_rank(3) == 2);
}

TEST_CASE("tau contraction of uniform trees is degenerate") {
  const MultiGraph c9 = generate("cycle", {.n = 9});
  const TauContraction c = tau_and_contract(c9, build_gomory_hu(c9));
  CHECK(c.tau == 2);
  CHECK(c.degenerate());
  CHECK(c.graph.num_vertices() == 1);

  const MultiGraph k2 = generate("two_vertex", {.k = 2});
  CHECK(tau_and_contract(k2, build_gomory_hu(k2)).degenerate());
}

TEST_CASE("tau contraction keeps exactly the light bridges") {
  const MultiGraph g = fixture::clique_star(4, 4, 3);
  const TauContraction c = tau_and_contract(g, build_gomory_hu(g));
  REQUIRE(c.graph.num_vertices() == 4);
  CHECK(c.graph.num_edges() == 3);
  CHECK(min_cut_value(c.tree) == 1);
  for (int v = 0; v < 16; ++v) CHECK(c.map.image[v] == c.map.image[(v / 4) * 4]);
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) CHECK(c.map.image[a * 4] != c.map.image[b * 4]);
  }
  for (std::size_t i = 0; i < c.edge_origin.size(); ++i) {
    const Edge& orig = g.edge(c.edge_origin[i]);
    CHECK(orig.u / 4 != orig.v / 4);
  }
}

TEST_CASE("tau contraction preserves every cut lighter than tau") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 12)(rng);
    const MultiGraph g = oracle::random_connected(n, std::uniform_int_distribution<int>(n - 1, 3 * n)(rng), rng);
    const TauContraction c = tau_and_contract(g, build_gomory_hu(g));
    CHECK(c.graph.num_vertices() <= static_cast<int>(std::ceil(std::sqrt(n))));
    if (!c.degenerate()) CHECK(oracle::brute_min_cut(c.graph) == oracle::brute_min_cut(g));
    for (const CutEntry& e : enumerate_cuts(g).cuts) {
      if (e.value >= c.tau) continue;
      // Cut survives: every class lies on one side.
      for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) {
          if (c.map.image[v] == c.map.image[w]) REQUIRE(e.side.contains(v) == e.side.contains(w));
        }
      }
    }
  }
}
