#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "unrel/error.hpp"
#include "unrel/graph.hpp"

using namespace unrel;

TEST_CASE("is_connected on small paths") {
  const MultiGraph path(3, {{0, 1}, {1, 2}});
  CHECK(is_connected(path, {true, true}));
  CHECK_FALSE(is_connected(path, {true, false}));
  CHECK(is_connected(MultiGraph(1, {}), {}));
  CHECK_THROWS_AS(is_connected(path, {true}), InvalidArgument);
}

TEST_CASE("is_connected agrees with breadth-first search") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const int m = std::uniform_int_distribution<int>(0, 14)(rng);
    std::vector<Edge> edges;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < m && n > 1; ++i) {
      int a = pick(rng);
      int b = pick(rng);
      if (a != b) edges.push_back({a, b});
    }
    const MultiGraph g(n, edges);
    EdgeMask alive(edges.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = rng() & 1U;
    REQUIRE(is_connected(g, alive) == oracle::bfs_connected(n, edges, alive));
  }
}

TEST_CASE("self-loops are dropped and bad endpoints rejected") {
  const MultiGraph g(2, {{0, 0}, {0, 1}, {1, 1}});
  CHECK(g.num_edges() == 1);
  CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(MultiGraph(0, {}), InvalidArgument);
}

TEST_CASE("contract builds the quotient") {
  const MultiGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  const Contraction one = contract(triangle, EdgeMask{true, false, false});
  CHECK(one.graph.num_vertices() == 2);
  CHECK(one.graph.num_edges() == 2);
  CHECK(one.edge_origin == std::vector<int>{1, 2});

  const Contraction all = contract(triangle, EdgeMask{true, true, true});
  CHECK(all.graph.num_vertices() == 1);
  CHECK(all.graph.num_edges() == 0);

  const MultiGraph c4 = generate("cycle", {.n = 4});
  const Contraction opposite = contract(c4, EdgeMask{true, false, true, false});
  CHECK(opposite.graph.num_vertices() == 2);
  CHECK(opposite.graph.num_edges() == 2);
  for (const Edge& e : opposite.graph.edges()) CHECK(((e.u == 0 && e.v == 1) || (e.u == 1 && e.v == 0)));
}

TEST_CASE("contracted cut values pull back to the original graph") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = oracle::random_connected(8, 14, rng);
    EdgeMask merge(static_cast<std::size_t>(g.num_edges()));
    for (std::size_t i = 0; i < merge.size(); ++i) merge[i] = rng() % 4 == 0;
    const Contraction c = contract(g, merge);
    const int k = c.graph.num_vertices();
    if (k < 2) continue;
    for (std::uint64_t bits = 1; bits < (1ULL << (k - 1)); ++bits) {
      const CutSide small = CutSide::from_bits(bits, k);
      std::vector<bool> pulled(8);
      for (int v = 0; v < 8; ++v) pulled[v] = small.contains(c.map.image[v]);
      REQUIRE(cut_value(c.graph, small) == cut_value(g, CutSide(pulled)));
    }
  }
}

TEST_CASE("contract rejects a map that does not fit") {
  const MultiGraph g(3, {{0, 1}});
  ContractionMap bad{{0, 1}, 2};
  CHECK_THROWS_AS(contract(g, bad), StructuralError);
  ContractionMap out_of_range{{0, 1, 5}, 2};
  CHECK_THROWS_AS(contract(g, out_of_range), StructuralError);
}

TEST_CASE("sample_contraction extremes and surviving edge count") {
  Rng rng(3);
  const MultiGraph c8 = generate("cycle", {.n = 8});
  CHECK(sample_contraction(c8, 1.0, rng).graph == c8);
  CHECK(sample_contraction(c8, 0.0, rng).graph.num_vertices() == 1);

  const double q = std::exp2(-2.0 / 3.0);
  const int trials = 10000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double m = sample_contraction(c8, q, rng).graph.num_edges();
    sum += m;
    sum_sq += m * m;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sum_sq / trials - mean * mean) / trials);
  CHECK(mean <= 8.0 / (1.0 - q) + 3.0 * se);
}

TEST_CASE("cut_value counts crossing edges with multiplicity") {
  const MultiGraph k2 = generate("two_vertex", {.k = 3});
  CHECK(cut_value(k2, CutSide::from_bits(0b01, 2)) == 3);
  const MultiGraph c4 = generate("cycle", {.n = 4});
  CHECK(cut_value(c4, CutSide::from_bits(0b0011, 4)) == 2);
  CHECK_THROWS_AS(cut_value(c4, CutSide::from_bits(0, 4)), InvalidArgument);
  CHECK_THROWS_AS(cut_value(c4, CutSide::from_bits(0b1111, 4)), InvalidArgument);
  CHECK_THROWS_AS(cut_value(c4, CutSide::from_bits(1, 3)), InvalidArgument);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = oracle::random_connected(8, 16, rng);
    const std::uint64_t bits = std::uniform_int_distribution<std::uint64_t>(1, 254)(rng);
    const CutSide side = CutSide::from_bits(bits, 8);
    CHECK(cut_value(g, side) == oracle::scan_cut(oracle::edge_list(g), side.membership()));
  }
}

TEST_CASE("generator families") {
  const MultiGraph c5 = generate("cycle", {.n = 5});
  CHECK(c5.num_vertices() == 5);
  CHECK(c5.num_edges() == 5);
  CHECK(oracle::brute_min_cut(c5) == 2);

  const MultiGraph k2 = generate("two_vertex", {.k = 3});
  CHECK(k2.num_vertices() == 2);
  CHECK(k2.num_edges() == 3);

  const MultiGraph leaf = generate("leaf_cycle", {.n = 6, .lambda = 4});
  CHECK(leaf.num_vertices() == 6);
  CHECK(leaf.num_edges() == 5 * 3 + 4);
  int to_leaf = 0;
  for (const Edge& e : leaf.edges()) to_leaf += (e.u == 5 || e.v == 5);
  CHECK(to_leaf == 4);
  CHECK(oracle::brute_min_cut(leaf) == 4);

  const MultiGraph pc = generate("parallel_cycle", {.n = 4, .k = 3});
  CHECK(pc.num_edges() == 12);
  CHECK(oracle::brute_min_cut(pc) == 6);

  const MultiGraph k4 = generate("complete", {.n = 4});
  CHECK(k4.num_edges() == 6);

  const MultiGraph db = generate("dumbbell", {.n = 8, .k = 2});
  CHECK(db.num_edges() == 2 * 6 + 2);
  CHECK(oracle::brute_min_cut(db) == 2);

  const MultiGraph gnm = generate("gnm", {.n = 10, .m = 20, .simple = true, .seed = 4});
  CHECK(gnm.num_edges() == 20);
  CHECK(is_connected(gnm));

  CHECK_THROWS_AS(generate("gnm", {.n = 4, .m = 7, .simple = true}), InvalidArgument);
  CHECK_THROWS_AS(generate("cycle", {.n = 2}), InvalidArgument);
  CHECK_THROWS_AS(generate("dumbbell", {.n = 5}), InvalidArgument);
  CHECK_THROWS_AS(generate("hypercube", {.n = 8}), InvalidArgument);
}

TEST_CASE("graph text format round-trips byte for byte") {
  const MultiGraph g = generate("gnm", {.n = 7, .m = 12, .seed = 2});
  const std::string text = to_string(g);
  std::istringstream in(text);
  const MultiGraph back = parse_graph(in);
  CHECK(back == g);
  CHECK(to_string(back) == text);
}

TEST_CASE("parser accepts comments and rejects malformed input") {
  std::istringstream ok("# a triangle\n3 3\n0 1\n# middle\n1 2\n2 0\n");
  CHECK(parse_graph(ok).num_edges() == 3);

  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_graph(in), ParseError);
  };
  fails("");
  fails("3\n");
  fails("3 2\n0 1\n");
  fails("3 1\n0 9\n");
  fails("3 1\n0 1 2\n");
  fails("3 1\n0 1\n1 2\n");
  fails("0 0\n");

  std::istringstream bad("2 1\n0 x\n");
  try {
    parse_graph(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
