#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "unrel/error.hpp"
#include "unrel/respect_query.hpp"

using namespace unrel;

TEST_CASE("labels of a star and of a single edge") {
  // r = 0, x = 1, y = 2.
  const std::vector<Edge> star{{0, 1}, {0, 2}};
  const EulerLabeling lab = build_labeling(3, star);
  CHECK(lab.rank == std::vector<int>{1, 2, 3});
  CHECK(lab.labels[0] == std::array<int, 2>{1, 2});
  CHECK(lab.labels[1] == std::array<int, 2>{2, 3});

  const EulerLabeling path = build_labeling(2, std::vector<Edge>{{0, 1}});
  CHECK(path.labels[0] == std::array<int, 2>{1, 2});

  CHECK_THROWS_AS(build_labeling(3, std::vector<Edge>{{0, 1}}), StructuralError);
  CHECK_THROWS_AS(build_labeling(3, std::vector<Edge>{{0, 1}, {1, 0}}), StructuralError);
}

TEST_CASE("every label value below n appears") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 40)(rng);
    const auto tree = fixture::random_tree(n, rng);
    const EulerLabeling lab = build_labeling(n, tree, std::uniform_int_distribution<int>(0, n - 1)(rng));
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& l : lab.labels) {
      CHECK(l[0] >= 1);
      CHECK(l[0] < l[1]);
      CHECK(l[1] <= n);
      ++seen[l[0]];
      ++seen[l[1]];
    }
    for (int v = 1; v < n; ++v) CHECK(seen[v] >= 1);
    for (int v = 0; v < n; ++v) CHECK(lab.order[lab.rank[v] - 1] == v);
  }
}

TEST_CASE("range index on a triangle") {
  const MultiGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  const EulerLabeling lab = build_labeling(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const RangeCutIndex idx = build_range_index(triangle, lab);
  CHECK(idx.counter.size() == 3);
  CHECK(idx.query(0, 1, 1, 3) == 2);
  CHECK(idx.query(1, 2, 2, 3) == 1);
  CHECK_THROWS_AS(build_range_index(MultiGraph(4, {{0, 3}}), lab), StructuralError);
}

TEST_CASE("range counter matches a point scan") {
  std::mt19937_64 rng(61);
  std::vector<std::pair<int, int>> points;
  std::uniform_int_distribution<int> coord(1, 60);
  for (int i = 0; i < 500; ++i) points.push_back({coord(rng), coord(rng)});
  const RangeCounter counter(points);
  std::uniform_int_distribution<int> edge(0, 61);
  for (int q = 0; q < 1000; ++q) {
    int a = edge(rng), b = edge(rng), c = edge(rng), d = edge(rng);
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    int expected = 0;
    for (auto [x, y] : points) expected += x > a && x <= b && y > c && y <= d;
    REQUIRE(counter.count(a, b, c, d) == expected);
  }
  CHECK(RangeCounter(std::vector<std::pair<int, int>>{}).count(0, 10, 0, 10) == 0);
}

TEST_CASE("chi examples") {
  const std::vector<Edge> star{{0, 1}, {0, 2}};
  const EulerLabeling lab = build_labeling(3, star);
  const MultiGraph host(3, {{0, 1}, {1, 2}, {1, 2}, {0, 2}});
  const RangeCutIndex idx = build_range_index(host, lab);
  const std::vector<int> chi{0};
  CHECK(chi_side(chi, lab).membership() == std::vector<bool>{false, true, false});
  CHECK(cut_value_of_chi(chi, idx, lab) == 3);

  // chi = every edge of a path tree alternates the sides.
  const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  const EulerLabeling plab = build_labeling(5, path);
  const MultiGraph k5 = generate("complete", {.n = 5});
  const std::vector<int> all{0, 1, 2, 3};
  CHECK(cut_value_of_chi(all, build_range_index(k5, plab), plab) == 6);

  // Host = the tree itself.
  const std::vector<int> two{0, 2, 2};
  CHECK(cut_value_of_chi(two, build_range_index(path, plab), plab) == 2);
  CHECK_THROWS_AS(cut_value_of_chi(std::vector<int>{7}, build_range_index(path, plab), plab), InvalidArgument);
}

TEST_CASE("chi cut values match explicit two-coloring") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 60)(rng);
    const auto tree = fixture::random_tree(n, rng);
    const MultiGraph host = oracle::random_connected(n, std::uniform_int_distribution<int>(n - 1, 4 * n)(rng), rng);
    const EulerLabeling lab = build_labeling(n, tree, std::uniform_int_distribution<int>(0, n - 1)(rng));
    const RangeCutIndex idx = build_range_index(host, lab);
    const int size = std::uniform_int_distribution<int>(1, std::min(7, n - 1))(rng);
    std::vector<int> chi;
    for (int i = 0; i < size; ++i) chi.push_back(std::uniform_int_distribution<int>(0, n - 2)(rng));
    std::vector<int> distinct = chi;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    const auto side = oracle::chi_coloring(n, tree, distinct, lab.order[0]);
    std::size_t queries = 0;
    REQUIRE(cut_value_of_chi(chi, idx, lab, &queries) == oracle::scan_cut(oracle::edge_list(host), side));
    const std::size_t k = distinct.size();
    CHECK(queries <= (k + 1) * (k + 1));
    CHECK(queries <= k * (k + 1));

    // The explicit side can differ from the coloring only by complement.
    const CutSide explicit_side = chi_side(chi, lab);
    const auto& mem = explicit_side.membership();
    CHECK((mem == side || std::all_of(mem.begin(), mem.end(), [&, v = 0](bool b) mutable { return b != side[v++]; })));

    // Another tree as host counts |C(chi) n T'|.
    const auto other = fixture::random_tree(n, rng);
    CHECK(cut_value_of_chi(chi, build_range_index(other, lab), lab) == oracle::scan_cut(other, side));
  }
}
