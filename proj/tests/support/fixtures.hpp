#pragma once

// Graph builders shared by the unit and acceptance tests.

#include <algorithm>
#include <random>
#include <vector>

#include "unrel/graph.hpp"

namespace fixture {

using unrel::Edge;
using unrel::MultiGraph;

/// `cliques` copies of K_size with every edge repeated `mult` times; clique c
/// hangs off vertex c % size of the first clique by a single edge.
inline MultiGraph clique_star(int cliques, int size, int mult) {
  std::vector<Edge> edges;
  for (int c = 0; c < cliques; ++c) {
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) {
        for (int r = 0; r < mult; ++r) edges.push_back({c * size + a, c * size + b});
      }
    }
    if (c > 0) edges.push_back({c % size, c * size});
  }
  return MultiGraph(cliques * size, std::move(edges));
}

/// Uniformly relabeled random recursive tree, edges shuffled.
template <typename Rng>
std::vector<Edge> random_tree(int n, Rng& rng) {
  std::vector<Edge> tree;
  for (int v = 1; v < n; ++v) tree.push_back({v, std::uniform_int_distribution<int>(0, v - 1)(rng)});
  std::vector<int> relabel(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) relabel[i] = i;
  std::shuffle(relabel.begin(), relabel.end(), rng);
  for (Edge& e : tree) e = {relabel[e.u], relabel[e.v]};
  std::shuffle(tree.begin(), tree.end(), rng);
  return tree;
}

/// Every edge of g repeated `times` times.
inline MultiGraph repeat_edges(const MultiGraph& g, int times) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    for (int r = 0; r < times; ++r) edges.push_back(e);
  }
  return MultiGraph(g.num_vertices(), std::move(edges));
}

}  // namespace fixture
