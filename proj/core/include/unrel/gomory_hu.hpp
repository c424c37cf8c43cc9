#pragma once

#include <vector>

#include "unrel/graph.hpp"

namespace unrel {

/// Dinic max-flow on the unit-capacity undirected multigraph; parallel edges
/// become one arc pair of capacity equal to the multiplicity. Reusable across
/// (s, t) pairs.
class MaxFlow {
 public:
  explicit MaxFlow(const MultiGraph& g);

  /// Value of a minimum s-t cut.
  int run(int s, int t);
  /// Vertices reachable from s in the residual graph of the last run.
  const std::vector<bool>& source_side() const { return reachable_; }

 private:
  struct Arc {
    int to;
    int cap;
  };
  bool bfs(int s, int t);
  int dfs(int v, int t, int pushed);

  int n_;
  std::vector<Arc> arcs_;
  std::vector<int> original_cap_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  std::vector<bool> reachable_;
};

/// Cut tree over the graph's vertices: parent[v] and the weight of edge
/// (v, parent[v]); the root has parent -1. The minimum weight on the s-t tree
/// path equals the s-t min-cut value in the graph.
struct GomoryHuTree {
  std::vector<int> parent;
  std::vector<int> weight;

  int num_vertices() const { return static_cast<int>(parent.size()); }
  /// Tree edges as (child, parent) pairs with their weights, in vertex order.
  std::vector<Edge> edges() const;
  std::vector<int> edge_weights() const;
  std::vector<int> sorted_weights() const;
  int path_min(int s, int t) const;
};

/// Gusfield's construction with n - 1 max-flow calls. Throws
/// DisconnectedGraph for disconnected input and InvalidArgument for n < 2.
GomoryHuTree build_gomory_hu(const MultiGraph& g);

/// Global min-cut value: the lightest tree edge.
int min_cut_value(const GomoryHuTree& tree);

/// min(lambda, 3/4 * S_k / k) where S_k sums the k smallest tree weights and
/// k = min(ceil(2^{-2/3} n), n - 1).
double gamma(const GomoryHuTree& tree);

/// Rank used to pick tau: min(ceil(sqrt(n)), n - 1).
int tau_rank(int n);

struct TauContraction {
  int tau = 0;
  MultiGraph graph;
  GomoryHuTree tree;
  ContractionMap map;
  /// Original edge index in g of every edge of `graph`.
  std::vector<int> edge_origin;

  bool degenerate() const { return graph.num_vertices() < 2; }
};

/// Contracts every tree edge of weight >= tau, with tau the tau_rank-th
/// smallest tree weight, in both the tree and the graph.
TauContraction tau_and_contract(const MultiGraph& g, const GomoryHuTree& tree);

}  // namespace unrel
