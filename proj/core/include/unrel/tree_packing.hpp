#pragma once

#include <span>
#include <vector>

#include "unrel/graph.hpp"

namespace unrel {

/// Spanning trees of a host graph, each an edge-index list of size n - 1.
/// Every host edge appears in at most two trees.
struct TreePacking {
  std::vector<std::vector<int>> trees;

  int size() const { return static_cast<int>(trees.size()); }
};

/// Packs lambda(h) spanning trees with congestion <= 2 as lambda edge-disjoint
/// spanning trees of the doubled multigraph (matroid partition by shortest
/// augmenting paths). Throws DisconnectedGraph if h is disconnected.
TreePacking pack_trees(const MultiGraph& h);
/// Same, with the number of trees given (must not exceed lambda(h)).
TreePacking pack_trees(const MultiGraph& h, int num_trees);

/// Largest number of trees sharing one host edge.
int max_congestion(const TreePacking& packing, int num_host_edges);

/// True iff `tree` has n - 1 edges, spans all n vertices and is acyclic.
bool is_spanning_tree(int n, std::span<const Edge> tree);
bool is_spanning_tree(const MultiGraph& host, std::span<const int> tree_edges);

/// Tree on the full vertex set: the tree's own edges pulled back to the
/// original graph, followed by star edges joining each contracted class.
struct ExpandedTree {
  std::vector<Edge> original;
  std::vector<Edge> added;

  std::vector<Edge> all() const;
};

/// Expands a spanning tree of a contracted graph, given as indices of edges of
/// `g`, into a spanning tree of g's vertex set. The intersection with any cut
/// of the quotient is unchanged. Throws StructuralError if the map does not
/// fit g or the edges do not form a spanning tree of the quotient.
ExpandedTree expand_tree(std::span<const int> tree_edges_in_g, const ContractionMap& map, const MultiGraph& g);

}  // namespace unrel
