#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unrel/rng.hpp"

namespace unrel {

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Liveness or selection flag per edge, keyed by stable edge index.
using EdgeMask = std::vector<bool>;

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n = 0) { reset(n); }

  void reset(int n) {
    parent_.resize(static_cast<std::size_t>(n));
    size_.assign(static_cast<std::size_t>(n), 1);
    std::iota(parent_.begin(), parent_.end(), 0);
    components_ = n;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when the two elements were in different sets.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_ = 0;
};

/// Undirected multigraph. Parallel edges are repeated entries; self-loops are
/// dropped on construction. Immutable once built.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Throws InvalidArgument when n < 1 or an endpoint is out of range.
  MultiGraph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
};

/// Maps each vertex of a graph onto a vertex of its quotient.
struct ContractionMap {
  std::vector<int> image;
  int num_new = 0;

  static ContractionMap identity(int n);
};

struct Contraction {
  MultiGraph graph;
  ContractionMap map;
  /// Original edge index of each quotient edge.
  std::vector<int> edge_origin;
};

/// One side of a vertex bipartition.
class CutSide {
 public:
  CutSide() = default;
  explicit CutSide(std::vector<bool> membership) : membership_(std::move(membership)) {}
  /// Bit i of `bits` marks vertex i (n <= 64).
  static CutSide from_bits(std::uint64_t bits, int n);

  int size() const { return static_cast<int>(membership_.size()); }
  bool contains(int v) const { return membership_[static_cast<std::size_t>(v)]; }
  const std::vector<bool>& membership() const { return membership_; }
  /// Both sides nonempty.
  bool is_proper() const;
  /// True when the edge (u, v) crosses the bipartition.
  bool separates(int u, int v) const { return contains(u) != contains(v); }

 private:
  std::vector<bool> membership_;
};

/// True iff the alive edges connect all vertices.
bool is_connected(const MultiGraph& g, const EdgeMask& alive);
bool is_connected(const MultiGraph& g);

/// Quotient by the merged edges; self-loops removed, parallel edges kept.
/// New vertex ids are assigned in order of each class's smallest member.
Contraction contract(const MultiGraph& g, const EdgeMask& merge);
/// Quotient by an explicit vertex partition.
Contraction contract(const MultiGraph& g, const ContractionMap& map);

/// Contracts each edge independently with probability 1 - q, i.e. draws
/// H ~ G(q).
Contraction sample_contraction(const MultiGraph& g, double q, Rng& rng);

/// Number of edges crossing the bipartition. Throws InvalidArgument for an
/// empty or full side, or a side of the wrong length.
int cut_value(const MultiGraph& g, const CutSide& side);

struct GeneratorParams {
  int n = 0;
  /// Parallel copies per edge (parallel_cycle, complete) or bridge count (dumbbell).
  int k = 1;
  /// Leaf multiplicity for leaf_cycle.
  int lambda = 2;
  /// Edge count for gnm.
  int m = 0;
  bool simple = false;
  bool connected = true;
  std::uint64_t seed = 1;
};

/// Families: cycle, parallel_cycle, leaf_cycle, complete, gnm, dumbbell,
/// two_vertex. Throws InvalidArgument on unknown family or bad parameters.
MultiGraph generate(std::string_view family, const GeneratorParams& params);

/// Text format: "n m", then m lines "u v"; lines starting with '#' are
/// comments. Throws ParseError.
MultiGraph parse_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const MultiGraph& g);
std::string to_string(const MultiGraph& g);

}  // namespace unrel
