#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "unrel/graph.hpp"

namespace unrel {

/// Euler tour of a spanning tree. Traversing an edge is labeled by the number
/// of distinct vertices seen before the traversal, so the edge into child c
/// carries labels rank(c) - 1 and the last rank inside c's subtree.
struct EulerLabeling {
  int n = 0;
  /// Vertex -> preorder rank in 1..n.
  std::vector<int> rank;
  /// Rank - 1 -> vertex.
  std::vector<int> order;
  /// Per tree edge (index into the tree's edge list): {low, high} label.
  std::vector<std::array<int, 2>> labels;
  /// Endpoints of every tree edge, as given.
  std::vector<Edge> edges;
};

/// Tours from `root`. Throws StructuralError unless `tree` is a spanning
/// tree on n vertices.
EulerLabeling build_labeling(int n, std::span<const Edge> tree, int root = 0);

/// Static 2D dominance counter over integer points (merge-sort tree).
/// Build O(m log m), query O(log^2 m).
class RangeCounter {
 public:
  RangeCounter() = default;
  explicit RangeCounter(std::vector<std::pair<int, int>> points);

  /// Points with x in (x_lo, x_hi] and y in (y_lo, y_hi].
  int count(int x_lo, int x_hi, int y_lo, int y_hi) const;
  std::size_t size() const { return xs_.size(); }

 private:
  std::vector<int> xs_;
  std::size_t leaves_ = 0;
  std::vector<std::vector<int>> nodes_;
};

/// One point (min rank, max rank) per host edge, ranks from a labeling.
struct RangeCutIndex {
  int n = 0;
  RangeCounter counter;

  /// Host edges with one endpoint ranked in (u_lo, u_hi] and the other in
  /// (w_lo, w_hi], where the first interval precedes the second.
  int query(int u_lo, int u_hi, int w_lo, int w_hi) const { return counter.count(u_lo, u_hi, w_lo, w_hi); }
};

/// Throws StructuralError when a host endpoint lies outside the labeling's
/// vertex set.
RangeCutIndex build_range_index(std::span<const Edge> host, const EulerLabeling& lab);
RangeCutIndex build_range_index(const MultiGraph& host, const EulerLabeling& lab);

/// Preorder intervals of the cut C(chi) whose tree intersection is exactly
/// chi. Odd intervals form one side. Reusable across hosts indexed with the
/// same labeling.
class ChiIntervals {
 public:
  /// chi holds tree-edge indices of lab; duplicates are ignored. Throws
  /// InvalidArgument for an index outside the tree.
  ChiIntervals(std::span<const int> chi, const EulerLabeling& lab);

  /// Value of C(chi) in the index's host, with at most |chi| * (|chi| + 1)
  /// rectangle queries; the count is added to *queries.
  int value_in(const RangeCutIndex& idx, std::size_t* queries = nullptr) const;
  /// Interval bounds 0 = b_0 <= b_1 <= ... <= b_last = n.
  const std::vector<int>& bounds() const { return bounds_; }
  int distinct_edges() const { return static_cast<int>(bounds_.size() / 2) - 1; }

 private:
  int n_ = 0;
  std::vector<int> bounds_;
};

/// Value in the index's host of the cut whose tree intersection is exactly
/// chi (tree-edge indices of lab; duplicates are ignored). At most
/// |chi| * (|chi| + 1) rectangle queries; the count is added to *queries.
int cut_value_of_chi(std::span<const int> chi, const RangeCutIndex& idx, const EulerLabeling& lab,
                     std::size_t* queries = nullptr);

/// The bipartition C(chi) made explicit; the side holds the vertices below an
/// odd number of chi edges.
CutSide chi_side(std::span<const int> chi, const EulerLabeling& lab);

}  // namespace unrel
