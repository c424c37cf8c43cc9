#include "unrel/respect_query.hpp"

#include <algorithm>

#include "unrel/error.hpp"
#include "unrel/tree_packing.hpp"

namespace unrel {
namespace {

constexpr std::size_t kInlineChi = 8;

}  // namespace

EulerLabeling build_labeling(int n, std::span<const Edge> tree, int root) {
  if (n < 1 || root < 0 || root >= n) throw StructuralError("labeling needs a root inside the vertex set");
  if (!is_spanning_tree(n, tree)) throw StructuralError("labeling input is not a spanning tree");
  EulerLabeling lab;
  lab.n = n;
  lab.edges.assign(tree.begin(), tree.end());
  lab.rank.assign(static_cast<std::size_t>(n), 0);
  lab.order.reserve(static_cast<std::size_t>(n));
  lab.labels.assign(tree.size(), {0, 0});

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < tree.size(); ++i) {
    adj[tree[i].u].push_back({tree[i].v, static_cast<int>(i)});
    adj[tree[i].v].push_back({tree[i].u, static_cast<int>(i)});
  }
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<int> subtree(static_cast<std::size_t>(n), 1);
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  lab.rank[root] = 1;
  lab.order.push_back(root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < adj[v].size()) {
      const auto [w, e] = adj[v][next++];
      if (e == parent_edge[v]) continue;
      parent_edge[w] = e;
      lab.order.push_back(w);
      lab.rank[w] = static_cast<int>(lab.order.size());
      stack.push_back({w, 0});
    } else {
      const int done = v;
      stack.pop_back();
      if (parent_edge[done] >= 0) {
        const int e = parent_edge[done];
        const Edge& te = tree[static_cast<std::size_t>(e)];
        subtree[te.u == done ? te.v : te.u] += subtree[done];
        lab.labels[e] = {lab.rank[done] - 1, lab.rank[done] + subtree[done] - 1};
      }
    }
  }
  return lab;
}

RangeCounter::RangeCounter(std::vector<std::pair<int, int>> points) {
  std::sort(points.begin(), points.end());
  xs_.reserve(points.size());
  for (const auto& pt : points) xs_.push_back(pt.first);
  leaves_ = 1;
  while (leaves_ < points.size()) leaves_ *= 2;
  nodes_.assign(2 * leaves_, {});
  for (std::size_t i = 0; i < points.size(); ++i) nodes_[leaves_ + i] = {points[i].second};
  for (std::size_t node = leaves_ - 1; node >= 1; --node) {
    const auto& a = nodes_[2 * node];
    const auto& b = nodes_[2 * node + 1];
    auto& out = nodes_[node];
    out.resize(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  }
}

int RangeCounter::count(int x_lo, int x_hi, int y_lo, int y_hi) const {
  if (x_hi <= x_lo || y_hi <= y_lo || xs_.empty()) return 0;
  std::size_t lo = std::upper_bound(xs_.begin(), xs_.end(), x_lo) - xs_.begin();
  std::size_t hi = std::upper_bound(xs_.begin(), xs_.end(), x_hi) - xs_.begin();
  auto in_node = [&](std::size_t node) {
    const auto& ys = nodes_[node];
    return static_cast<int>(std::upper_bound(ys.begin(), ys.end(), y_hi) -
                            std::upper_bound(ys.begin(), ys.end(), y_lo));
  };
  int total = 0;
  for (lo += leaves_, hi += leaves_; lo < hi; lo /= 2, hi /= 2) {
    if (lo & 1) total += in_node(lo++);
    if (hi & 1) total += in_node(--hi);
  }
  return total;
}

RangeCutIndex build_range_index(std::span<const Edge> host, const EulerLabeling& lab) {
  std::vector<std::pair<int, int>> points;
  points.reserve(host.size());
  for (const Edge& e : host) {
    if (e.u < 0 || e.v < 0 || e.u >= lab.n || e.v >= lab.n) {
      throw StructuralError("host edge endpoint outside the labeled vertex set");
    }
    const int a = lab.rank[e.u];
    const int b = lab.rank[e.v];
    points.push_back({std::min(a, b), std::max(a, b)});
  }
  RangeCutIndex idx;
  idx.n = lab.n;
  idx.counter = RangeCounter(std::move(points));
  return idx;
}

RangeCutIndex build_range_index(const MultiGraph& host, const EulerLabeling& lab) {
  if (host.num_vertices() != lab.n) throw StructuralError("host and labeling disagree on the vertex count");
  return build_range_index(host.edges(), lab);
}

ChiIntervals::ChiIntervals(std::span<const int> chi, const EulerLabeling& lab) : n_(lab.n) {
  int ids[2 * kInlineChi];
  std::vector<int> spill;
  int* first = ids;
  if (chi.size() > 2 * kInlineChi) {
    spill.assign(chi.begin(), chi.end());
    first = spill.data();
  } else {
    std::copy(chi.begin(), chi.end(), ids);
  }
  int* last = first + chi.size();
  std::sort(first, last);
  last = std::unique(first, last);
  bounds_.reserve(static_cast<std::size_t>(2 * (last - first) + 2));
  bounds_.push_back(0);
  for (const int* e = first; e != last; ++e) {
    if (*e < 0 || static_cast<std::size_t>(*e) >= lab.labels.size()) {
      throw InvalidArgument("chi refers to an edge outside the labeled tree");
    }
    bounds_.push_back(lab.labels[*e][0]);
    bounds_.push_back(lab.labels[*e][1]);
  }
  std::sort(bounds_.begin() + 1, bounds_.end());
  bounds_.push_back(lab.n);
}

int ChiIntervals::value_in(const RangeCutIndex& idx, std::size_t* queries) const {
  if (idx.n != n_) throw StructuralError("index and labeling disagree on the vertex count");
  // Interval i is (bounds[i], bounds[i + 1]].
  const std::size_t intervals = bounds_.size() - 1;
  int total = 0;
  std::size_t used = 0;
  for (std::size_t i = 1; i < intervals; i += 2) {
    if (bounds_[i] == bounds_[i + 1]) continue;
    for (std::size_t j = 0; j < intervals; j += 2) {
      if (bounds_[j] == bounds_[j + 1]) continue;
      const std::size_t a = std::min(i, j);
      const std::size_t b = std::max(i, j);
      total += idx.query(bounds_[a], bounds_[a + 1], bounds_[b], bounds_[b + 1]);
      ++used;
    }
  }
  if (queries) *queries += used;
  return total;
}

int cut_value_of_chi(std::span<const int> chi, const RangeCutIndex& idx, const EulerLabeling& lab,
                     std::size_t* queries) {
  return ChiIntervals(chi, lab).value_in(idx, queries);
}

CutSide chi_side(std::span<const int> chi, const EulerLabeling& lab) {
  const ChiIntervals cut(chi, lab);
  const auto& b = cut.bounds();
  std::vector<bool> membership(static_cast<std::size_t>(lab.n), false);
  for (std::size_t i = 1; i + 1 < b.size(); i += 2) {
    for (int r = b[i] + 1; r <= b[i + 1]; ++r) membership[lab.order[r - 1]] = true;
  }
  return CutSide(std::move(membership));
}

}  // namespace unrel
