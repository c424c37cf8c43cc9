#include "unrel/tree_packing.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "unrel/error.hpp"
#include "unrel/gomory_hu.hpp"

namespace unrel {
namespace {

/// k forests over the doubled edge set. Element x is copy x / m of host edge
/// x % m, so the first pass over elements sees every host edge once.
class ForestPartition {
 public:
  ForestPartition(const MultiGraph& host, int k)
      : host_(host),
        n_(host.num_vertices()),
        m_(host.num_edges()),
        k_(k),
        adj_(static_cast<std::size_t>(k), std::vector<std::vector<Link>>(static_cast<std::size_t>(n_))),
        forest_of_(static_cast<std::size_t>(2 * m_), -1),
        size_(static_cast<std::size_t>(k), 0),
        stamp_(static_cast<std::size_t>(n_), 0),
        via_(static_cast<std::size_t>(n_), -1) {}

  void run() {
    const long long target = static_cast<long long>(k_) * (n_ - 1);
    std::vector<DisjointSets> greedy(static_cast<std::size_t>(k_), DisjointSets(n_));
    std::vector<int> pending;
    for (int x = 0; x < 2 * m_ && placed_ < target; ++x) {
      const Edge& e = endpoints(x);
      bool done = false;
      for (int f = 0; f < k_ && !done; ++f) {
        if (greedy[f].unite(e.u, e.v)) {
          insert(f, x);
          done = true;
        }
      }
      if (!done) pending.push_back(x);
    }
    for (int x : pending) {
      if (placed_ >= target) break;
      augment(x);
    }
    if (placed_ < target) {
      throw StructuralError("tree packing failed: host does not hold the requested number of spanning trees");
    }
  }

  std::vector<std::vector<int>> trees() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(k_));
    for (int x = 0; x < 2 * m_; ++x) {
      if (forest_of_[x] >= 0) out[forest_of_[x]].push_back(x % m_);
    }
    for (auto& t : out) std::sort(t.begin(), t.end());
    return out;
  }

 private:
  struct Link {
    int to;
    int element;
  };

  const Edge& endpoints(int x) const { return host_.edge(x % m_); }

  void insert(int f, int x) {
    const Edge& e = endpoints(x);
    adj_[f][e.u].push_back({e.v, x});
    adj_[f][e.v].push_back({e.u, x});
    forest_of_[x] = f;
    ++size_[f];
    ++placed_;
  }

  void remove(int x) {
    const int f = forest_of_[x];
    const Edge& e = endpoints(x);
    for (int end : {e.u, e.v}) {
      auto& links = adj_[f][end];
      links.erase(std::find_if(links.begin(), links.end(), [x](const Link& l) { return l.element == x; }));
    }
    forest_of_[x] = -1;
    --size_[f];
    --placed_;
  }

  /// Elements on the u-v path of forest f, or nullopt if u and v lie in
  /// different trees of f.
  std::optional<std::vector<int>> path(int f, int u, int v) {
    ++clock_;
    std::queue<int> frontier;
    stamp_[u] = clock_;
    via_[u] = -1;
    frontier.push(u);
    bool found = false;
    while (!frontier.empty() && !found) {
      const int a = frontier.front();
      frontier.pop();
      for (const Link& l : adj_[f][a]) {
        if (stamp_[l.to] == clock_) continue;
        stamp_[l.to] = clock_;
        via_[l.to] = l.element;
        if (l.to == v) {
          found = true;
          break;
        }
        frontier.push(l.to);
      }
    }
    if (!found) return std::nullopt;
    std::vector<int> elements;
    for (int w = v; w != u;) {
      const int x = via_[w];
      elements.push_back(x);
      const Edge& e = endpoints(x);
      w = e.u == w ? e.v : e.u;
    }
    return elements;
  }

  void augment(int source) {
    std::vector<int> pred_elem(static_cast<std::size_t>(2 * m_), -1);
    std::vector<bool> seen(static_cast<std::size_t>(2 * m_), false);
    std::queue<int> frontier;
    seen[source] = true;
    frontier.push(source);
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      const Edge& e = endpoints(x);
      for (int f = 0; f < k_; ++f) {
        if (f == forest_of_[x]) continue;
        auto cycle = path(f, e.u, e.v);
        if (!cycle) {
          apply(x, f, source, pred_elem);
          return;
        }
        for (int y : *cycle) {
          if (seen[y]) continue;
          seen[y] = true;
          pred_elem[y] = x;
          frontier.push(y);
        }
      }
    }
  }

  /// x enters forest f; each predecessor takes the slot its successor vacates.
  void apply(int x, int f, int source, const std::vector<int>& pred_elem) {
    int current = x;
    int target = f;
    while (true) {
      const int vacated = forest_of_[current];
      if (vacated >= 0) remove(current);
      insert(target, current);
      if (current == source) break;
      current = pred_elem[current];
      target = vacated;
    }
  }

  const MultiGraph& host_;
  int n_;
  int m_;
  int k_;
  std::vector<std::vector<std::vector<Link>>> adj_;
  std::vector<int> forest_of_;
  std::vector<int> size_;
  long long placed_ = 0;
  std::vector<unsigned> stamp_;
  std::vector<int> via_;
  unsigned clock_ = 0;
};

}  // namespace

TreePacking pack_trees(const MultiGraph& h) {
  if (h.num_vertices() < 2) return {};
  if (!is_connected(h)) throw DisconnectedGraph("tree packing needs a connected host");
  return pack_trees(h, min_cut_value(build_gomory_hu(h)));
}

TreePacking pack_trees(const MultiGraph& h, int num_trees) {
  if (num_trees < 0) throw InvalidArgument("number of trees must be nonnegative");
  TreePacking packing;
  if (num_trees == 0) return packing;
  if (h.num_vertices() < 2) {
    packing.trees.assign(static_cast<std::size_t>(num_trees), {});
    return packing;
  }
  if (!is_connected(h)) throw DisconnectedGraph("tree packing needs a connected host");
  ForestPartition partition(h, num_trees);
  partition.run();
  packing.trees = partition.trees();
  return packing;
}

int max_congestion(const TreePacking& packing, int num_host_edges) {
  std::vector<int> uses(static_cast<std::size_t>(num_host_edges), 0);
  int worst = 0;
  for (const auto& tree : packing.trees) {
    for (int e : tree) worst = std::max(worst, ++uses[static_cast<std::size_t>(e)]);
  }
  return worst;
}

bool is_spanning_tree(int n, std::span<const Edge> tree) {
  if (static_cast<int>(tree.size()) != n - 1) return false;
  DisjointSets sets(n);
  for (const Edge& e : tree) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) return false;
    if (!sets.unite(e.u, e.v)) return false;
  }
  return sets.components() == 1;
}

bool is_spanning_tree(const MultiGraph& host, std::span<const int> tree_edges) {
  std::vector<Edge> edges;
  edges.reserve(tree_edges.size());
  for (int i : tree_edges) {
    if (i < 0 || i >= host.num_edges()) return false;
    edges.push_back(host.edge(i));
  }
  return is_spanning_tree(host.num_vertices(), edges);
}

std::vector<Edge> ExpandedTree::all() const {
  std::vector<Edge> out = original;
  out.insert(out.end(), added.begin(), added.end());
  return out;
}

ExpandedTree expand_tree(std::span<const int> tree_edges_in_g, const ContractionMap& map, const MultiGraph& g) {
  const int n = g.num_vertices();
  if (map.image.size() != static_cast<std::size_t>(n)) {
    throw StructuralError("contraction map does not match the graph's vertex count");
  }
  for (int img : map.image) {
    if (img < 0 || img >= map.num_new) throw StructuralError("contraction map image out of range");
  }
  ExpandedTree out;
  DisjointSets quotient(map.num_new);
  for (int i : tree_edges_in_g) {
    if (i < 0 || i >= g.num_edges()) throw StructuralError("tree edge index out of range");
    const Edge& e = g.edge(i);
    const int a = map.image[e.u];
    const int b = map.image[e.v];
    if (a == b || !quotient.unite(a, b)) throw StructuralError("edges do not form a tree of the quotient");
    out.original.push_back(e);
  }
  if (quotient.components() != 1) throw StructuralError("edges do not span the quotient");
  std::vector<int> anchor(static_cast<std::size_t>(map.num_new), -1);
  for (int v = 0; v < n; ++v) {
    int& a = anchor[map.image[v]];
    if (a < 0) {
      a = v;
    } else {
      out.added.push_back({a, v});
    }
  }
  return out;
}

}  // namespace unrel
