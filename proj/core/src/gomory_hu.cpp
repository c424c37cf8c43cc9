#include "unrel/gomory_hu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

#include "unrel/error.hpp"

namespace unrel {

MaxFlow::MaxFlow(const MultiGraph& g) : n_(g.num_vertices()), adj_(static_cast<std::size_t>(n_)) {
  std::map<std::pair<int, int>, int> multiplicity;
  for (const Edge& e : g.edges()) ++multiplicity[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  arcs_.reserve(multiplicity.size() * 2);
  for (const auto& [ends, cap] : multiplicity) {
    adj_[ends.first].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({ends.second, cap});
    adj_[ends.second].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({ends.first, cap});
  }
  original_cap_.reserve(arcs_.size());
  for (const Arc& a : arcs_) original_cap_.push_back(a.cap);
  level_.resize(static_cast<std::size_t>(n_));
  cursor_.resize(static_cast<std::size_t>(n_));
  reachable_.resize(static_cast<std::size_t>(n_));
}

bool MaxFlow::bfs(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> frontier;
  level_[s] = 0;
  frontier.push(s);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    if (v == t) break;
    for (int a : adj_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[v] + 1;
        frontier.push(arc.to);
      }
    }
  }
  return level_[t] >= 0;
}

int MaxFlow::dfs(int v, int t, int pushed) {
  if (v == t) return pushed;
  for (std::size_t& i = cursor_[v]; i < adj_[v].size(); ++i) {
    const int a = adj_[v][i];
    Arc& arc = arcs_[a];
    if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
    const int got = dfs(arc.to, t, std::min(pushed, arc.cap));
    if (got > 0) {
      arc.cap -= got;
      arcs_[a ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

int MaxFlow::run(int s, int t) {
  if (s < 0 || t < 0 || s >= n_ || t >= n_ || s == t) throw InvalidArgument("max-flow needs distinct terminals");
  for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = original_cap_[i];
  int flow = 0;
  while (bfs(s, t)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) flow += pushed;
  }
  std::fill(reachable_.begin(), reachable_.end(), false);
  std::queue<int> frontier;
  reachable_[s] = true;
  frontier.push(s);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int a : adj_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.cap > 0 && !reachable_[arc.to]) {
        reachable_[arc.to] = true;
        frontier.push(arc.to);
      }
    }
  }
  return flow;
}

std::vector<Edge> GomoryHuTree::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < num_vertices(); ++v) {
    if (parent[v] >= 0) out.push_back({v, parent[v]});
  }
  return out;
}

std::vector<int> GomoryHuTree::edge_weights() const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v) {
    if (parent[v] >= 0) out.push_back(weight[v]);
  }
  return out;
}

std::vector<int> GomoryHuTree::sorted_weights() const {
  auto w = edge_weights();
  std::sort(w.begin(), w.end());
  return w;
}

int GomoryHuTree::path_min(int s, int t) const {
  if (s == t) throw InvalidArgument("path_min needs distinct vertices");
  const int n = num_vertices();
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  auto depth_of = [&](auto&& self, int v) -> int {
    if (depth[v] >= 0) return depth[v];
    return depth[v] = parent[v] < 0 ? 0 : self(self, parent[v]) + 1;
  };
  int a = s;
  int b = t;
  int best = std::numeric_limits<int>::max();
  int da = depth_of(depth_of, a);
  int db = depth_of(depth_of, b);
  while (a != b) {
    if (da >= db) {
      best = std::min(best, weight[a]);
      a = parent[a];
      --da;
    } else {
      best = std::min(best, weight[b]);
      b = parent[b];
      --db;
    }
  }
  return best;
}

GomoryHuTree build_gomory_hu(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n < 2) throw InvalidArgument("Gomory-Hu tree needs at least two vertices");
  if (!is_connected(g)) throw DisconnectedGraph("Gomory-Hu tree needs a connected graph");
  GomoryHuTree tree;
  tree.parent.assign(static_cast<std::size_t>(n), 0);
  tree.weight.assign(static_cast<std::size_t>(n), 0);
  tree.parent[0] = -1;
  MaxFlow flow(g);
  for (int s = 1; s < n; ++s) {
    const int t = tree.parent[s];
    tree.weight[s] = flow.run(s, t);
    const auto& side = flow.source_side();
    for (int v = s + 1; v < n; ++v) {
      if (side[v] && tree.parent[v] == t) tree.parent[v] = s;
    }
  }
  return tree;
}

int min_cut_value(const GomoryHuTree& tree) {
  const auto w = tree.edge_weights();
  if (w.empty()) throw InvalidArgument("tree has no edges");
  return *std::min_element(w.begin(), w.end());
}

double gamma(const GomoryHuTree& tree) {
  const int n = tree.num_vertices();
  if (n < 2) throw InvalidArgument("gamma needs n >= 2");
  const auto w = tree.sorted_weights();
  const int k = std::min(static_cast<int>(std::ceil(n * std::exp2(-2.0 / 3.0) - 1e-9)), n - 1);
  double s_k = 0.0;
  for (int i = 0; i < k; ++i) s_k += w[i];
  return std::min(static_cast<double>(w.front()), 0.75 * s_k / k);
}

int tau_rank(int n) {
  int r = 0;
  while (r * r < n) ++r;
  return std::max(1, std::min(r, n - 1));
}

TauContraction tau_and_contract(const MultiGraph& g, const GomoryHuTree& tree) {
  const int n = g.num_vertices();
  if (tree.num_vertices() != n) throw StructuralError("tree and graph disagree on the vertex count");
  TauContraction out;
  if (n < 2) {
    out.map = ContractionMap::identity(n);
    out.graph = g;
    out.tree = tree;
    return out;
  }
  const auto sorted = tree.sorted_weights();
  out.tau = sorted[static_cast<std::size_t>(tau_rank(n) - 1)];

  DisjointSets sets(n);
  for (int v = 0; v < n; ++v) {
    if (tree.parent[v] >= 0 && tree.weight[v] >= out.tau) sets.unite(v, tree.parent[v]);
  }
  ContractionMap map;
  map.image.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> root_id(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int r = sets.find(v);
    if (root_id[r] < 0) root_id[r] = map.num_new++;
    map.image[v] = root_id[r];
  }
  Contraction quotient = contract(g, map);
  out.graph = std::move(quotient.graph);
  out.edge_origin = std::move(quotient.edge_origin);
  out.map = map;

  const int k = map.num_new;
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(k));
  for (int v = 0; v < n; ++v) {
    if (tree.parent[v] >= 0 && tree.weight[v] < out.tau) {
      const int a = map.image[v];
      const int b = map.image[tree.parent[v]];
      adj[a].push_back({b, tree.weight[v]});
      adj[b].push_back({a, tree.weight[v]});
    }
  }
  out.tree.parent.assign(static_cast<std::size_t>(k), -1);
  out.tree.weight.assign(static_cast<std::size_t>(k), 0);
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  std::queue<int> frontier;
  seen[0] = true;
  frontier.push(0);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (auto [w, wt] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      out.tree.parent[w] = v;
      out.tree.weight[w] = wt;
      frontier.push(w);
    }
  }
  return out;
}

}  // namespace unrel
