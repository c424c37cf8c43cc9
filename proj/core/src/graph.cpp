#include "unrel/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "unrel/error.hpp"

namespace unrel {

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw InvalidArgument("graph needs at least one vertex");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InvalidArgument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                            std::to_string(e.v));
    }
    if (e.u != e.v) edges_.push_back(e);
  }
}

ContractionMap ContractionMap::identity(int n) {
  ContractionMap map;
  map.image.resize(static_cast<std::size_t>(n));
  std::iota(map.image.begin(), map.image.end(), 0);
  map.num_new = n;
  return map;
}

CutSide CutSide::from_bits(std::uint64_t bits, int n) {
  std::vector<bool> membership(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) membership[static_cast<std::size_t>(v)] = (bits >> v) & 1U;
  return CutSide(std::move(membership));
}

bool CutSide::is_proper() const {
  const auto in = std::count(membership_.begin(), membership_.end(), true);
  return in > 0 && in < static_cast<long>(membership_.size());
}

bool is_connected(const MultiGraph& g, const EdgeMask& alive) {
  if (alive.size() != static_cast<std::size_t>(g.num_edges())) {
    throw InvalidArgument("edge mask length does not match edge count");
  }
  DisjointSets sets(g.num_vertices());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size() && sets.components() > 1; ++i) {
    if (alive[i]) sets.unite(edges[i].u, edges[i].v);
  }
  return sets.components() == 1;
}

bool is_connected(const MultiGraph& g) {
  return is_connected(g, EdgeMask(static_cast<std::size_t>(g.num_edges()), true));
}

Contraction contract(const MultiGraph& g, const ContractionMap& map) {
  if (map.image.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw StructuralError("contraction map size does not match vertex count");
  }
  for (int img : map.image) {
    if (img < 0 || img >= map.num_new) throw StructuralError("contraction map image out of range");
  }
  Contraction out;
  out.map = map;
  std::vector<Edge> edges;
  const auto all = g.edges();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int a = map.image[static_cast<std::size_t>(all[i].u)];
    const int b = map.image[static_cast<std::size_t>(all[i].v)];
    if (a == b) continue;
    edges.push_back({a, b});
    out.edge_origin.push_back(static_cast<int>(i));
  }
  out.graph = MultiGraph(std::max(map.num_new, 1), std::move(edges));
  return out;
}

Contraction contract(const MultiGraph& g, const EdgeMask& merge) {
  if (merge.size() != static_cast<std::size_t>(g.num_edges())) {
    throw InvalidArgument("edge mask length does not match edge count");
  }
  const int n = g.num_vertices();
  DisjointSets sets(n);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (merge[i]) sets.unite(edges[i].u, edges[i].v);
  }
  ContractionMap map;
  map.image.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> root_id(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int r = sets.find(v);
    if (root_id[static_cast<std::size_t>(r)] < 0) root_id[static_cast<std::size_t>(r)] = map.num_new++;
    map.image[static_cast<std::size_t>(v)] = root_id[static_cast<std::size_t>(r)];
  }
  return contract(g, map);
}

Contraction sample_contraction(const MultiGraph& g, double q, Rng& rng) {
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidArgument("contraction survival q must lie in [0, 1]");
  EdgeMask merge(static_cast<std::size_t>(g.num_edges()), false);
  std::bernoulli_distribution contract_edge(1.0 - q);
  for (std::size_t i = 0; i < merge.size(); ++i) merge[i] = contract_edge(rng);
  return contract(g, merge);
}

int cut_value(const MultiGraph& g, const CutSide& side) {
  if (side.size() != g.num_vertices()) throw InvalidArgument("cut side length does not match vertex count");
  if (!side.is_proper()) throw InvalidArgument("cut side must be nonempty and not the whole vertex set");
  int value = 0;
  for (const Edge& e : g.edges()) value += side.separates(e.u, e.v) ? 1 : 0;
  return value;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

MultiGraph make_cycle(int n, int copies) {
  require(n >= 3, "cycle needs n >= 3");
  require(copies >= 1, "parallel multiplicity must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < copies; ++c) edges.push_back({i, (i + 1) % n});
  }
  return MultiGraph(n, std::move(edges));
}

MultiGraph make_gnm(const GeneratorParams& p) {
  require(p.n >= 1, "gnm needs n >= 1");
  require(p.m >= 0, "gnm needs m >= 0");
  const long long pairs = static_cast<long long>(p.n) * (p.n - 1) / 2;
  if (p.simple) require(p.m <= pairs, "gnm: m exceeds the number of vertex pairs of a simple graph");
  if (p.connected) require(p.m >= p.n - 1, "gnm: a connected graph needs m >= n - 1");
  if (p.n == 1) {
    require(p.m == 0, "gnm: a single vertex admits no edges");
    return MultiGraph(1, {});
  }
  Rng rng(p.seed);
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> used;
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
    used.insert({a, b});
  };
  if (p.connected) {
    std::vector<int> order(static_cast<std::size_t>(p.n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < p.n; ++i) {
      std::uniform_int_distribution<int> pick(0, i - 1);
      add(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(pick(rng))]);
    }
  }
  std::uniform_int_distribution<int> vertex(0, p.n - 1);
  while (static_cast<int>(edges.size()) < p.m) {
    int a = vertex(rng);
    int b = vertex(rng);
    if (a == b) continue;
    if (p.simple && used.count({std::min(a, b), std::max(a, b)})) continue;
    add(a, b);
  }
  return MultiGraph(p.n, std::move(edges));
}

}  // namespace

MultiGraph generate(std::string_view family, const GeneratorParams& p) {
  if (family == "cycle") return make_cycle(p.n, 1);
  if (family == "parallel_cycle") return make_cycle(p.n, p.k);
  if (family == "leaf_cycle") {
    require(p.n >= 4, "leaf_cycle needs n >= 4 (a cycle of at least 3 plus the leaf)");
    require(p.lambda >= 1, "leaf_cycle needs lambda >= 1");
    // Cycle edges carry lambda/2 + 1 copies so the leaf's lambda edges form the unique min cut.
    MultiGraph ring = make_cycle(p.n - 1, p.lambda / 2 + 1);
    std::vector<Edge> edges(ring.edges().begin(), ring.edges().end());
    for (int c = 0; c < p.lambda; ++c) edges.push_back({0, p.n - 1});
    return MultiGraph(p.n, std::move(edges));
  }
  if (family == "complete") {
    require(p.n >= 2, "complete needs n >= 2");
    require(p.k >= 1, "parallel multiplicity must be >= 1");
    std::vector<Edge> edges;
    for (int a = 0; a < p.n; ++a) {
      for (int b = a + 1; b < p.n; ++b) {
        for (int c = 0; c < p.k; ++c) edges.push_back({a, b});
      }
    }
    return MultiGraph(p.n, std::move(edges));
  }
  if (family == "gnm") return make_gnm(p);
  if (family == "dumbbell") {
    require(p.n >= 4 && p.n % 2 == 0, "dumbbell needs an even n >= 4");
    require(p.k >= 1, "dumbbell needs at least one bridge edge");
    const int half = p.n / 2;
    std::vector<Edge> edges;
    for (int side = 0; side < 2; ++side) {
      const int base = side * half;
      for (int a = 0; a < half; ++a) {
        for (int b = a + 1; b < half; ++b) edges.push_back({base + a, base + b});
      }
    }
    for (int i = 0; i < p.k; ++i) edges.push_back({i % half, half + i % half});
    return MultiGraph(p.n, std::move(edges));
  }
  if (family == "two_vertex") {
    require(p.k >= 1, "two_vertex needs k >= 1 parallel edges");
    return MultiGraph(2, std::vector<Edge>(static_cast<std::size_t>(p.k), Edge{0, 1}));
  }
  throw InvalidArgument("unknown graph family: " + std::string(family));
}

MultiGraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      const auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  if (!next_content_line(line)) throw ParseError("empty graph file");
  long long n = 0;
  long long m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) fail("expected header \"n m\"");
  }
  if (n < 1) fail("vertex count must be >= 1");
  if (m < 0) fail("edge count must be >= 0");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(line)) fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    std::istringstream row(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) fail("expected edge \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("edge endpoint out of range");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (next_content_line(line)) fail("trailing content after the last edge");
  return MultiGraph(static_cast<int>(n), std::move(edges));
}

MultiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_string(const MultiGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace unrel
