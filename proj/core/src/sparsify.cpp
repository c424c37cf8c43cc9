#include "unrel/sparsify.hpp"

#include <algorithm>
#include <cmath>

#include "unrel/error.hpp"

namespace unrel {

double skeleton_probability(int n, int lambda, double delta, double c_alpha) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("sparsification delta must lie in (0, 1)");
  if (lambda < 1) throw InvalidArgument("sparsification needs min-cut value >= 1");
  if (n < 2) return 1.0;
  return std::min(1.0, c_alpha * std::log(static_cast<double>(n)) / (delta * delta * lambda));
}

SparsifyOutcome skeleton(const MultiGraph& g, int lambda, double delta, Rng& rng, double c_alpha) {
  SparsifyOutcome out;
  out.delta = delta;
  out.alpha = skeleton_probability(g.num_vertices(), lambda, delta, c_alpha);
  if (out.alpha >= 1.0) {
    out.h = g;
    out.kept.resize(static_cast<std::size_t>(g.num_edges()));
    for (int i = 0; i < g.num_edges(); ++i) out.kept[i] = i;
    return out;
  }
  std::bernoulli_distribution keep(out.alpha);
  std::vector<Edge> edges;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (keep(rng)) {
      out.kept.push_back(i);
      edges.push_back(g.edge(i));
    }
  }
  out.h = MultiGraph(g.num_vertices(), std::move(edges));
  return out;
}

double default_sparsify_delta(int n) {
  if (n <= 2) return 0.5;
  return std::min(0.5, 1.0 / std::log2(static_cast<double>(n)));
}

double reparam_q(double p, double alpha) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("failure probability must lie in [0, 1]");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("sampling probability must lie in (0, 1]");
  if (alpha >= 1.0) return p;
  const double survive = (1.0 - p) / alpha;
  if (survive > 1.0) {
    throw InfeasibleReparametrization("alpha < 1 - p: no q satisfies 1 - q = (1 - p) / alpha");
  }
  return 1.0 - survive;
}

}  // namespace unrel
