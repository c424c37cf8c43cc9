#include "unrel/importance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>

#include "unrel/error.hpp"

namespace unrel {
namespace {

constexpr int kSparsifyAttempts = 8;

struct HostPacking {
  /// Trees as edge indices of the packed host.
  std::vector<std::vector<int>> trees;
  double alpha = 1.0;
  bool fallback = false;
};

/// Skeleton of `host` packed into lambda(skeleton) trees, reported back as
/// host edge indices. A skeleton that keeps disconnecting is replaced by the
/// host itself.
HostPacking sparsified_packing(const MultiGraph& host, int lambda, double delta, double c_alpha, Rng& rng) {
  HostPacking out;
  for (int attempt = 0; attempt < kSparsifyAttempts; ++attempt) {
    SparsifyOutcome sk = skeleton(host, lambda, delta, rng, c_alpha);
    out.alpha = sk.alpha;
    if (sk.alpha >= 1.0) {
      out.trees = pack_trees(host, lambda).trees;
      return out;
    }
    if (!is_connected(sk.h)) continue;
    for (auto& tree : pack_trees(sk.h).trees) {
      for (int& e : tree) e = sk.kept[static_cast<std::size_t>(e)];
      out.trees.push_back(std::move(tree));
    }
    return out;
  }
  out.alpha = 1.0;
  out.fallback = true;
  out.trees = pack_trees(host, lambda).trees;
  return out;
}

std::vector<Edge> edges_of(const MultiGraph& g, const std::vector<int>& ids) {
  std::vector<Edge> out;
  out.reserve(ids.size());
  for (int i : ids) out.push_back(g.edge(i));
  return out;
}

int crossing(const std::vector<Edge>& edges, const CutSide& cut) {
  int c = 0;
  for (const Edge& e : edges) c += cut.separates(e.u, e.v) ? 1 : 0;
  return c;
}

/// q(C) from the intersection sizes with every main tree and with the two
/// edge classes of every contracted tree.
template <typename MainCount, typename PrimeCount>
double mixture_probability(const SamplerContext& ctx, MainCount&& main_count, PrimeCount&& prime_count) {
  double main = 0.0;
  for (std::size_t t = 0; t < ctx.main.size(); ++t) {
    const int a = main_count(t);
    if (a >= 1 && a <= kMaxRespect) main += ctx.coef[static_cast<std::size_t>(a)];
  }
  main /= static_cast<double>(ctx.main.size());
  double prime = 0.0;
  if (ctx.q1_active) {
    const double denom = static_cast<double>(ctx.n_prime - 1) * (ctx.n_prime - 1);
    for (std::size_t t = 0; t < ctx.prime.size(); ++t) {
      const auto [b, joins] = prime_count(t);
      if (joins == 0 && (b == 1 || b == 2)) prime += b / denom;
    }
    prime /= static_cast<double>(ctx.prime.size());
  }
  return (main + prime) / ctx.mixture_size();
}

PreparedTree prepare(std::vector<Edge> edges, int sample_edges, const SamplerContext& ctx,
                     const std::vector<std::vector<Edge>>& main_edges,
                     const std::vector<std::vector<Edge>>& prime_edges,
                     const std::vector<std::vector<Edge>>& join_edges) {
  PreparedTree t;
  t.edges = std::move(edges);
  t.sample_edges = sample_edges;
  t.labeling = build_labeling(ctx.n, t.edges);
  t.in_g = build_range_index(ctx.g, t.labeling);
  for (const auto& host : main_edges) t.in_main.push_back(build_range_index(host, t.labeling));
  for (const auto& host : prime_edges) t.in_prime.push_back(build_range_index(host, t.labeling));
  for (const auto& host : join_edges) t.in_joins.push_back(build_range_index(host, t.labeling));
  return t;
}

struct RawDraw {
  int j = 0;
  int tree = 0;
  int picks[kMaxRespect] = {};
  int count = 0;
};

RawDraw raw_draw(const SamplerContext& ctx, Rng& rng) {
  RawDraw d;
  const int first = ctx.q1_active ? 1 : 2;
  d.j = std::uniform_int_distribution<int>(first, kMaxRespect)(rng);
  const auto& pool = d.j == 1 ? ctx.prime : ctx.main;
  d.tree = std::uniform_int_distribution<int>(0, static_cast<int>(pool.size()) - 1)(rng);
  const PreparedTree& t = pool[static_cast<std::size_t>(d.tree)];
  d.count = d.j == 1 ? 2 : d.j;
  std::uniform_int_distribution<int> pick(0, t.sample_edges - 1);
  for (int i = 0; i < d.count; ++i) d.picks[i] = pick(rng);
  return d;
}

/// Cut value in g and q(C) of a raw draw, through the range indices.
std::pair<int, double> evaluate(const SamplerContext& ctx, const RawDraw& d) {
  const PreparedTree& t = (d.j == 1 ? ctx.prime : ctx.main)[static_cast<std::size_t>(d.tree)];
  const ChiIntervals cut(std::span<const int>(d.picks, static_cast<std::size_t>(d.count)), t.labeling);
  const int value = cut.value_in(t.in_g);
  const double q = mixture_probability(
      ctx, [&](std::size_t k) { return cut.value_in(t.in_main[k]); },
      [&](std::size_t k) {
        const int b = cut.value_in(t.in_prime[k]);
        const int joins = b >= 1 && b <= 2 ? cut.value_in(t.in_joins[k]) : 0;
        return std::pair<int, int>{b, joins};
      });
  return {value, q};
}

}  // namespace

long long stirling2(int j, int alpha) {
  if (j < 1 || j > kMaxRespect || alpha < 1 || alpha > kMaxRespect) {
    throw InvalidArgument("Stirling table covers 1 <= j, alpha <= 7");
  }
  static const auto table = [] {
    std::array<std::array<long long, kMaxRespect + 1>, kMaxRespect + 1> s{};
    s[0][0] = 1;
    for (int a = 1; a <= kMaxRespect; ++a) {
      for (int b = 1; b <= a; ++b) s[a][b] = b * s[a - 1][b] + s[a - 1][b - 1];
    }
    return s;
  }();
  return table[j][alpha];
}

SamplerContext build_context(const MultiGraph& g, double p, Rng& rng, const ImportanceOptions& options,
                             const GomoryHuTree* tree) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("failure probability must lie in (0, 1)");
  if (g.num_vertices() < 2) throw InvalidArgument("importance sampling needs n >= 2");
  std::optional<GomoryHuTree> own;
  if (!tree) tree = &own.emplace(build_gomory_hu(g));

  SamplerContext ctx;
  ctx.g = g;
  ctx.p = p;
  ctx.n = g.num_vertices();
  ctx.lambda = min_cut_value(*tree);
  const double delta = default_sparsify_delta(ctx.n);

  HostPacking main = sparsified_packing(g, ctx.lambda, delta, options.c_alpha, rng);
  ctx.alpha = main.alpha;
  ctx.sparsify_fallback = main.fallback;
  std::vector<std::vector<Edge>> main_edges;
  for (const auto& t : main.trees) main_edges.push_back(edges_of(g, t));

  std::vector<std::vector<Edge>> prime_edges;
  std::vector<std::vector<Edge>> join_edges;
  TauContraction tc = tau_and_contract(g, *tree);
  ctx.tau = tc.tau;
  ctx.n_prime = tc.graph.num_vertices();
  if (!tc.degenerate()) {
    const int lambda_prime = min_cut_value(build_gomory_hu(tc.graph));
    HostPacking prime = sparsified_packing(tc.graph, lambda_prime, delta, options.c_alpha, rng);
    ctx.alpha_prime = prime.alpha;
    ctx.sparsify_fallback = ctx.sparsify_fallback || prime.fallback;
    for (auto& t : prime.trees) {
      for (int& e : t) e = tc.edge_origin[static_cast<std::size_t>(e)];
      ExpandedTree ex = expand_tree(t, tc.map, g);
      prime_edges.push_back(std::move(ex.original));
      join_edges.push_back(std::move(ex.added));
    }
    ctx.q1_active = true;
  }

  ctx.coef.assign(kMaxRespect + 1, 0.0);
  for (int a = 1; a <= kMaxRespect; ++a) {
    double fact = 1.0;
    for (int i = 2; i <= a; ++i) fact *= i;
    for (int j = std::max(2, a); j <= kMaxRespect; ++j) {
      ctx.coef[a] += fact * static_cast<double>(stirling2(j, a)) / std::pow(ctx.n - 1.0, j);
    }
  }

  for (const auto& edges : main_edges) {
    ctx.main.push_back(prepare(edges, ctx.n - 1, ctx, main_edges, prime_edges, join_edges));
  }
  for (std::size_t t = 0; t < prime_edges.size(); ++t) {
    std::vector<Edge> all = prime_edges[t];
    all.insert(all.end(), join_edges[t].begin(), join_edges[t].end());
    ctx.prime.push_back(prepare(std::move(all), ctx.n_prime - 1, ctx, main_edges, prime_edges, join_edges));
  }
  return ctx;
}

double q_weight(const SamplerContext& ctx, const CutSide& cut) {
  if (cut.size() != ctx.n) throw InvalidArgument("cut side does not match the graph's vertex count");
  const double q = mixture_probability(
      ctx, [&](std::size_t k) { return crossing(ctx.main[k].edges, cut); },
      [&](std::size_t k) {
        const PreparedTree& t = ctx.prime[k];
        const std::vector<Edge> pulled(t.edges.begin(), t.edges.begin() + t.sample_edges);
        const std::vector<Edge> joins(t.edges.begin() + t.sample_edges, t.edges.end());
        return std::pair<int, int>{crossing(pulled, cut), crossing(joins, cut)};
      });
  return q;
}

ImportanceDraw draw_cut(const SamplerContext& ctx, Rng& rng) {
  const RawDraw d = raw_draw(ctx, rng);
  ImportanceDraw out;
  out.j = d.j;
  out.tree = d.tree;
  out.chi.assign(d.picks, d.picks + d.count);
  std::sort(out.chi.begin(), out.chi.end());
  out.chi.erase(std::unique(out.chi.begin(), out.chi.end()), out.chi.end());
  std::tie(out.cut_value, out.q) = evaluate(ctx, d);
  return out;
}

LogWeight sample_once(const SamplerContext& ctx, Rng& rng) {
  const auto [value, q] = evaluate(ctx, raw_draw(ctx, rng));
  if (!(q > 0.0)) throw StructuralError("sampled cut has zero mixture probability");
  return LogWeight::from_log(value * std::log(ctx.p) - std::log(q));
}

std::uint64_t default_importance_samples(int n, double c_is) {
  const double lg = std::log2(static_cast<double>(std::max(n, 2)));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(c_is * std::pow(n, 1.5) * lg * lg)));
}

EstimateReport importance_estimate(const SamplerContext& ctx, std::uint64_t n_samples, std::uint64_t seed,
                                   int workers) {
  const auto start = std::chrono::steady_clock::now();
  const LogAccumulator acc = draw_samples([&](Rng& rng) { return sample_once(ctx, rng); }, n_samples, seed, workers);
  EstimateReport report;
  report.estimate = acc.mean();
  report.samples = acc.count();
  report.rel_variance_hat = acc.rel_variance();
  report.method = "importance";
  report.seed = seed;
  report.q1_active = ctx.q1_active;
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

EstimateReport importance_estimate(const MultiGraph& g, double p, std::uint64_t n_samples, std::uint64_t seed,
                                   int workers, const ImportanceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng = make_rng(seed, 0);
  const SamplerContext ctx = build_context(g, p, rng, options);
  if (n_samples == 0) n_samples = default_importance_samples(g.num_vertices(), options.c_is);
  EstimateReport report = importance_estimate(ctx, n_samples, derive_seed(seed, 1), workers);
  report.seed = seed;
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace unrel
