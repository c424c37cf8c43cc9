#include "unrel/monte_carlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>
#include <vector>

#include "unrel/error.hpp"
#include "unrel/gomory_hu.hpp"

namespace unrel {
namespace {

void check_accuracy(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("failure probability must lie in [0, 1]");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

double bernoulli_rel_variance(std::uint64_t hits, std::uint64_t rounds) {
  if (hits == 0 || rounds < 2) return 0.0;
  const double n = static_cast<double>(rounds);
  const double mean = static_cast<double>(hits) / n;
  return std::max(0.0, (1.0 - mean) / mean * n / (n - 1.0));
}

}  // namespace

bool naive_round(const MultiGraph& g, double p, Rng& rng) {
  if (g.num_vertices() <= 1) return false;
  DisjointSets sets(g.num_vertices());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const Edge& e : g.edges()) {
    if (unit(rng) >= p && sets.unite(e.u, e.v) && sets.components() == 1) return false;
  }
  return sets.components() > 1;
}

std::uint64_t detector_target(double eps, double delta) {
  check_accuracy(eps, delta);
  return static_cast<std::uint64_t>(std::ceil(4.0 * std::log(2.0 / delta) / (eps * eps) - 1e-9));
}

std::uint64_t detector_budget(int n, double eps, double delta) {
  const double lg = std::log2(static_cast<double>(std::max(n, 2)));
  return static_cast<std::uint64_t>(std::ceil(static_cast<double>(detector_target(eps, delta)) * lg * lg * lg - 1e-9));
}

DetectorOutcome inverse_binomial(const MultiGraph& g, double p, std::uint64_t target, std::uint64_t budget,
                                 std::uint64_t seed, int workers) {
  check_probability(p);
  DetectorOutcome out;
  out.target = target;
  out.budget = budget;
  if (target == 0) {
    out.fired = true;
    return out;
  }
  if (workers <= 0) workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const std::uint64_t total_chunks = (budget + kSampleChunk - 1) / kSampleChunk;
  const std::uint64_t batch = 16 * static_cast<std::uint64_t>(workers);
  std::vector<std::uint64_t> masks;
  for (std::uint64_t first = 0; first < total_chunks; first += batch) {
    const std::uint64_t count = std::min(batch, total_chunks - first);
    masks.assign(count, 0);
    parallel_for(count, workers, [&](std::uint64_t i) {
      const std::uint64_t c = first + i;
      Rng rng = make_rng(seed, c);
      const std::uint64_t rounds = std::min(kSampleChunk, budget - c * kSampleChunk);
      std::uint64_t mask = 0;
      for (std::uint64_t r = 0; r < rounds; ++r) {
        if (naive_round(g, p, rng)) mask |= std::uint64_t{1} << r;
      }
      masks[i] = mask;
    });
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t c = first + i;
      const std::uint64_t rounds = std::min(kSampleChunk, budget - c * kSampleChunk);
      const auto hits = static_cast<std::uint64_t>(__builtin_popcountll(masks[i]));
      if (out.successes + hits < target) {
        out.successes += hits;
        out.rounds += rounds;
        continue;
      }
      for (std::uint64_t r = 0; r < rounds; ++r) {
        ++out.rounds;
        if ((masks[i] >> r) & 1U) ++out.successes;
        if (out.successes == target) break;
      }
      out.fired = true;
      break;
    }
    if (out.fired) break;
  }
  out.estimate = out.rounds == 0
                     ? LogWeight::zero()
                     : LogWeight::from_linear(static_cast<double>(out.successes) / static_cast<double>(out.rounds));
  return out;
}

DetectorOutcome detect_unreliable(const MultiGraph& g, double p, double eps, double delta, std::uint64_t seed,
                                  int workers) {
  return inverse_binomial(g, p, detector_target(eps, delta), detector_budget(g.num_vertices(), eps, delta), seed,
                          workers);
}

EstimateReport naive_estimate(const MultiGraph& g, double p, std::uint64_t target, std::uint64_t budget,
                              std::uint64_t seed, int workers) {
  const auto start = std::chrono::steady_clock::now();
  const DetectorOutcome d = inverse_binomial(g, p, target, budget, seed, workers);
  EstimateReport report;
  report.estimate = d.estimate;
  report.samples = d.rounds;
  report.rel_variance_hat = bernoulli_rel_variance(d.successes, d.rounds);
  report.method = "naive";
  report.seed = seed;
  report.wall_ms = elapsed_ms(start);
  return report;
}

double two_step_q(double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("two-step MC needs lambda > 0");
  return std::exp2(-1.0 / lambda);
}

int two_step_inner_rounds(int n) {
  int r = 0;
  while (static_cast<long long>(r) * r < n) ++r;
  return std::max(1, r);
}

LogWeight two_step_sample(const MultiGraph& g, double p, double q, int inner, Rng& rng) {
  if (!(q > p && q <= 1.0)) throw InvalidArgument("two-step MC needs p < q <= 1");
  if (inner < 1) throw InvalidArgument("two-step MC needs at least one inner round");
  const Contraction h = sample_contraction(g, q, rng);
  const int n = h.graph.num_vertices();
  if (n <= 1) return LogWeight::zero();
  const int m = h.graph.num_edges();
  const auto edges = h.graph.edges();
  std::binomial_distribution<int> survivors(m, 1.0 - p / q);
  std::vector<int> order(static_cast<std::size_t>(m));
  std::vector<unsigned> stamp(static_cast<std::size_t>(m), 0);
  DisjointSets sets(n);
  int disconnected = 0;
  for (int round = 1; round <= inner; ++round) {
    const int k = survivors(rng);
    sets.reset(n);
    if (k > m / 2) {
      std::iota(order.begin(), order.end(), 0);
      for (int i = 0; i < k && sets.components() > 1; ++i) {
        const int j = std::uniform_int_distribution<int>(i, m - 1)(rng);
        std::swap(order[i], order[j]);
        sets.unite(edges[order[i]].u, edges[order[i]].v);
      }
    } else {
      std::uniform_int_distribution<int> pick(0, m - 1);
      for (int chosen = 0; chosen < k && sets.components() > 1;) {
        const int e = pick(rng);
        if (stamp[e] == static_cast<unsigned>(round)) continue;
        stamp[e] = static_cast<unsigned>(round);
        ++chosen;
        sets.unite(edges[e].u, edges[e].v);
      }
    }
    if (sets.components() > 1) ++disconnected;
  }
  return LogWeight::from_linear(static_cast<double>(disconnected) / inner);
}

EstimateReport two_step_estimate(const MultiGraph& g, double p, std::uint64_t outer, std::uint64_t seed,
                                 int workers, int lambda) {
  check_probability(p);
  const auto start = std::chrono::steady_clock::now();
  if (lambda <= 0) lambda = min_cut_value(build_gomory_hu(g));
  const double q = two_step_q(lambda);
  const int inner = two_step_inner_rounds(g.num_vertices());
  const LogAccumulator acc = draw_samples([&](Rng& rng) { return two_step_sample(g, p, q, inner, rng); }, outer,
                                          seed, workers);
  EstimateReport report;
  report.estimate = acc.mean();
  report.samples = acc.count();
  report.rel_variance_hat = acc.rel_variance();
  report.method = "two-step";
  report.seed = seed;
  report.wall_ms = elapsed_ms(start);
  return report;
}

std::uint64_t median_groups(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(8.0 * std::log(1.0 / delta) - 1e-9)));
}

std::uint64_t median_group_size(double eta_bound, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("eps must lie in (0, 1)");
  if (!(eta_bound >= 0.0)) throw InvalidArgument("eta bound must be nonnegative");
  return std::max<std::uint64_t>(1,
                                 static_cast<std::uint64_t>(std::ceil(4.0 * (eta_bound + 1.0) / (eps * eps) - 1e-9)));
}

MedianOfAverages median_of_averages(const Sampler& sampler, double eta_bound, double eps, double delta,
                                    std::uint64_t seed, int workers) {
  check_accuracy(eps, delta);
  MedianOfAverages out;
  out.groups = median_groups(delta);
  out.group_size = median_group_size(eta_bound, eps);
  std::vector<LogWeight> means;
  LogAccumulator pooled;
  for (std::uint64_t k = 0; k < out.groups; ++k) {
    const LogAccumulator acc = draw_samples(sampler, out.group_size, derive_seed(seed, k), workers);
    means.push_back(acc.mean());
    pooled.merge(acc);
  }
  std::sort(means.begin(), means.end());
  out.estimate = means[(means.size() - 1) / 2];
  out.samples = pooled.count();
  out.rel_variance_hat = pooled.rel_variance();
  return out;
}

}  // namespace unrel
