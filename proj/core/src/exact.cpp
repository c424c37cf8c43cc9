#include "unrel/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "unrel/error.hpp"

namespace unrel {
namespace {

using Mask = std::uint32_t;

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("failure probability must lie in [0, 1]");
}

void guard(const MultiGraph& g, int limit, const char* what) {
  if (g.num_vertices() > limit) {
    throw SizeLimitExceeded(std::string(what) + " is limited to n <= " + std::to_string(limit) +
                            " (got n = " + std::to_string(g.num_vertices()) + ")");
  }
}

/// inner[X] = number of edges with both endpoints in vertex subset X.
std::vector<int> inner_edge_counts(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<int> inner(static_cast<std::size_t>(full) + 1, 0);
  for (Mask x = 1; x <= full && x != 0; ++x) {
    const int v = 31 - __builtin_clz(x);
    const Mask rest = x ^ (Mask{1} << v);
    int add = 0;
    for (Mask r = rest; r; r &= r - 1) add += mult[v][__builtin_ctz(r)];
    inner[x] = inner[rest] + add;
  }
  return inner;
}

/// Log of the sum of count * p^k over a histogram indexed by k.
LogWeight histogram_sum(const std::vector<long long>& count_by_value, double p) {
  LogWeight total;
  const double log_p = std::log(p);
  for (std::size_t k = 0; k < count_by_value.size(); ++k) {
    if (count_by_value[k] == 0) continue;
    if (p == 0.0 && k > 0) continue;
    const double term = std::log(static_cast<double>(count_by_value[k])) + (k == 0 ? 0.0 : k * log_p);
    total += LogWeight::from_log(term);
  }
  return total;
}

LogWeight exact_log_u_linear(int n, const std::vector<int>& inner, int m, double p) {
  std::vector<double> pw(static_cast<std::size_t>(m) + 1, 1.0);
  for (int k = 1; k <= m; ++k) pw[k] = pw[k - 1] * p;
  const Mask others = (Mask{1} << (n - 1)) - 1;
  std::vector<double> disc(static_cast<std::size_t>(others) + 1, 0.0);
  for (Mask s = 1; s <= others; ++s) {
    const Mask whole = 1 | (s << 1);
    double sum = 0.0;
    for (Mask t = (s - 1) & s;; t = (t - 1) & s) {
      const Mask part = 1 | (t << 1);
      const Mask rest = (s ^ t) << 1;
      const int crossing = inner[whole] - inner[part] - inner[rest];
      sum += (1.0 - disc[t]) * pw[crossing];
      if (t == 0) break;
    }
    disc[s] = std::min(1.0, sum);
  }
  return LogWeight::from_linear(disc[others]);
}

LogWeight exact_log_u_logspace(int n, const std::vector<int>& inner, double p) {
  const double log_p = std::log(p);
  const double ninf = -std::numeric_limits<double>::infinity();
  const Mask others = (Mask{1} << (n - 1)) - 1;
  std::vector<double> log_disc(static_cast<std::size_t>(others) + 1, ninf);
  std::vector<double> log_conn(static_cast<std::size_t>(others) + 1, 0.0);
  for (Mask s = 1; s <= others; ++s) {
    const Mask whole = 1 | (s << 1);
    auto term = [&](Mask t) {
      const Mask part = 1 | (t << 1);
      const Mask rest = (s ^ t) << 1;
      const int crossing = inner[whole] - inner[part] - inner[rest];
      return log_conn[t] + crossing * log_p;
    };
    double hi = ninf;
    for (Mask t = (s - 1) & s;; t = (t - 1) & s) {
      hi = std::max(hi, term(t));
      if (t == 0) break;
    }
    double acc = 0.0;
    if (hi != ninf) {
      for (Mask t = (s - 1) & s;; t = (t - 1) & s) {
        acc += std::exp(term(t) - hi);
        if (t == 0) break;
      }
    }
    const double ld = hi == ninf ? ninf : std::min(0.0, hi + std::log(acc));
    log_disc[s] = ld;
    log_conn[s] = ld == 0.0 ? ninf : std::log(-std::expm1(ld));
  }
  return LogWeight::from_log(log_disc[others]);
}

}  // namespace

int CutCatalog::min_value() const {
  int best = std::numeric_limits<int>::max();
  for (const CutEntry& c : cuts) best = std::min(best, c.value);
  return best;
}

long long CutCatalog::count_at_most(double bound) const {
  return std::count_if(cuts.begin(), cuts.end(), [&](const CutEntry& c) { return c.value <= bound; });
}

CutCatalog enumerate_cuts(const MultiGraph& g) {
  guard(g, kExactZMaxVertices, "cut enumeration");
  const int n = g.num_vertices();
  CutCatalog catalog;
  if (n < 2) return catalog;
  const auto inner = inner_edge_counts(g);
  const Mask full = (Mask{1} << n) - 1;
  const Mask sides = (Mask{1} << (n - 1)) - 1;
  catalog.cuts.reserve(sides);
  for (Mask s = 1; s <= sides; ++s) {
    const int value = inner[full] - inner[s] - inner[full ^ s];
    catalog.cuts.push_back({CutSide::from_bits(s, n), value});
  }
  return catalog;
}

LogWeight exact_log_u(const MultiGraph& g, double p) {
  check_probability(p);
  guard(g, kExactUMaxVertices, "exact unreliability");
  const int n = g.num_vertices();
  if (n == 1) return LogWeight::zero();
  if (p == 0.0) return is_connected(g) ? LogWeight::zero() : LogWeight::one();
  if (p == 1.0) return LogWeight::one();
  const auto inner = inner_edge_counts(g);
  const double worst_exponent = g.num_edges() * -std::log(p);
  if (worst_exponent < 700.0) return exact_log_u_linear(n, inner, g.num_edges(), p);
  return exact_log_u_logspace(n, inner, p);
}

double exact_u(const MultiGraph& g, double p) { return exact_log_u(g, p).linear(); }

double enumerate_u(const MultiGraph& g, double p) {
  check_probability(p);
  const int m = g.num_edges();
  if (m > 24) throw SizeLimitExceeded("failure-pattern enumeration is limited to m <= 24");
  const int n = g.num_vertices();
  if (n == 1) return 0.0;
  std::vector<double> fail_pw(static_cast<std::size_t>(m) + 1, 1.0);
  std::vector<double> live_pw(static_cast<std::size_t>(m) + 1, 1.0);
  for (int k = 1; k <= m; ++k) {
    fail_pw[k] = fail_pw[k - 1] * p;
    live_pw[k] = live_pw[k - 1] * (1.0 - p);
  }
  const auto edges = g.edges();
  double total = 0.0;
  DisjointSets sets(n);
  for (std::uint32_t alive = 0; alive < (std::uint32_t{1} << m); ++alive) {
    sets.reset(n);
    for (int i = 0; i < m; ++i) {
      if ((alive >> i) & 1U) sets.unite(edges[i].u, edges[i].v);
    }
    if (sets.components() > 1) {
      const int live = __builtin_popcount(alive);
      total += fail_pw[m - live] * live_pw[live];
    }
  }
  return total;
}

LogWeight exact_log_z(const MultiGraph& g, double p) {
  return exact_log_z_restricted(g, p, [](const CutSide&, int) { return true; });
}

double exact_z(const MultiGraph& g, double p) { return exact_log_z(g, p).linear(); }

LogWeight exact_log_z_restricted(const MultiGraph& g, double p, const CutPredicate& keep) {
  check_probability(p);
  guard(g, kExactZMaxVertices, "exact z");
  const int n = g.num_vertices();
  if (n < 2) return LogWeight::zero();
  const auto inner = inner_edge_counts(g);
  const Mask full = (Mask{1} << n) - 1;
  const Mask sides = (Mask{1} << (n - 1)) - 1;
  std::vector<long long> hist(static_cast<std::size_t>(g.num_edges()) + 1, 0);
  for (Mask s = 1; s <= sides; ++s) {
    const int value = inner[full] - inner[s] - inner[full ^ s];
    if (keep(CutSide::from_bits(s, n), value)) ++hist[static_cast<std::size_t>(value)];
  }
  return histogram_sum(hist, p);
}

double exact_z_restricted(const MultiGraph& g, double p, const CutPredicate& keep) {
  return exact_log_z_restricted(g, p, keep).linear();
}

LogWeight exact_log_x(const MultiGraph& g, double p) {
  check_probability(p);
  guard(g, kExactXMaxVertices, "exact x");
  const int n = g.num_vertices();
  if (n < 2) return LogWeight::zero();
  const auto inner = inner_edge_counts(g);
  const Mask full = (Mask{1} << n) - 1;
  const Mask sides = (Mask{1} << (n - 1)) - 1;
  auto crossing = [&](Mask a, Mask b) { return inner[a | b] - inner[a] - inner[b]; };
  std::vector<long long> hist(static_cast<std::size_t>(g.num_edges()) + 1, 0);
  for (Mask s1 = 1; s1 <= sides; ++s1) {
    const int c1 = crossing(s1, full ^ s1);
    for (Mask s2 = 1; s2 <= sides; ++s2) {
      if (s1 == s2) continue;
      const int c2 = crossing(s2, full ^ s2);
      const Mask both = s1 & s2;
      const Mask only1 = s1 & ~s2;
      const Mask only2 = s2 & ~s1;
      const Mask neither = full & ~(s1 | s2);
      const int shared = crossing(both, neither) + crossing(only1, only2);
      ++hist[static_cast<std::size_t>(c1 + c2 - shared)];
    }
  }
  return histogram_sum(hist, p);
}

double exact_x(const MultiGraph& g, double p) { return exact_log_x(g, p).linear(); }

}  // namespace unrel
