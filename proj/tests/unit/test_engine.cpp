#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "unrel/error.hpp"
#include "unrel/exact.hpp"
#include "unrel/engine.hpp"
#include "unrel/gomory_hu.hpp"
#include "unrel/monte_carlo.hpp"

using namespace unrel;

namespace {

EngineConfig quick(int base_n) {
  EngineConfig cfg;
  cfg.base_n = base_n;
  return cfg;
}

bool is_leaf_method(const std::string& m) {
  return m == "exact" || m == "naive-mc" || m == "two-step-mc" || m == "importance";
}

void check_trace(const TraceNode& t) {
  if (t.children.empty()) {
    CHECK(is_leaf_method(t.method));
    return;
  }
  CHECK((t.method == "contraction" || t.method == "sparsify"));
  CHECK(t.children.size() == 2);
  for (const TraceNode& c : t.children) check_trace(c);
}

}  // namespace

TEST_CASE("configuration and method names") {
  EngineConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.base_n = 2;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.xi = 0.5;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = {};
  CHECK(cfg.sparsify_threshold(16) == doctest::Approx(12.0 * 64));
  for (const char* name : {"auto", "exact", "naive", "two-step", "importance", "contraction"}) {
    CHECK(method_name(parse_method(name)) == name);
  }
  CHECK_THROWS_AS(parse_method("karger"), InvalidArgument);
}

TEST_CASE("regime thresholds") {
  CHECK(is_very_reliable(10, 2, 0.001));
  CHECK_FALSE(is_very_reliable(10, 2, 0.25));
  CHECK_FALSE(above_two_step_threshold(10, 2, 0.25));
  CHECK(above_two_step_threshold(10, 2, 0.6));
}

TEST_CASE("input validation") {
  const MultiGraph c4 = generate("cycle", {.n = 4});
  CHECK_THROWS_AS(auto_estimate(MultiGraph(4, {{0, 1}}), 0.1, {}), DisconnectedGraph);
  CHECK_THROWS_AS(auto_estimate(c4, 0.0, {}), InvalidArgument);
  CHECK_THROWS_AS(auto_estimate(c4, 1.0, {}), InvalidArgument);
}

TEST_CASE("dispatch examples") {
  const MultiGraph c10 = generate("cycle", {.n = 10});
  const EngineResult base = auto_estimate(c10, 0.25, {});
  CHECK(base.report.method == "exact");
  CHECK(base.trace.decision == "base-case");
  CHECK(base.report.estimate.linear() == doctest::Approx(oracle::cycle_u(10, 0.25)).epsilon(1e-12));

  const EngineResult reliable = auto_estimate(c10, 0.001, quick(4));
  CHECK(reliable.report.method == "importance");
  CHECK(reliable.trace.decision == "very-reliable");
  CHECK(std::abs(reliable.report.estimate.linear() / oracle::cycle_u(10, 0.001) - 1) <= 0.1);

  const EngineResult hot = auto_estimate(c10, 0.9, quick(4));
  CHECK(hot.report.method == "naive");
  CHECK(hot.trace.method == "naive-mc");

  // Few minimum cuts keep u small while p sits above the importance threshold.
  const MultiGraph db = generate("dumbbell", {.n = 14, .k = 2});
  const double p = 0.08;
  const EngineResult mid = auto_estimate(db, p, {});
  CHECK(mid.report.method == "contraction");
  CHECK(mid.trace.method == "contraction");
  check_trace(mid.trace);
  CHECK(std::abs(mid.report.estimate.linear() / exact_u(db, p) - 1) <= 0.1);
}

TEST_CASE("forced methods") {
  const MultiGraph c13 = generate("cycle", {.n = 13});
  const double p = 0.2;
  const double truth = oracle::cycle_u(13, p);
  EngineConfig cfg;
  cfg.eps = 0.2;
  for (Method m : {Method::exact, Method::naive, Method::two_step, Method::contraction}) {
    const EngineResult r = estimate(c13, p, m, cfg);
    CHECK(r.trace.decision.rfind("forced", 0) == 0);
    CHECK(std::abs(r.report.estimate.linear() / truth - 1) <= 0.2);
  }
  const EngineResult ts = estimate(c13, p, Method::two_step, cfg);
  CHECK(ts.trace.q == doctest::Approx(std::sqrt(0.5)));
  CHECK(ts.groups == median_groups(cfg.delta));
}

TEST_CASE("results do not depend on the worker count") {
  const MultiGraph db = generate("dumbbell", {.n = 14, .k = 2});
  EngineConfig one;
  one.seed = 99;
  one.eps = 0.3;
  EngineConfig three = one;
  three.workers = 3;
  const EngineResult a = auto_estimate(db, 0.08, one);
  const EngineResult b = auto_estimate(db, 0.08, three);
  CHECK(a.report.estimate == b.report.estimate);
  CHECK(a.report.samples == b.report.samples);
  CHECK(a.report.rel_variance_hat == b.report.rel_variance_hat);
}

TEST_CASE("contraction step is unbiased over every pattern") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    const MultiGraph g = oracle::random_connected(n, std::uniform_int_distribution<int>(n, 10)(rng), rng);
    const int m = g.num_edges();
    const double q = std::exp2(-1.0 / gamma(build_gomory_hu(g)));
    const double p = 0.5 * q;
    double expectation = 0.0;
    for (std::uint32_t keep = 0; keep < (1U << m); ++keep) {
      EdgeMask merge(static_cast<std::size_t>(m));
      int kept = 0;
      for (int i = 0; i < m; ++i) {
        merge[i] = !((keep >> i) & 1U);
        kept += !merge[i];
      }
      expectation += std::pow(q, kept) * std::pow(1 - q, m - kept) * exact_u(contract(g, merge).graph, p / q);
    }
    CHECK(std::abs(expectation - exact_u(g, p)) <= 1e-10);
  }
}

TEST_CASE("contract_step traces") {
  const MultiGraph c16 = generate("cycle", {.n = 16});
  EngineConfig cfg;
  Rng rng(5);
  TraceNode t;
  const LogWeight w = contract_step(c16, 0.05, cfg, 0, rng, &t);
  CHECK_FALSE(std::isnan(w.log()));
  CHECK(t.gamma == doctest::Approx(1.5));
  CHECK(t.q == doctest::Approx(std::exp2(-2.0 / 3.0)));
  check_trace(t);
  CHECK_THROWS_AS(contract_step(c16, 0.7, cfg, 0, rng), InvalidArgument);
}

TEST_CASE("sparsify branch") {
  // lambda = 600 puts the skeleton probability below one at n = 16.
  const MultiGraph pc = generate("parallel_cycle", {.n = 16, .k = 300});
  EngineConfig cfg;
  cfg.lambda_sparsify_threshold = 8;
  cfg.base_n = 20;
  CHECK(sparsify_triggered(16, pc.num_edges(), 600, cfg));
  CHECK_FALSE(sparsify_triggered(16, pc.num_edges(), 600, EngineConfig{}));
  Rng rng(6);
  TraceNode t;
  sparsify_branch(pc, 0.95, cfg, 0, rng, &t);
  REQUIRE(t.method == "sparsify");
  REQUIRE(t.children.size() == 2);
  for (const TraceNode& c : t.children) {
    CHECK(c.m < pc.num_edges());
    CHECK(c.p < 0.95);
  }

  // An alpha = 1 clamp keeps the graph and the failure probability.
  const MultiGraph c16 = generate("cycle", {.n = 16});
  TraceNode same;
  sparsify_branch(c16, 0.05, cfg, 0, rng, &same);
  REQUIRE(same.method == "sparsify");
  for (const TraceNode& c : same.children) {
    CHECK(c.m == 16);
    CHECK(c.p == doctest::Approx(0.05));
  }

  // Infeasible reparametrization contracts instead.
  TraceNode skipped;
  sparsify_branch(pc, 0.01, cfg, 0, rng, &skipped);
  CHECK(skipped.decision == "sparsify-skipped; contract");
  CHECK(skipped.method == "contraction");
}

TEST_CASE("node estimates re-check the base cases") {
  EngineConfig cfg;
  Rng rng(7);
  TraceNode t;
  CHECK(node_estimate(MultiGraph(1, {}), 0.5, cfg, 0, rng, &t).is_zero());
  CHECK(t.decision == "single-vertex");
  CHECK(node_estimate(MultiGraph(3, {{0, 1}}), 0.5, cfg, 0, rng, &t) == LogWeight::one());
  CHECK(node_estimate(generate("cycle", {.n = 5}), 0.5, cfg, 0, rng, &t).linear() ==
        doctest::Approx(oracle::cycle_u(5, 0.5)));
  CHECK(t.method == "exact");
}
