#include "unrel/engine.hpp"

#include <chrono>
#include <cmath>
#include <optional>

#include "unrel/error.hpp"
#include "unrel/exact.hpp"
#include "unrel/gomory_hu.hpp"
#include "unrel/monte_carlo.hpp"

namespace unrel {
namespace {

constexpr int kMaxDepth = 200;

// Stream keys below the root seed.
constexpr std::uint64_t kDetectorKey = 1;
constexpr std::uint64_t kPilotKey = 2;
constexpr std::uint64_t kMedianKey = 3;
constexpr std::uint64_t kContextKey = 4;
constexpr std::uint64_t kTraceKey = 5;

struct NodeInfo {
  GomoryHuTree tree;
  int lambda = 0;
  double gamma = 0.0;
};

NodeInfo analyze(const MultiGraph& g) {
  NodeInfo info;
  info.tree = build_gomory_hu(g);
  info.lambda = min_cut_value(info.tree);
  info.gamma = gamma(info.tree);
  return info;
}

void fill(TraceNode* t, const MultiGraph& g, double p) {
  if (!t) return;
  t->n = g.num_vertices();
  t->m = g.num_edges();
  t->p = p;
}

void fill(TraceNode* t, const NodeInfo& info) {
  if (!t) return;
  t->lambda = info.lambda;
  t->gamma = info.gamma;
}

void leaf(TraceNode* t, const char* decision, const char* method) {
  if (!t) return;
  t->decision = decision;
  t->method = method;
}

ImportanceOptions importance_options(const EngineConfig& cfg) {
  ImportanceOptions o;
  o.c_alpha = cfg.c_alpha;
  o.c_is = cfg.c_is;
  return o;
}

LogWeight contract_with(const MultiGraph& g, double p, const EngineConfig& cfg, int depth, Rng& rng, TraceNode* trace,
                        const NodeInfo& info);
LogWeight sparsify_with(const MultiGraph& g, double p, const EngineConfig& cfg, int depth, Rng& rng, TraceNode* trace,
                        const NodeInfo& info);

/// Dispatch at a recursion node. `allow_sparsify` is false directly below a
/// sparsification, whose skeleton may be the node's own graph when alpha = 1.
LogWeight dispatch(const MultiGraph& g, double p, const EngineConfig& cfg, int depth, Rng& rng, TraceNode* trace,
                   bool allow_sparsify) {
  fill(trace, g, p);
  const int n = g.num_vertices();
  if (n == 1) {
    leaf(trace, "single-vertex", "exact");
    return LogWeight::zero();
  }
  if (!is_connected(g)) {
    leaf(trace, "disconnected", "exact");
    return LogWeight::one();
  }
  if (p >= 1.0) {
    leaf(trace, "certain-failure", "exact");
    return LogWeight::one();
  }
  if (n <= cfg.base_n) {
    leaf(trace, "base-case", "exact");
    return exact_log_u(g, p);
  }
  if (depth > kMaxDepth) throw StructuralError("recursion depth limit exceeded");
  const NodeInfo info = analyze(g);
  fill(trace, info);
  if (is_very_reliable(n, info.lambda, p)) {
    leaf(trace, "very-reliable", "importance");
    const SamplerContext ctx = build_context(g, p, rng, importance_options(cfg), &info.tree);
    const std::uint64_t count = default_importance_samples(n, cfg.c_is_child);
    LogAccumulator acc;
    for (std::uint64_t i = 0; i < count; ++i) acc.add(sample_once(ctx, rng));
    return acc.mean();
  }
  const DetectorOutcome d = detect_unreliable(g, p, cfg.eps, cfg.delta, rng(), 1);
  if (d.fired) {
    leaf(trace, "unreliable", "naive-mc");
    return d.estimate;
  }
  if (above_two_step_threshold(n, info.lambda, p)) {
    leaf(trace, "two-step", "two-step-mc");
    const double q = two_step_q(info.lambda);
    if (trace) trace->q = q;
    return two_step_sample(g, p, q, two_step_inner_rounds(n), rng);
  }
  if (allow_sparsify && sparsify_triggered(n, g.num_edges(), info.lambda, cfg)) {
    return sparsify_with(g, p, cfg, depth, rng, trace, info);
  }
  return contract_with(g, p, cfg, depth, rng, trace, info);
}

LogWeight contract_with(const MultiGraph& g, double p, const EngineConfig& cfg, int depth, Rng& rng, TraceNode* trace,
                        const NodeInfo& info) {
  const double q = std::exp2(-1.0 / info.gamma);
  if (!(q > p)) throw InvalidArgument("contraction needs p below q = 2^(-1/gamma)");
  if (trace) {
    trace->q = q;
    trace->decision = "contract";
    trace->method = "contraction";
    trace->children.resize(2);
  }
  LogWeight sum;
  for (int b = 0; b < 2; ++b) {
    const Contraction h = sample_contraction(g, q, rng);
    sum += dispatch(h.graph, p / q, cfg, depth + 1, rng, trace ? &trace->children[b] : nullptr, true);
  }
  return sum / LogWeight::from_linear(2.0);
}

LogWeight sparsify_with(const MultiGraph& g, double p, const EngineConfig& cfg, int depth, Rng& rng, TraceNode* trace,
                        const NodeInfo& info) {
  const int n = g.num_vertices();
  const double delta = default_sparsify_delta(n);
  const double alpha = skeleton_probability(n, info.lambda, delta, cfg.c_alpha);
  double q = 0.0;
  try {
    q = reparam_q(p, alpha);
  } catch (const InfeasibleReparametrization&) {
    if (trace) trace->decision = "sparsify-skipped";
    const LogWeight out = contract_with(g, p, cfg, depth, rng, trace, info);
    if (trace) trace->decision = "sparsify-skipped; contract";
    return out;
  }
  if (trace) {
    trace->q = q;
    trace->decision = "sparsify";
    trace->method = "sparsify";
    trace->children.resize(2);
  }
  LogWeight sum;
  for (int b = 0; b < 2; ++b) {
    const SparsifyOutcome sk = skeleton(g, info.lambda, delta, rng, cfg.c_alpha);
    sum += dispatch(sk.h, q, cfg, depth + 1, rng, trace ? &trace->children[b] : nullptr, false);
  }
  return sum / LogWeight::from_linear(2.0);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

/// Pilot run for the relative variance, then median-of-averages.
void run_median(EngineResult& out, const Sampler& sampler, std::uint64_t pilot, const EngineConfig& cfg) {
  const LogAccumulator pilot_acc = draw_samples(sampler, pilot, derive_seed(cfg.seed, kPilotKey), cfg.workers);
  out.pilot_samples = pilot_acc.count();
  out.eta_bound = std::max(1.0, cfg.eta_safety * pilot_acc.rel_variance());
  const MedianOfAverages moa =
      median_of_averages(sampler, out.eta_bound, cfg.eps, cfg.delta, derive_seed(cfg.seed, kMedianKey), cfg.workers);
  out.groups = moa.groups;
  out.group_size = moa.group_size;
  out.report.estimate = moa.estimate;
  out.report.samples = moa.samples;
  out.report.rel_variance_hat = moa.rel_variance_hat;
}

}  // namespace

void EngineConfig::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
  if (!(xi > 0.0 && xi < 0.5)) throw InvalidArgument("xi must lie in (0, 0.5)");
  if (base_n < 3 || base_n > kExactUMaxVertices) {
    throw InvalidArgument("base_n must lie in [3, " + std::to_string(kExactUMaxVertices) + "]");
  }
  if (lambda_sparsify_threshold < 0.0) throw InvalidArgument("sparsification threshold must be nonnegative");
  if (!(c_alpha > 0.0) || !(c_is > 0.0) || !(c_is_child > 0.0)) {
    throw InvalidArgument("sample constants must be positive");
  }
  if (!(eta_safety >= 1.0)) throw InvalidArgument("eta safety factor must be at least 1");
  if (pilot_samples < 2) throw InvalidArgument("pilot needs at least two samples");
}

double EngineConfig::sparsify_threshold(int n) const {
  if (lambda_sparsify_threshold > 0.0) return lambda_sparsify_threshold;
  const double lg = std::log2(static_cast<double>(std::max(n, 2)));
  return 12.0 * lg * lg * lg;
}

Method parse_method(std::string_view name) {
  if (name == "auto") return Method::automatic;
  if (name == "exact") return Method::exact;
  if (name == "naive") return Method::naive;
  if (name == "two-step") return Method::two_step;
  if (name == "importance") return Method::importance;
  if (name == "contraction") return Method::contraction;
  throw InvalidArgument("unknown method: " + std::string(name));
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::exact: return "exact";
    case Method::naive: return "naive";
    case Method::two_step: return "two-step";
    case Method::importance: return "importance";
    case Method::contraction: return "contraction";
  }
  return "auto";
}

bool is_very_reliable(int n, int lambda, double p) {
  return lambda * std::log(p) < std::log(4.0) - 3.0 * std::log(static_cast<double>(n));
}

bool above_two_step_threshold(int n, int lambda, double p) {
  return lambda * std::log(p) > -0.5 * std::log(static_cast<double>(n));
}

bool sparsify_triggered(int n, int m, int lambda, const EngineConfig& cfg) {
  return m > std::pow(static_cast<double>(n), 1.5 - cfg.xi) && lambda > cfg.sparsify_threshold(n);
}

LogWeight node_estimate(const MultiGraph& g, double p, const EngineConfig& cfg, int depth, Rng& rng,
                        TraceNode* trace) {
  return dispatch(g, p, cfg, depth, rng, trace, true);
}

LogWeight contract_step(const MultiGraph& g, double p, const EngineConfig& cfg, int depth, Rng& rng,
                        TraceNode* trace) {
  fill(trace, g, p);
  const NodeInfo info = analyze(g);
  fill(trace, info);
  return contract_with(g, p, cfg, depth, rng, trace, info);
}

LogWeight sparsify_branch(const MultiGraph& g, double p, const EngineConfig& cfg, int depth, Rng& rng,
                          TraceNode* trace) {
  fill(trace, g, p);
  const NodeInfo info = analyze(g);
  fill(trace, info);
  return sparsify_with(g, p, cfg, depth, rng, trace, info);
}

EngineResult auto_estimate(const MultiGraph& g, double p, const EngineConfig& cfg) {
  return estimate(g, p, Method::automatic, cfg);
}

EngineResult estimate(const MultiGraph& g, double p, Method method, const EngineConfig& cfg) {
  cfg.validate();
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("failure probability must lie in (0, 1)");
  if (!is_connected(g)) throw DisconnectedGraph("input graph is disconnected");
  const auto start = std::chrono::steady_clock::now();
  const int n = g.num_vertices();
  EngineResult out;
  out.report.seed = cfg.seed;
  TraceNode& root = out.trace;
  fill(&root, g, p);

  auto finish = [&](const char* name) -> EngineResult {
    out.report.method = name;
    out.report.wall_ms = elapsed_ms(start);
    return out;
  };

  if (method == Method::exact || (method == Method::automatic && (n <= cfg.base_n || n == 1))) {
    leaf(&root, method == Method::exact ? "forced" : "base-case", "exact");
    out.report.estimate = exact_log_u(g, p);
    out.report.samples = 0;
    return finish("exact");
  }
  if (n == 1) {
    leaf(&root, "single-vertex", "exact");
    return finish("exact");
  }

  const NodeInfo info = analyze(g);
  fill(&root, info);

  if (method == Method::automatic) {
    if (is_very_reliable(n, info.lambda, p)) {
      method = Method::importance;
      root.decision = "very-reliable";
    } else {
      const DetectorOutcome d =
          detect_unreliable(g, p, cfg.eps, cfg.delta, derive_seed(cfg.seed, kDetectorKey), cfg.workers);
      if (d.fired) {
        leaf(&root, "unreliable", "naive-mc");
        out.report.estimate = d.estimate;
        out.report.samples = d.rounds;
        out.report.rel_variance_hat =
            d.rounds > 1 && d.successes > 0
                ? std::max(0.0, (static_cast<double>(d.rounds) / d.successes - 1.0) * d.rounds / (d.rounds - 1.0))
                : 0.0;
        return finish("naive");
      }
      if (above_two_step_threshold(n, info.lambda, p)) {
        method = Method::two_step;
        root.decision = "two-step";
      } else {
        method = Method::contraction;
        root.decision = "moderately-reliable";
      }
    }
  } else {
    root.decision = "forced";
  }

  switch (method) {
    case Method::naive: {
      root.method = "naive-mc";
      const EstimateReport r = naive_estimate(g, p, detector_target(cfg.eps, cfg.delta), cfg.naive_max_rounds,
                                              derive_seed(cfg.seed, kDetectorKey), cfg.workers);
      out.report.estimate = r.estimate;
      out.report.samples = r.samples;
      out.report.rel_variance_hat = r.rel_variance_hat;
      return finish("naive");
    }
    case Method::importance: {
      root.method = "importance";
      Rng rng = make_rng(cfg.seed, kContextKey);
      const SamplerContext ctx = build_context(g, p, rng, importance_options(cfg), &info.tree);
      out.report.q1_active = ctx.q1_active;
      run_median(out, [&](Rng& r) { return sample_once(ctx, r); }, default_importance_samples(n, cfg.c_is), cfg);
      return finish("importance");
    }
    case Method::two_step: {
      root.method = "two-step-mc";
      const double q = two_step_q(info.lambda);
      root.q = q;
      const int inner = two_step_inner_rounds(n);
      run_median(out, [&](Rng& r) { return two_step_sample(g, p, q, inner, r); }, cfg.pilot_samples, cfg);
      return finish("two-step");
    }
    case Method::contraction: {
      const bool sparsify = sparsify_triggered(n, g.num_edges(), info.lambda, cfg);
      auto unit = [&](Rng& r, TraceNode* t) {
        return sparsify ? sparsify_with(g, p, cfg, 0, r, t, info) : contract_with(g, p, cfg, 0, r, t, info);
      };
      {
        // One recursion sample expanded for the trace; not part of the estimate.
        Rng r = make_rng(cfg.seed, kTraceKey);
        TraceNode expanded = root;
        unit(r, &expanded);
        const std::string decision = root.decision;
        root = std::move(expanded);
        root.decision = decision + "; " + root.decision;
      }
      run_median(out, [&](Rng& r) { return unit(r, nullptr); }, cfg.pilot_samples, cfg);
      return finish("contraction");
    }
    case Method::automatic:
    case Method::exact:
      break;
  }
  throw StructuralError("unhandled estimation method");
}

}  // namespace unrel
