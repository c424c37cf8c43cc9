#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unrel/graph.hpp"
#include "unrel/importance.hpp"
#include "unrel/log_weight.hpp"
#include "unrel/sampling.hpp"
#include "unrel/sparsify.hpp"

namespace unrel {

struct EngineConfig {
  double eps = 0.1;
  /// Failure probability of the detector and of every median-of-averages.
  double delta = 0.1;
  /// Sparsification triggers when m > n^{1.5 - xi}.
  double xi = 0.1;
  /// Graphs with at most this many vertices are solved exactly.
  int base_n = 12;
  /// Sparsification also needs lambda above this; 0 means 12 log2(n)^3.
  double lambda_sparsify_threshold = 0.0;
  std::uint64_t seed = 1;
  int workers = 1;
  double c_alpha = kDefaultSparsifyConstant;
  double c_is = kDefaultImportanceConstant;
  /// Budget constant for importance leaves inside the recursion; each leaf
  /// only needs an unbiased draw, so this stays small.
  double c_is_child = 4.0;
  /// Samples used to estimate the relative variance before a median-of-averages run.
  std::uint64_t pilot_samples = 512;
  /// Pilot relative variance is scaled by this before sizing the groups.
  double eta_safety = 1.5;
  /// Round cap for the forced naive method.
  std::uint64_t naive_max_rounds = 10'000'000;

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;
  double sparsify_threshold(int n) const;
};

enum class Method { automatic, exact, naive, two_step, importance, contraction };

/// "auto", "exact", "naive", "two-step", "importance", "contraction".
Method parse_method(std::string_view name);
std::string_view method_name(Method m);

/// One visited node of the recursion.
struct TraceNode {
  int n = 0;
  int m = 0;
  int lambda = 0;
  double gamma = 0.0;
  /// Retention probability used at this node (contraction or two-step), else 0.
  double q = 0.0;
  double p = 0.0;
  std::string decision;
  /// exact, naive-mc, two-step-mc, importance for leaves; contraction or
  /// sparsify for inner nodes.
  std::string method;
  std::vector<TraceNode> children;
};

struct EngineResult {
  EstimateReport report;
  /// Root decision, with one recursion sample expanded under it.
  TraceNode trace;
  double eta_bound = 0.0;
  std::uint64_t pilot_samples = 0;
  std::uint64_t groups = 0;
  std::uint64_t group_size = 0;
};

/// p^lambda < 4 n^-3, compared in log space.
bool is_very_reliable(int n, int lambda, double p);
/// p^lambda > n^-0.5, compared in log space.
bool above_two_step_threshold(int n, int lambda, double p);
/// m > n^{1.5 - xi} and lambda above the configured threshold.
bool sparsify_triggered(int n, int m, int lambda, const EngineConfig& cfg);

/// Estimates u_G(p). Throws DisconnectedGraph for disconnected g and
/// InvalidArgument for p outside (0, 1) or a bad configuration.
EngineResult estimate(const MultiGraph& g, double p, Method method, const EngineConfig& cfg);
EngineResult auto_estimate(const MultiGraph& g, double p, const EngineConfig& cfg);

/// One unbiased draw of u_G(p): two children H ~ G(q) with q^gamma = 1/2,
/// each estimated at p/q by the dispatcher. Throws InvalidArgument when
/// q <= p.
LogWeight contract_step(const MultiGraph& g, double p, const EngineConfig& cfg, int depth, Rng& rng,
                        TraceNode* trace = nullptr);

/// Two independent skeletons evaluated at the reparametrized q', averaged.
/// Falls back to contract_step when q' is infeasible.
LogWeight sparsify_branch(const MultiGraph& g, double p, const EngineConfig& cfg, int depth, Rng& rng,
                          TraceNode* trace = nullptr);

/// Single unbiased draw at a recursion node, re-checking every base case.
LogWeight node_estimate(const MultiGraph& g, double p, const EngineConfig& cfg, int depth, Rng& rng,
                        TraceNode* trace = nullptr);

}  // namespace unrel
