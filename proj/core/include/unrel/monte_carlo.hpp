#pragma once

#include <cstdint>

#include "unrel/graph.hpp"
#include "unrel/log_weight.hpp"
#include "unrel/sampling.hpp"

namespace unrel {

/// Fails each edge with probability p; true when the survivors disconnect g.
bool naive_round(const MultiGraph& g, double p, Rng& rng);

/// ceil(4 ln(2 / delta) / eps^2) disconnections end the detector.
std::uint64_t detector_target(double eps, double delta);
/// ceil(target * log2(n)^3) rounds bound it.
std::uint64_t detector_budget(int n, double eps, double delta);

struct DetectorOutcome {
  /// True when the target was reached within the budget.
  bool fired = false;
  /// Empirical disconnection frequency over the rounds run.
  LogWeight estimate;
  std::uint64_t rounds = 0;
  std::uint64_t successes = 0;
  std::uint64_t target = 0;
  std::uint64_t budget = 0;
};

/// Inverse-binomial sampling: naive rounds until `target` disconnections or
/// `budget` rounds. Round r belongs to chunk r / 64 of `seed`, so the stopping
/// round does not depend on the worker count.
DetectorOutcome inverse_binomial(const MultiGraph& g, double p, std::uint64_t target, std::uint64_t budget,
                                 std::uint64_t seed, int workers = 1);

/// The unreliable-regime test with target and budget from eps and delta.
/// Throws InvalidArgument unless 0 < eps, delta < 1.
DetectorOutcome detect_unreliable(const MultiGraph& g, double p, double eps, double delta, std::uint64_t seed,
                                  int workers = 1);

/// Naive estimate as a report, whether or not the target was reached.
EstimateReport naive_estimate(const MultiGraph& g, double p, std::uint64_t target, std::uint64_t budget,
                              std::uint64_t seed, int workers = 1);

/// q with q^lambda = 1/2.
double two_step_q(double lambda);
/// ceil(sqrt(n)).
int two_step_inner_rounds(int n);

/// One outer round: H ~ G(q), then `inner` rounds that keep a
/// Binomial(|E(H)|, 1 - p/q) number of distinct random edges of H and test
/// whether they connect H. Returns the fraction of disconnected inner rounds.
/// Throws InvalidArgument unless p < q <= 1.
LogWeight two_step_sample(const MultiGraph& g, double p, double q, int inner, Rng& rng);

/// Spreads `outer` outer rounds; lambda is computed when 0.
EstimateReport two_step_estimate(const MultiGraph& g, double p, std::uint64_t outer, std::uint64_t seed,
                                 int workers = 1, int lambda = 0);

struct MedianOfAverages {
  LogWeight estimate;
  std::uint64_t groups = 0;
  std::uint64_t group_size = 0;
  std::uint64_t samples = 0;
  /// Relative variance of single samples, pooled over all groups.
  double rel_variance_hat = 0.0;
};

/// ceil(8 ln(1 / delta)) groups.
std::uint64_t median_groups(double delta);
/// ceil(4 (eta_bound + 1) / eps^2) samples per group.
std::uint64_t median_group_size(double eta_bound, double eps);

/// Median of the group averages. Group k draws from seed derive_seed(seed, k).
/// Throws InvalidArgument for eta_bound < 0 or eps, delta outside (0, 1).
MedianOfAverages median_of_averages(const Sampler& sampler, double eta_bound, double eps, double delta,
                                    std::uint64_t seed, int workers = 1);

}  // namespace unrel
