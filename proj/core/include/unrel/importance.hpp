#pragma once

#include <cstdint>
#include <vector>

#include "unrel/gomory_hu.hpp"
#include "unrel/graph.hpp"
#include "unrel/log_weight.hpp"
#include "unrel/respect_query.hpp"
#include "unrel/sampling.hpp"
#include "unrel/sparsify.hpp"
#include "unrel/tree_packing.hpp"

namespace unrel {

inline constexpr int kMaxRespect = 7;
inline constexpr double kDefaultImportanceConstant = 64.0;

struct ImportanceOptions {
  double c_alpha = kDefaultSparsifyConstant;
  /// Sample-budget constant of default_importance_samples.
  double c_is = kDefaultImportanceConstant;
};

/// A packing tree laid out on V(g) with its labeling and the range indices
/// needed to evaluate a cut sampled from it.
struct PreparedTree {
  /// Tree edges over V(g). For a contracted-graph tree the edges pulled back
  /// from the quotient come first, then the edges joining contracted classes.
  std::vector<Edge> edges;
  /// Leading edges eligible for sampling.
  int sample_edges = 0;
  EulerLabeling labeling;
  RangeCutIndex in_g;
  /// Host = each tree of the main packing.
  std::vector<RangeCutIndex> in_main;
  /// Hosts = the pulled-back and the joining edges of each contracted tree.
  std::vector<RangeCutIndex> in_prime;
  std::vector<RangeCutIndex> in_joins;
};

struct SamplerContext {
  MultiGraph g;
  double p = 0.0;
  int n = 0;
  int lambda = 0;
  /// Vertex count of the tau-contracted graph.
  int n_prime = 0;
  int tau = 0;
  double alpha = 1.0;
  double alpha_prime = 1.0;
  /// Whether a sparsifier came out disconnected on every attempt and the
  /// unsparsified graph was packed instead.
  bool sparsify_fallback = false;
  bool q1_active = false;
  std::vector<PreparedTree> main;
  std::vector<PreparedTree> prime;
  /// Main-packing weights: coef[a] = sum over j = 2..7 of a! S(j, a) / (n-1)^j.
  std::vector<double> coef;

  int mixture_size() const { return q1_active ? kMaxRespect : kMaxRespect - 1; }
};

/// Sparsifies and packs g, contracts the Gomory-Hu tree at tau and packs the
/// quotient, then labels and indexes every tree. `tree` may pass a Gomory-Hu
/// tree of g that was already computed. Throws DisconnectedGraph and
/// InvalidArgument (n < 2, p outside (0, 1)).
SamplerContext build_context(const MultiGraph& g, double p, Rng& rng, const ImportanceOptions& options = {},
                             const GomoryHuTree* tree = nullptr);

/// Stirling number of the second kind for 1 <= j <= 7, 1 <= alpha <= 7.
/// Throws InvalidArgument out of range.
long long stirling2(int j, int alpha);

/// Mixture probability of the cut, from explicit tree intersections.
double q_weight(const SamplerContext& ctx, const CutSide& cut);

struct ImportanceDraw {
  /// Mixture component, 1..7.
  int j = 0;
  /// Index into ctx.main (j >= 2) or ctx.prime (j = 1).
  int tree = 0;
  /// Distinct sampled edges, indices into the tree's labeling.
  std::vector<int> chi;
  int cut_value = 0;
  double q = 0.0;
};

/// One cut from the mixture, evaluated through the range indices.
ImportanceDraw draw_cut(const SamplerContext& ctx, Rng& rng);

/// p^c / q(C) for one sampled cut.
LogWeight sample_once(const SamplerContext& ctx, Rng& rng);

/// ceil(c_is * n^1.5 * log2(n)^2), at least 1.
std::uint64_t default_importance_samples(int n, double c_is = kDefaultImportanceConstant);

EstimateReport importance_estimate(const SamplerContext& ctx, std::uint64_t n_samples, std::uint64_t seed,
                                   int workers = 1);
/// Builds a context from `seed` and draws n_samples (0 means the default).
EstimateReport importance_estimate(const MultiGraph& g, double p, std::uint64_t n_samples, std::uint64_t seed,
                                   int workers = 1, const ImportanceOptions& options = {});

}  // namespace unrel
