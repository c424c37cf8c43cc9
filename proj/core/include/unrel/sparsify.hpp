#pragma once

#include <vector>

#include "unrel/graph.hpp"

namespace unrel {

inline constexpr double kDefaultSparsifyConstant = 12.0;

/// Uniform skeleton of g: each edge kept independently with probability alpha.
struct SparsifyOutcome {
  MultiGraph h;
  /// Index in g of every edge of h, increasing.
  std::vector<int> kept;
  double alpha = 1.0;
  double delta = 0.0;
};

/// alpha = min(1, c_alpha ln(n) / (delta^2 lambda)).
double skeleton_probability(int n, int lambda, double delta, double c_alpha = kDefaultSparsifyConstant);

/// Throws InvalidArgument unless 0 < delta < 1 and lambda >= 1. When alpha
/// clamps to 1, h is g itself.
SparsifyOutcome skeleton(const MultiGraph& g, int lambda, double delta, Rng& rng,
                         double c_alpha = kDefaultSparsifyConstant);

/// The delta used at every sparsification site: 1 / log2(n), capped below 1.
double default_sparsify_delta(int n);

/// q with 1 - q = (1 - p) / alpha, so failing skeleton edges with probability
/// q reproduces failing g's edges with probability p. Throws
/// InfeasibleReparametrization when alpha < 1 - p.
double reparam_q(double p, double alpha);

}  // namespace unrel
