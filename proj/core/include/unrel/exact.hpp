#pragma once

#include <functional>
#include <vector>

#include "unrel/graph.hpp"
#include "unrel/log_weight.hpp"

namespace unrel {

inline constexpr int kExactUMaxVertices = 20;
inline constexpr int kExactZMaxVertices = 16;
inline constexpr int kExactXMaxVertices = 10;

struct CutEntry {
  CutSide side;
  int value = 0;
};

/// Every bipartition of the vertex set, listed once with vertex n-1 on the
/// complement side: 2^{n-1} - 1 entries.
struct CutCatalog {
  std::vector<CutEntry> cuts;

  int min_value() const;
  /// Cuts of value at most `bound`.
  long long count_at_most(double bound) const;
};

CutCatalog enumerate_cuts(const MultiGraph& g);

/// Exact disconnection probability u_G(p) by subset dynamic programming over
/// the component of a pivot vertex. Requires n <= kExactUMaxVertices.
LogWeight exact_log_u(const MultiGraph& g, double p);
double exact_u(const MultiGraph& g, double p);

/// Brute force over all 2^m failure patterns (m <= 24). Test oracle for
/// exact_u.
double enumerate_u(const MultiGraph& g, double p);

using CutPredicate = std::function<bool(const CutSide& side, int value)>;

/// z_G(p) = sum over cuts of p^{value}. Requires n <= kExactZMaxVertices.
LogWeight exact_log_z(const MultiGraph& g, double p);
double exact_z(const MultiGraph& g, double p);

/// Partial sum of p^{value} over the cuts accepted by the predicate.
LogWeight exact_log_z_restricted(const MultiGraph& g, double p, const CutPredicate& keep);
double exact_z_restricted(const MultiGraph& g, double p, const CutPredicate& keep);

/// x_G(p) = sum over ordered pairs of distinct cuts of p^{|C_i u C_j|}.
/// Requires n <= kExactXMaxVertices.
LogWeight exact_log_x(const MultiGraph& g, double p);
double exact_x(const MultiGraph& g, double p);

}  // namespace unrel
