#pragma once

#include <optional>
#include <vector>

#include "affgr/hull.hpp"
#include "affgr/psi.hpp"

namespace affgr {

// Convex hull of Psi(lambda).
struct MomentPolytope {
  Coweight base;
  std::vector<Coweight> points;
  std::vector<Coweight> vertices;
  std::optional<Hull> hull;  // present for rank <= 3

  /// Throws UnsupportedRank when no facet description was computed.
  const Hull& facets() const;
  bool contains(const Coweight& mu) const;
};

/// Vertices come from the exact hull for rank <= 3 and from the LP
/// extreme-point test otherwise.
MomentPolytope moment_polytope(const RootSystem& rs, const Coweight& lambda);
MomentPolytope moment_polytope(const RootSystem& rs, const PsiSet& psi);

/// Vertices by the LP test alone, for cross-checking.
std::vector<Coweight> polytope_vertices_lp(const std::vector<Coweight>& points);

/// Members of psi in the closed chamber y(C) that are maximal for the
/// same-chamber order.
std::vector<Coweight> chamber_maxima(const RootSystem& rs, const PsiSet& psi, const WeylElement& y);

/// Coweights congruent to lambda modulo the coroot lattice, inside the
/// polytope, but missing from Psi(lambda). Rank <= 3.
std::vector<Coweight> integral_gap_scan(const RootSystem& rs, const MomentPolytope& mp);
std::vector<Coweight> integral_gap_scan(const RootSystem& rs, const Coweight& lambda);

}  // namespace affgr
