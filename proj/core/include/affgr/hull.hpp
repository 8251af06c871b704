#pragma once

#include <cstddef>
#include <vector>

#include "affgr/rootsys.hpp"

namespace affgr {

// normal . x <= rhs
struct HalfSpace {
  IntVec normal;
  Int rhs = 0;
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

// normal . x == rhs
struct Hyperplane {
  IntVec normal;
  Int rhs = 0;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

// Exact hull of a finite integer point set whose affine hull has dimension
// at most 3. Facets and equalities are primitive integer vectors.
struct Hull {
  std::size_t ambient = 0;
  std::size_t dimension = 0;
  std::vector<IntVec> vertices;
  std::vector<HalfSpace> facets;
  std::vector<Hyperplane> equalities;

  /// Closed containment.
  bool contains(const IntVec& x) const;
};

/// Throws UnsupportedRank if the affine hull has dimension > 3, ArgumentError on empty input.
Hull convex_hull(const std::vector<IntVec>& points);

/// Affine dimension of the point set.
std::size_t affine_dimension(const std::vector<IntVec>& points);

/// p in conv(points), decided by an exact phase-one simplex.
bool in_convex_hull(const IntVec& p, const std::vector<IntVec>& points);

/// Points not in the hull of the others. Any dimension.
std::vector<IntVec> extreme_points(const std::vector<IntVec>& points);

}  // namespace affgr
