#include "affgr/polytope.hpp"

#include <algorithm>

namespace affgr {

namespace {

std::vector<IntVec> raw(const std::vector<Coweight>& pts) {
  std::vector<IntVec> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p.coords());
  return out;
}

std::vector<Coweight> wrap(const std::vector<IntVec>& pts) {
  std::vector<Coweight> out;
  for (const auto& p : pts) out.emplace_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const Hull& MomentPolytope::facets() const {
  if (!hull) throw UnsupportedRank("facet description is only available for rank <= 3");
  return *hull;
}

bool MomentPolytope::contains(const Coweight& mu) const { return facets().contains(mu.coords()); }

std::vector<Coweight> polytope_vertices_lp(const std::vector<Coweight>& points) {
  return wrap(extreme_points(raw(points)));
}

MomentPolytope moment_polytope(const RootSystem& rs, const PsiSet& psi) {
  MomentPolytope mp;
  mp.base = psi.base;
  mp.points = psi.members;
  if (rs.rank() <= 3) {
    mp.hull = convex_hull(raw(mp.points));
    mp.vertices = wrap(mp.hull->vertices);
  } else {
    mp.vertices = polytope_vertices_lp(mp.points);
  }
  return mp;
}

MomentPolytope moment_polytope(const RootSystem& rs, const Coweight& lambda) {
  return moment_polytope(rs, psi_infinity(rs, lambda));
}

std::vector<Coweight> chamber_maxima(const RootSystem& rs, const PsiSet& psi, const WeylElement& y) {
  std::vector<Coweight> in;
  for (const auto& mu : psi.members)
    if (rs.in_chamber(mu, y)) in.push_back(mu);
  std::vector<Coweight> out;
  for (const auto& mu : in) {
    bool dominated = std::any_of(in.begin(), in.end(), [&](const Coweight& nu) {
      return nu != mu && rs.positive_sum_in_chamber(nu - mu, y);
    });
    if (!dominated) out.push_back(mu);
  }
  return out;
}

std::vector<Coweight> integral_gap_scan(const RootSystem& rs, const MomentPolytope& mp) {
  const Hull& hull = mp.facets();
  const std::size_t n = rs.rank();
  IntVec lo = mp.points.front().coords(), hi = lo;
  for (const auto& p : mp.points)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  std::vector<Coweight> gaps;
  IntVec x = lo;
  while (true) {
    Coweight mu(x);
    if (rs.in_coroot_lattice(mu - mp.base) && hull.contains(x) &&
        !std::binary_search(mp.points.begin(), mp.points.end(), mu))
      gaps.push_back(mu);
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

std::vector<Coweight> integral_gap_scan(const RootSystem& rs, const Coweight& lambda) {
  if (rs.rank() > 3) throw UnsupportedRank("integral gap scan is limited to rank <= 3");
  return integral_gap_scan(rs, moment_polytope(rs, lambda));
}

}  // namespace affgr
