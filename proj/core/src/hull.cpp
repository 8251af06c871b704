#include "affgr/hull.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace affgr {

namespace {

using Vec3 = std::array<Int, 3>;

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Vec3 sub3(const Vec3& a, const Vec3& b) {
  return {checked_sub(a[0], b[0]), checked_sub(a[1], b[1]), checked_sub(a[2], b[2])};
}

Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
          checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
          checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))};
}

Int dot3(const Vec3& a, const Vec3& b) {
  return checked_add(checked_add(checked_mul(a[0], b[0]), checked_mul(a[1], b[1])), checked_mul(a[2], b[2]));
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, checked_abs(x));
  return g;
}

std::size_t rank_of(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  std::vector<RatVec> m;
  for (const auto& r : rows) {
    RatVec v;
    for (Int x : r) v.emplace_back(x);
    m.push_back(std::move(v));
  }
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Affine hull of a point set: pivot coordinates (an injective projection)
// and primitive integer equalities.
struct Frame {
  std::vector<std::size_t> pivots;
  std::vector<Hyperplane> equalities;
};

Frame affine_frame(const std::vector<IntVec>& pts) {
  const std::size_t n = pts[0].size();
  std::vector<RatVec> basis;  // reduced row echelon form
  std::vector<std::size_t> piv;
  for (const auto& p : pts) {
    if (basis.size() == n) break;
    RatVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = checked_sub(p[i], pts[0][i]);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (v[piv[r]] == 0) continue;
      Rational f = v[piv[r]];
      for (std::size_t j = 0; j < n; ++j) v[j] -= f * basis[r][j];
    }
    std::size_t c = 0;
    while (c < n && v[c] == 0) ++c;
    if (c == n) continue;
    Rational lead = v[c];
    for (auto& x : v) x /= lead;
    for (auto& row : basis) {
      if (row[c] == 0) continue;
      Rational f = row[c];
      for (std::size_t j = 0; j < n; ++j) row[j] -= f * v[j];
    }
    basis.push_back(std::move(v));
    piv.push_back(c);
  }
  Frame fr;
  fr.pivots = piv;
  std::sort(fr.pivots.begin(), fr.pivots.end());
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
    RatVec z(n, Rational(0));
    z[f] = 1;
    for (std::size_t r = 0; r < basis.size(); ++r) z[piv[r]] = -basis[r][f];
    boost::multiprecision::cpp_int l = 1;
    for (const auto& x : z) l = boost::multiprecision::lcm(l, denominator(x));
    IntVec zi(n);
    for (std::size_t i = 0; i < n; ++i) zi[i] = to_int(z[i] * Rational(l));
    Int g = gcd_of(zi);
    for (auto& x : zi) x /= g;
    auto first = std::find_if(zi.begin(), zi.end(), [](Int x) { return x != 0; });
    if (*first < 0)
      for (auto& x : zi) x = -x;
    fr.equalities.push_back(Hyperplane{zi, dot(zi, pts[0])});
  }
  std::sort(fr.equalities.begin(), fr.equalities.end());
  return fr;
}

HalfSpace primitive(IntVec normal, Int rhs) {
  Int g = gcd_of(normal);
  if (g > 1) {
    for (auto& x : normal) x /= g;
    rhs /= g;
  }
  return HalfSpace{std::move(normal), rhs};
}

// Facets of the hull of points in Z^d, d <= 3, full-dimensional.
std::vector<HalfSpace> facets_low_dim(const std::vector<IntVec>& pts, std::size_t d) {
  std::vector<HalfSpace> out;
  if (d == 1) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    out.push_back(HalfSpace{{1}, (*hi)[0]});
    out.push_back(HalfSpace{{-1}, -(*lo)[0]});
    return out;
  }
  if (d == 2) {
    std::vector<IntVec> p = pts;
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    auto cross = [](const IntVec& o, const IntVec& a, const IntVec& b) {
      return checked_sub(checked_mul(checked_sub(a[0], o[0]), checked_sub(b[1], o[1])),
                         checked_mul(checked_sub(a[1], o[1]), checked_sub(b[0], o[0])));
    };
    std::vector<IntVec> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
      h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
      h[k++] = p[i];
    }
    h.resize(k - 1);
    for (std::size_t i = 0; i < h.size(); ++i) {
      const IntVec& a = h[i];
      const IntVec& b = h[(i + 1) % h.size()];
      IntVec nrm{checked_sub(b[1], a[1]), checked_sub(a[0], b[0])};
      out.push_back(primitive(nrm, dot(nrm, a)));
    }
    return out;
  }

  // d == 3: incremental hull, every face oriented against an interior point.
  std::vector<Vec3> p;
  {
    std::set<IntVec> uniq(pts.begin(), pts.end());
    for (const auto& x : uniq) p.push_back({x[0], x[1], x[2]});
  }
  std::size_t i1 = 1;
  std::size_t i2 = 0, i3 = 0;
  for (std::size_t i = 2; i < p.size() && !i2; ++i) {
    Vec3 c = cross3(sub3(p[i1], p[0]), sub3(p[i], p[0]));
    if (c != Vec3{0, 0, 0}) i2 = i;
  }
  if (!i2) throw ConsistencyError("degenerate point set in 3D hull");
  const Vec3 nrm012 = cross3(sub3(p[i1], p[0]), sub3(p[i2], p[0]));
  for (std::size_t i = 1; i < p.size() && !i3; ++i)
    if (dot3(nrm012, sub3(p[i], p[0])) != 0) i3 = i;
  if (!i3) throw ConsistencyError("degenerate point set in 3D hull");

  // 4 * centroid of the seed tetrahedron; strictly interior forever after.
  Vec3 ref4{};
  for (std::size_t i : {std::size_t{0}, i1, i2, i3})
    for (int c = 0; c < 3; ++c) ref4[c] = checked_add(ref4[c], p[i][c]);

  struct Face {
    std::size_t a, b, c;
    Vec3 n;
    Int off;
    bool alive;
  };
  std::vector<Face> faces;
  auto add_face = [&](std::size_t a, std::size_t b, std::size_t c) {
    Vec3 n = cross3(sub3(p[b], p[a]), sub3(p[c], p[a]));
    if (n == Vec3{0, 0, 0}) throw ConsistencyError("degenerate face in 3D hull");
    Int off = dot3(n, p[a]);
    if (dot3(n, ref4) > checked_mul(4, off)) {
      std::swap(b, c);
      n = {-n[0], -n[1], -n[2]};
      off = -off;
    }
    faces.push_back(Face{a, b, c, n, off, true});
  };
  add_face(0, i1, i2);
  add_face(0, i1, i3);
  add_face(0, i2, i3);
  add_face(i1, i2, i3);

  for (std::size_t q = 0; q < p.size(); ++q) {
    if (q == 0 || q == i1 || q == i2 || q == i3) continue;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    bool any = false;
    for (auto& f : faces) {
      if (!f.alive || dot3(f.n, p[q]) <= f.off) continue;
      any = true;
      f.alive = false;
      edges.insert({f.a, f.b});
      edges.insert({f.b, f.c});
      edges.insert({f.c, f.a});
    }
    if (!any) continue;
    for (auto [u, v] : edges)
      if (!edges.count({v, u})) add_face(u, v, q);
  }

  std::set<HalfSpace> uniq;
  for (const auto& f : faces)
    if (f.alive) uniq.insert(primitive({f.n[0], f.n[1], f.n[2]}, f.off));
  return {uniq.begin(), uniq.end()};
}

}  // namespace

std::size_t affine_dimension(const std::vector<IntVec>& points) {
  if (points.empty()) throw ArgumentError("empty point set");
  return affine_frame(points).pivots.size();
}

bool Hull::contains(const IntVec& x) const {
  if (x.size() != ambient) throw ArgumentError("point rank mismatch");
  for (const auto& e : equalities)
    if (dot(e.normal, x) != e.rhs) return false;
  for (const auto& f : facets)
    if (dot(f.normal, x) > f.rhs) return false;
  return true;
}

Hull convex_hull(const std::vector<IntVec>& points) {
  if (points.empty()) throw ArgumentError("empty point set");
  std::vector<IntVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Hull h;
  h.ambient = pts[0].size();
  Frame fr = affine_frame(pts);
  h.dimension = fr.pivots.size();
  h.equalities = fr.equalities;
  if (h.dimension > 3) throw UnsupportedRank("exact facet enumeration is limited to dimension 3");
  if (h.dimension == 0) {
    h.vertices = pts;
    return h;
  }

  std::vector<IntVec> proj;
  for (const auto& x : pts) {
    IntVec y;
    for (std::size_t c : fr.pivots) y.push_back(x[c]);
    proj.push_back(std::move(y));
  }
  for (const auto& f : facets_low_dim(proj, h.dimension)) {
    IntVec n(h.ambient, 0);
    for (std::size_t k = 0; k < fr.pivots.size(); ++k) n[fr.pivots[k]] = f.normal[k];
    h.facets.push_back(HalfSpace{std::move(n), f.rhs});
  }
  std::sort(h.facets.begin(), h.facets.end());

  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<IntVec> active;
    for (const auto& f : h.facets)
      if (dot(f.normal, pts[i]) == f.rhs) active.push_back(f.normal);
    if (rank_of(active) == h.dimension) h.vertices.push_back(pts[i]);
  }
  return h;
}

bool in_convex_hull(const IntVec& p, const std::vector<IntVec>& points) {
  if (points.empty()) return false;
  const std::size_t n = p.size();
  const std::size_t m = n + 1;
  const std::size_t cols = points.size();
  const std::size_t width = cols + m + 1;  // originals, artificials, rhs
  std::vector<RatVec> t(m, RatVec(width, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = i < n ? Rational(points[j][i]) : Rational(1);
    t[i][width - 1] = i < n ? Rational(p[i]) : Rational(1);
    if (t[i][width - 1] < 0) {
      for (std::size_t j = 0; j < cols; ++j) t[i][j] = -t[i][j];
      t[i][width - 1] = -t[i][width - 1];
    }
    t[i][cols + i] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = cols + i;

  // Objective row: minimise the sum of artificials.
  RatVec z(width, Rational(0));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < m; ++i) z[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) z[width - 1] -= t[i][width - 1];

  while (true) {
    std::size_t q = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (z[j] < 0) {
        q = j;
        break;
      }
    if (q == width) break;
    std::size_t r = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][q] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][q];
      if (r == m || ratio < best || (ratio == best && basis[i] < basis[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r == m) throw ConsistencyError("unbounded phase-one simplex");
    Rational piv = t[r][q];
    for (auto& x : t[r]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][q] == 0) continue;
      Rational f = t[i][q];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[r][j];
    }
    if (z[q] != 0) {
      Rational f = z[q];
      for (std::size_t j = 0; j < width; ++j) z[j] -= f * t[r][j];
    }
    basis[r] = q;
  }
  return z[width - 1] == 0;
}

std::vector<IntVec> extreme_points(const std::vector<IntVec>& points) {
  std::vector<IntVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<IntVec> others;
    others.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_convex_hull(pts[i], others)) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace affgr
