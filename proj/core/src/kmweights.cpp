#include "affgr/kmweights.hpp"

#include <sstream>

#include "affgr/psi.hpp"

namespace affgr {

AffineWeight& AffineWeight::operator+=(const AffineWeight& o) {
  if (classical.size() != o.classical.size()) throw ArgumentError("affine weight rank mismatch");
  level += o.level;
  for (std::size_t i = 0; i < classical.size(); ++i) classical[i] += o.classical[i];
  delta += o.delta;
  return *this;
}

AffineWeight operator*(const Rational& k, AffineWeight a) {
  a.level *= k;
  for (auto& x : a.classical) x *= k;
  a.delta *= k;
  return a;
}

std::string to_string(const AffineWeight& h) {
  std::ostringstream os;
  if (h.level != 1) os << to_string(h.level) << "·";
  os << "L0 + (";
  for (std::size_t i = 0; i < h.classical.size(); ++i) os << (i ? "," : "") << to_string(h.classical[i]);
  os << ")·X ";
  Rational m = -h.delta;
  if (m >= 0)
    os << "- " << to_string(m);
  else
    os << "+ " << to_string(-m);
  os << "·delta";
  return os.str();
}

namespace {

RatVec to_rat(const Coweight& c) {
  RatVec v;
  for (Int x : c.coords()) v.emplace_back(x);
  return v;
}

RatVec apply(const WeylElement& w, const RatVec& v) {
  const IntMatrix& m = w.matrix();
  RatVec r(v.size(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m(i, j) != 0) r[i] += m(i, j) * v[j];
  return r;
}

}  // namespace

LevelOneWeights::LevelOneWeights(const Components& comps) : comps_(&comps) {
  const RootSystem& rs = comps.root_system();
  const std::size_t n = rs.rank();
  // (x|y) = sum_j d_j x_j y_j^coroot, y^coroot = C^{-T} y.
  form_.assign(n, RatVec(n, Rational(0)));
  for (std::size_t k = 0; k < n; ++k) {
    Coweight e = Coweight::zero(n);
    e[k] = 1;
    RatVec col = rs.coroot_coordinates(e);
    for (std::size_t j = 0; j < n; ++j) form_[j][k] = rs.simple_ratios()[j] * col[j];
  }
}

Rational LevelOneWeights::bilinear(const RatVec& x, const RatVec& y) const {
  const std::size_t n = form_.size();
  if (x.size() != n || y.size() != n) throw ArgumentError("bilinear form rank mismatch");
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == 0) continue;
    Rational t = 0;
    for (std::size_t k = 0; k < n; ++k) t += form_[j][k] * y[k];
    s += x[j] * t;
  }
  return s;
}

Rational LevelOneWeights::bilinear(const Coweight& x, const Coweight& y) const {
  return bilinear(to_rat(x), to_rat(y));
}

AffineWeight LevelOneWeights::lambda0() const {
  return AffineWeight{1, RatVec(root_system().rank(), Rational(0)), 0};
}

AffineWeight LevelOneWeights::lambda_kappa(int kappa) const {
  return AffineWeight{1, to_rat(comps_->index(kappa).omega), 0};
}

AffineWeight LevelOneWeights::delta() const { return AffineWeight{0, RatVec(root_system().rank(), Rational(0)), 1}; }

AffineWeight LevelOneWeights::embed(const Coweight& classical) const { return AffineWeight{0, to_rat(classical), 0}; }

AffineWeight LevelOneWeights::act(const AffineWeylElement& x, const AffineWeight& h) const {
  if (h.classical.size() != root_system().rank()) throw ArgumentError("affine weight rank mismatch");
  const RatVec lam = to_rat(x.translation());
  AffineWeight out{h.level, apply(x.finite_part(), h.classical), h.delta};
  const Rational hl = bilinear(out.classical, lam);
  for (std::size_t i = 0; i < lam.size(); ++i) out.classical[i] += h.level * lam[i];
  out.delta -= hl + bilinear(lam, lam) / 2 * h.level;
  return out;
}

AffineWeight LevelOneWeights::varpi(const Coweight& lambda) const {
  const Coweight& omega = comps_->component_of(lambda).omega;
  AffineWeight out = lambda0();
  out.classical = to_rat(-lambda);
  out.delta = -(bilinear(lambda, lambda) - bilinear(omega, omega)) / 2;
  return out;
}

RatVec LevelOneWeights::project(const AffineWeight& h) const {
  if (h.level != 1) throw ArgumentError("projection is only defined at level one, got level " + to_string(h.level));
  RatVec out = h.classical;
  for (auto& x : out) x = -x;
  return out;
}

DualAffineRoot LevelOneWeights::eta(const AffineRoot& r) const {
  const RootSystem& rs = root_system();
  std::optional<std::size_t> id = rs.find_root(r.classical);
  bool negative = false;
  if (!id) {
    id = rs.find_root((-r).classical);
    negative = true;
  }
  if (!id) throw ArgumentError("eta is only defined on real affine roots");
  DualAffineRoot out{rs.coroot_coefficients(*id), Rational(r.k) * rs.root_ratio(*id)};
  if (negative)
    for (auto& x : out.coroot) x = -x;
  return out;
}

AffineWeight LevelOneWeights::as_weight(const DualAffineRoot& r) const {
  return AffineWeight{0, to_rat(root_system().from_coroot_coordinates(r.coroot)), r.delta};
}

DualAffineRoot LevelOneWeights::act(const AffineWeylElement& x, const DualAffineRoot& r) const {
  const RootSystem& rs = root_system();
  AffineWeight h = act(x, as_weight(r));
  Coweight c = Coweight::zero(rs.rank());
  for (std::size_t i = 0; i < c.rank(); ++i) c[i] = to_int(h.classical[i]);
  DualAffineRoot out;
  for (const auto& y : rs.coroot_coordinates(c)) out.coroot.push_back(to_int(y));
  out.delta = h.delta;
  return out;
}

bool LevelOneWeights::is_level_one_dominant(const Coweight& lambda) const {
  const RootSystem& rs = root_system();
  if (!lambda.is_dominant()) return false;
  return 1 - rs.pair(lambda, rs.highest_root_id()) >= 0;
}

std::optional<RatVec> LevelOneWeights::demazure_shift(const Coweight& lambda, std::size_t root_id, Int k) const {
  const RootSystem& rs = root_system();
  const Int p = rs.pair(lambda, root_id);
  AffineRoot r;
  if (p > 0 && k >= 1 && k <= p) {
    r = AffineRoot{rs.root(root_id), 0};
  } else if (p < -1 && k >= 1 && k < -p) {
    r = -AffineRoot{rs.root(root_id), -1};  // -alpha + delta
  } else {
    return std::nullopt;
  }
  AffineWeight h = varpi(lambda) + Rational(k) * as_weight(eta(r));
  return project(h);
}

std::optional<bool> LevelOneWeights::demazure_shift_check(const Coweight& lambda, std::size_t root_id, Int k) const {
  auto v = demazure_shift(lambda, root_id, k);
  if (!v) return std::nullopt;
  Coweight mu = Coweight::zero(lambda.rank());
  for (std::size_t i = 0; i < mu.rank(); ++i) {
    if (!is_integer((*v)[i])) return false;
    mu[i] = to_int((*v)[i]);
  }
  return psi_infinity(root_system(), lambda).contains(mu);
}

}  // namespace affgr
