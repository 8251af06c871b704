#include "affgr/components.hpp"

#include <algorithm>

namespace affgr {

Components::Components(const AffineWeylGroup& group) : g_(&group) {
  const RootSystem& rs = group.root_system();
  const WeylElement w0 = rs.longest_element();
  for (int kappa : rs.minuscule_indices()) {
    indices_.push_back(ComponentIndex{kappa, rs.fundamental_coweight(kappa)});
    std::vector<int> gens;
    for (int i = 1; i <= static_cast<int>(rs.rank()); ++i)
      if (i != kappa) gens.push_back(i);
    WeylElement wk = rs.longest_element(gens);
    w_upper_.push_back(wk * w0);
    w_kappa_.push_back(std::move(wk));
  }
}

const ComponentIndex& Components::index(int kappa) const {
  for (const auto& c : indices_)
    if (c.kappa == kappa) return c;
  throw ArgumentError("kappa = " + std::to_string(kappa) + " is not a component index of " +
                      root_system().type().name());
}

const ComponentIndex& Components::component_of(const Coweight& lambda) const {
  for (const auto& c : indices_)
    if (root_system().in_coroot_lattice(lambda + c.omega)) return c;
  throw ConsistencyError("no component index for " + to_string(lambda));
}

std::vector<int> Components::parabolic_generators(int kappa) const {
  index(kappa);
  std::vector<int> out;
  for (int i = 0; i <= static_cast<int>(root_system().rank()); ++i)
    if (i != kappa) out.push_back(i);
  return out;
}

bool Components::verify_conjugation(int kappa) const {
  const ComponentIndex& c = index(kappa);
  const AffineWeylGroup& g = *g_;
  auto ad = [&](const AffineWeylElement& x) {
    return g.multiply(g.translation(c.omega), g.multiply(x, g.translation(-c.omega)));
  };
  const RootSystem& rs = root_system();
  if (kappa != 0 && ad(g.embed(rs.reflection(rs.highest_root_id()))) != g.simple_reflection(0)) return false;
  for (int i = 1; i <= static_cast<int>(rs.rank()); ++i)
    if (i != kappa && ad(g.simple_reflection(i)) != g.simple_reflection(i)) return false;
  return true;
}

const WeylElement& Components::w_kappa(int kappa) const {
  const ComponentIndex& c = index(kappa);
  return w_kappa_[static_cast<std::size_t>(&c - indices_.data())];
}

const WeylElement& Components::w_upper(int kappa) const {
  const ComponentIndex& c = index(kappa);
  return w_upper_[static_cast<std::size_t>(&c - indices_.data())];
}

AffineWeylElement Components::gamma(int kappa) const {
  return AffineWeylElement(index(kappa).omega, w_upper(kappa));
}

Coweight Components::translate(const Coweight& lambda, int kappa) const {
  if (!root_system().in_coroot_lattice(lambda))
    throw ArgumentError("translate expects a coweight in the coroot lattice, got " + to_string(lambda));
  return w_upper(kappa).apply(lambda) - index(kappa).omega;
}

AffineWeylElement Components::iota(const Coweight& lambda) const {
  const ComponentIndex& c = component_of(lambda);
  return g_->min_coset_rep(g_->translation(-(lambda + c.omega)), c.kappa);
}

}  // namespace affgr
