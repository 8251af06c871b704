#pragma once

#include <vector>

#include "affgr/afweyl.hpp"

namespace affgr {

struct ComponentIndex {
  int kappa = 0;
  Coweight omega;  // fundamental coweight, zero for kappa = 0

  friend bool operator==(const ComponentIndex&, const ComponentIndex&) = default;
};

// Connected components of the affine Grassmannian, indexed by P/Q.
class Components {
 public:
  explicit Components(const AffineWeylGroup& group);

  const AffineWeylGroup& group() const { return *g_; }
  const RootSystem& root_system() const { return g_->root_system(); }

  const std::vector<ComponentIndex>& indices() const { return indices_; }
  /// Throws ArgumentError when kappa is not in M-hat.
  const ComponentIndex& index(int kappa) const;
  /// The unique kappa with lambda + omega_kappa in the coroot lattice.
  const ComponentIndex& component_of(const Coweight& lambda) const;

  /// I_kappa = {0..rank} minus kappa.
  std::vector<int> parabolic_generators(int kappa) const;
  /// Ad_{omega_kappa} maps s_theta to s_0 and fixes s_i for i in I minus kappa.
  bool verify_conjugation(int kappa) const;

  /// Longest element of the parabolic subgroup of W generated by s_i, i in I minus kappa.
  const WeylElement& w_kappa(int kappa) const;
  /// w^kappa = w_kappa w_0.
  const WeylElement& w_upper(int kappa) const;
  /// gamma_kappa = tau_{omega_kappa} w^kappa, a length-zero element.
  AffineWeylElement gamma(int kappa) const;

  /// rho_kappa(lambda) = w^kappa(lambda) - omega_kappa for lambda in the coroot lattice.
  Coweight translate(const Coweight& lambda, int kappa) const;

  /// Minimal representative of tau_{-lambda-omega_kappa} W_kappa, kappa the component of lambda.
  AffineWeylElement iota(const Coweight& lambda) const;

 private:
  const AffineWeylGroup* g_;
  std::vector<ComponentIndex> indices_;
  std::vector<WeylElement> w_kappa_;
  std::vector<WeylElement> w_upper_;
};

}  // namespace affgr
