#pragma once

#include <optional>
#include <string>

#include "affgr/components.hpp"

namespace affgr {

// level * L0 + classical + delta * d, with classical in fundamental-coweight
// coordinates over Q.
struct AffineWeight {
  Rational level = 0;
  RatVec classical;
  Rational delta = 0;

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  AffineWeight& operator+=(const AffineWeight& o);
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator*(const Rational& k, AffineWeight a);
};

/// "L0 + c·X - m·delta", e.g. "L0 + (2,-1)·X - 4·delta".
std::string to_string(const AffineWeight& h);

// Real root of the dual affine algebra: coroot (simple-coroot coordinates) + delta multiple.
struct DualAffineRoot {
  IntVec coroot;
  Rational delta = 0;
  friend bool operator==(const DualAffineRoot&, const DualAffineRoot&) = default;
};

class LevelOneWeights {
 public:
  explicit LevelOneWeights(const Components& comps);

  const Components& components() const { return *comps_; }
  const RootSystem& root_system() const { return comps_->root_system(); }

  /// Normalised form with (theta coroot | theta coroot) = 2.
  Rational bilinear(const RatVec& x, const RatVec& y) const;
  Rational bilinear(const Coweight& x, const Coweight& y) const;

  AffineWeight lambda0() const;
  AffineWeight lambda_kappa(int kappa) const;
  AffineWeight delta() const;
  AffineWeight embed(const Coweight& classical) const;  // level 0, delta 0

  AffineWeight act(const AffineWeylElement& x, const AffineWeight& h) const;
  /// tau_{-lambda-omega_kappa}(L_kappa) in closed form.
  AffineWeight varpi(const Coweight& lambda) const;
  /// -classical. Throws ArgumentError unless the level is 1.
  RatVec project(const AffineWeight& h) const;

  /// alpha + k delta  ->  alpha coroot + k r_alpha delta. Throws ArgumentError for imaginary roots.
  DualAffineRoot eta(const AffineRoot& r) const;
  /// Dual action computed through act() on the level-zero weight, independently of eta.
  DualAffineRoot act(const AffineWeylElement& x, const DualAffineRoot& r) const;
  AffineWeight as_weight(const DualAffineRoot& r) const;

  /// <L0 + lambda, alpha_i> >= 0 for i in 0..rank, using <., alpha_0> = 1 - <lambda, theta>.
  bool is_level_one_dominant(const Coweight& lambda) const;

  /// Projects varpi(lambda) + k eta(alpha) (or + k eta(-alpha + delta)) and tests
  /// membership in Psi(lambda). nullopt outside the hypotheses.
  std::optional<bool> demazure_shift_check(const Coweight& lambda, std::size_t root_id, Int k) const;
  /// The projected shifted weight itself; nullopt outside the hypotheses.
  std::optional<RatVec> demazure_shift(const Coweight& lambda, std::size_t root_id, Int k) const;

 private:
  const Components* comps_;
  std::vector<RatVec> form_;  // (x|y) = x^T form_ y in fundamental coordinates
};

}  // namespace affgr
