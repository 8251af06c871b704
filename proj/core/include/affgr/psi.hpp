#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "affgr/components.hpp"

namespace affgr {

// A closure Psi(lambda): sorted members, with the filtration index of each
// member when it was produced by psi_infinity.
struct PsiSet {
  Coweight base;
  std::vector<Coweight> members;
  std::vector<int> generations;  // parallel to members; empty when unknown

  std::size_t size() const { return members.size(); }
  bool contains(const Coweight& mu) const;
  std::optional<int> generation(const Coweight& mu) const;
};

/// S(mu, alpha).
std::vector<Coweight> step_set(const RootSystem& rs, const Coweight& mu, std::size_t root_id);

/// Least fixed point of the S(mu, alpha) filtration.
PsiSet psi_infinity(const RootSystem& rs, const Coweight& lambda);

/// Dominant coweights nu with lambda^+ - nu a non-negative coroot combination.
std::vector<Coweight> dominant_candidates(const RootSystem& rs, const Coweight& lambda);

/// If mu and lambda share a closed chamber w(C), whether lambda - mu is a
/// non-negative combination of w(simple coroots). nullopt otherwise.
std::optional<bool> same_chamber_leq(const RootSystem& rs, const Coweight& mu, const Coweight& lambda);

// The closure order on Iwahori orbits, decided through Bruhat order on
// minimal coset representatives. Caches representatives and Bruhat results.
class IwahoriOrder {
 public:
  explicit IwahoriOrder(const Components& comps) : comps_(&comps), bruhat_(comps.group()) {}

  const Components& components() const { return *comps_; }

  /// mu below lambda; false for coweights in different components.
  bool leq(const Coweight& mu, const Coweight& lambda);
  const AffineWeylElement& representative(const Coweight& lambda);

  /// Psi(lambda) by testing every candidate in the Weyl orbits of dominant_candidates.
  PsiSet psi_by_oracle(const Coweight& lambda);

 private:
  const Components* comps_;
  BruhatOracle bruhat_;
  std::unordered_map<Coweight, AffineWeylElement, CoweightHash> reps_;
};

}  // namespace affgr
