#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "affgr/rootsys.hpp"

namespace affgr {

// alpha + k delta, alpha in simple-root coordinates (any sign, nonzero for real roots).
struct AffineRoot {
  IntVec classical;
  Int k = 0;

  bool is_positive() const;
  AffineRoot operator-() const;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

// tau_lambda w. The translation may lie in the coweight lattice rather than
// the coroot lattice; such elements belong to the extended group.
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  AffineWeylElement(Coweight trans, WeylElement fin) : trans_(std::move(trans)), fin_(std::move(fin)) {}

  const Coweight& translation() const { return trans_; }
  const WeylElement& finite_part() const { return fin_; }

  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.trans_ == b.trans_ && a.fin_ == b.fin_;
  }

 private:
  Coweight trans_;
  WeylElement fin_;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(const RootSystem& rs) : rs_(&rs) {}

  const RootSystem& root_system() const { return *rs_; }
  std::size_t rank() const { return rs_->rank(); }

  AffineWeylElement identity() const;
  AffineWeylElement translation(const Coweight& lambda) const;
  AffineWeylElement embed(const WeylElement& w) const;
  /// s_i for i in 0..rank, with s_0 = tau_{theta coroot} s_theta.
  AffineWeylElement simple_reflection(int i) const;
  /// s_{alpha,k} = tau_{-k alpha coroot} s_alpha for a positive root id.
  AffineWeylElement reflection(std::size_t root_id, Int k) const;
  /// Reflection in a real affine root of either sign.
  AffineWeylElement reflection(const AffineRoot& r) const;
  AffineWeylElement from_word(std::span<const int> word) const;

  AffineWeylElement multiply(const AffineWeylElement& a, const AffineWeylElement& b) const;
  AffineWeylElement inverse(const AffineWeylElement& x) const;
  /// s_i x without going through a general product.
  AffineWeylElement left_multiply_simple(int i, const AffineWeylElement& x) const;

  bool is_extended(const AffineWeylElement& x) const;
  Int length(const AffineWeylElement& x) const;
  /// Length of tau_lambda w given lambda and the chamber key of w.
  Int length(const Coweight& lambda, const Coweight& chamber_key) const;

  AffineRoot act(const AffineWeylElement& x, const AffineRoot& r) const;
  Coweight act(const AffineWeylElement& x, const Coweight& mu) const;

  std::vector<int> descent_set(const AffineWeylElement& x) const;
  /// Greedy left-descent extraction: x = s_{i1} ... s_{ik} g with l(g) = 0.
  std::vector<int> reduced_word(const AffineWeylElement& x) const;

  /// Minimal-length element of x W_kappa, W_kappa generated by s_i, i != kappa.
  AffineWeylElement min_coset_rep(const AffineWeylElement& x, int kappa) const;

 private:
  void check_kappa(int kappa) const;
  const RootSystem* rs_;
};

// Bruhat order on the affine Weyl group via the lifting property. Holds a
// memo table, so one instance must not be shared between threads.
class BruhatOracle {
 public:
  explicit BruhatOracle(const AffineWeylGroup& group) : g_(&group) {}

  bool leq(const AffineWeylElement& u, const AffineWeylElement& v);
  std::size_t cache_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  struct KeyHash {
    std::size_t operator()(const IntVec& v) const noexcept;
  };
  IntVec encode(const AffineWeylElement& u, const AffineWeylElement& v) const;

  const AffineWeylGroup* g_;
  std::unordered_map<IntVec, bool, KeyHash> memo_;
};

}  // namespace affgr
