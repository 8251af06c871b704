#include "affgr/afweyl.hpp"

#include <algorithm>

#include <boost/container_hash/hash.hpp>

namespace affgr {

bool AffineRoot::is_positive() const {
  if (k != 0) return k > 0;
  bool nonneg = std::all_of(classical.begin(), classical.end(), [](Int x) { return x >= 0; });
  bool nonzero = std::any_of(classical.begin(), classical.end(), [](Int x) { return x != 0; });
  return nonneg && nonzero;
}

AffineRoot AffineRoot::operator-() const {
  AffineRoot r{classical, checked_sub(0, k)};
  for (auto& x : r.classical) x = checked_sub(0, x);
  return r;
}

AffineWeylElement AffineWeylGroup::identity() const {
  return AffineWeylElement(Coweight::zero(rank()), WeylElement::identity(rank()));
}

AffineWeylElement AffineWeylGroup::translation(const Coweight& lambda) const {
  if (lambda.rank() != rank()) throw ArgumentError("translation rank mismatch");
  return AffineWeylElement(lambda, WeylElement::identity(rank()));
}

AffineWeylElement AffineWeylGroup::embed(const WeylElement& w) const {
  return AffineWeylElement(Coweight::zero(rank()), w);
}

AffineWeylElement AffineWeylGroup::simple_reflection(int i) const {
  if (i == 0) {
    auto t = rs_->highest_root_id();
    return AffineWeylElement(rs_->coroot(t), rs_->reflection(t));
  }
  return embed(rs_->simple_reflection(i));
}

AffineWeylElement AffineWeylGroup::reflection(std::size_t root_id, Int k) const {
  return AffineWeylElement(checked_sub(0, k) * rs_->coroot(root_id), rs_->reflection(root_id));
}

AffineWeylElement AffineWeylGroup::reflection(const AffineRoot& r) const {
  if (auto id = rs_->find_root(r.classical)) return reflection(*id, r.k);
  AffineRoot neg = -r;
  if (auto id = rs_->find_root(neg.classical)) return reflection(*id, neg.k);
  throw ArgumentError("not a real affine root");
}

AffineWeylElement AffineWeylGroup::from_word(std::span<const int> word) const {
  AffineWeylElement x = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_multiply_simple(*it, x);
  return x;
}

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& a, const AffineWeylElement& b) const {
  const WeylElement& w1 = a.finite_part();
  return AffineWeylElement(a.translation() + w1.apply(b.translation()), w1 * b.finite_part());
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& x) const {
  WeylElement winv = x.finite_part().inverse();
  return AffineWeylElement(-winv.apply(x.translation()), winv);
}

AffineWeylElement AffineWeylGroup::left_multiply_simple(int i, const AffineWeylElement& x) const {
  if (i < 0 || i > static_cast<int>(rank())) throw ArgumentError("affine simple index out of range");
  if (i == 0) {
    auto t = rs_->highest_root_id();
    WeylElement st = rs_->reflection(t);
    return AffineWeylElement(rs_->coroot(t) + st.apply(x.translation()), st * x.finite_part());
  }
  return AffineWeylElement(rs_->simple_reflect(x.translation(), i), rs_->simple_reflection(i) * x.finite_part());
}

bool AffineWeylGroup::is_extended(const AffineWeylElement& x) const {
  return !rs_->in_coroot_lattice(x.translation());
}

Int AffineWeylGroup::length(const Coweight& lambda, const Coweight& key) const {
  Int len = 0;
  for (std::size_t id = 0; id < rs_->num_positive_roots(); ++id) {
    Int p = rs_->pair(lambda, id);
    Int term = rs_->pair(key, id) > 0 ? checked_abs(p) : checked_abs(checked_sub(p, 1));
    len = checked_add(len, term);
  }
  return len;
}

Int AffineWeylGroup::length(const AffineWeylElement& x) const {
  return length(x.translation(), x.finite_part().chamber_key());
}

AffineRoot AffineWeylGroup::act(const AffineWeylElement& x, const AffineRoot& r) const {
  IntVec wa = x.finite_part().apply_to_root(r.classical);
  Int p = rs_->pair(x.translation(), wa);
  return AffineRoot{wa, checked_sub(r.k, p)};
}

Coweight AffineWeylGroup::act(const AffineWeylElement& x, const Coweight& mu) const {
  return x.finite_part().apply(mu) + x.translation();
}

std::vector<int> AffineWeylGroup::descent_set(const AffineWeylElement& x) const {
  std::vector<int> out;
  Int lx = length(x);
  for (int i = 0; i <= static_cast<int>(rank()); ++i)
    if (length(left_multiply_simple(i, x)) < lx) out.push_back(i);
  return out;
}

std::vector<int> AffineWeylGroup::reduced_word(const AffineWeylElement& x) const {
  std::vector<int> word;
  AffineWeylElement y = x;
  Int ly = length(y);
  while (ly > 0) {
    bool found = false;
    for (int i = 0; i <= static_cast<int>(rank()); ++i) {
      AffineWeylElement z = left_multiply_simple(i, y);
      Int lz = length(z);
      if (lz < ly) {
        word.push_back(i);
        y = std::move(z);
        ly = lz;
        found = true;
        break;
      }
    }
    if (!found) throw ConsistencyError("element of positive length without a left descent");
  }
  return word;
}

void AffineWeylGroup::check_kappa(int kappa) const {
  auto m = rs_->minuscule_indices();
  if (std::find(m.begin(), m.end(), kappa) == m.end())
    throw ArgumentError("kappa = " + std::to_string(kappa) + " is not a component index of " + rs_->type().name());
}

AffineWeylElement AffineWeylGroup::min_coset_rep(const AffineWeylElement& x, int kappa) const {
  check_kappa(kappa);
  AffineWeylElement y = x;
  Int ly = length(y);
  bool shrank = true;
  while (shrank) {
    shrank = false;
    for (int i = 0; i <= static_cast<int>(rank()); ++i) {
      if (i == kappa) continue;
      AffineWeylElement z = multiply(y, simple_reflection(i));
      Int lz = length(z);
      if (lz < ly) {
        y = std::move(z);
        ly = lz;
        shrank = true;
      }
    }
  }
  return y;
}

std::size_t BruhatOracle::KeyHash::operator()(const IntVec& v) const noexcept {
  return boost::hash_range(v.begin(), v.end());
}

IntVec BruhatOracle::encode(const AffineWeylElement& u, const AffineWeylElement& v) const {
  IntVec key;
  key.reserve(4 * g_->rank());
  for (const auto* x : {&u, &v}) {
    const auto& t = x->translation().coords();
    key.insert(key.end(), t.begin(), t.end());
    const auto k = x->finite_part().chamber_key();
    key.insert(key.end(), k.coords().begin(), k.coords().end());
  }
  return key;
}

bool BruhatOracle::leq(const AffineWeylElement& u0, const AffineWeylElement& v0) {
  const RootSystem& rs = g_->root_system();
  if (!rs.in_coroot_lattice(u0.translation() - v0.translation()))
    throw ArgumentError("Bruhat comparison between different cosets of the extended affine Weyl group");

  AffineWeylElement u = u0, v = v0;
  std::vector<IntVec> path;
  bool result = false;
  while (true) {
    IntVec key = encode(u, v);
    if (auto it = memo_.find(key); it != memo_.end()) {
      result = it->second;
      break;
    }
    path.push_back(std::move(key));
    const Int lu = g_->length(u), lv = g_->length(v);
    if (lu > lv) {
      result = false;
      break;
    }
    if (lu == lv) {
      result = (u == v);
      break;
    }
    // lv > lu >= 0, so v has a left descent.
    bool stepped = false;
    for (int i = 0; i <= static_cast<int>(g_->rank()); ++i) {
      AffineWeylElement sv = g_->left_multiply_simple(i, v);
      if (g_->length(sv) >= lv) continue;
      AffineWeylElement su = g_->left_multiply_simple(i, u);
      if (g_->length(su) < lu) u = std::move(su);
      v = std::move(sv);
      stepped = true;
      break;
    }
    if (!stepped) throw ConsistencyError("element of positive length without a left descent");
  }
  for (auto& k : path) memo_.emplace(std::move(k), result);
  return result;
}

}  // namespace affgr
