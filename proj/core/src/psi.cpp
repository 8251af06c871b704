#include "affgr/psi.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace affgr {

bool PsiSet::contains(const Coweight& mu) const {
  return std::binary_search(members.begin(), members.end(), mu);
}

std::optional<int> PsiSet::generation(const Coweight& mu) const {
  auto it = std::lower_bound(members.begin(), members.end(), mu);
  if (it == members.end() || *it != mu || generations.empty()) return std::nullopt;
  return generations[static_cast<std::size_t>(it - members.begin())];
}

std::vector<Coweight> step_set(const RootSystem& rs, const Coweight& mu, std::size_t root_id) {
  const Int p = rs.pair(mu, root_id);
  const Coweight& cor = rs.coroot(root_id);
  std::vector<Coweight> out{mu};
  Coweight cur = mu;
  if (p >= 0) {
    for (Int k = 1; k <= p; ++k) out.push_back(cur -= cor);
  } else {
    for (Int k = 1; k < -p; ++k) out.push_back(cur += cor);
  }
  return out;
}

PsiSet psi_infinity(const RootSystem& rs, const Coweight& lambda) {
  std::unordered_map<Coweight, int, CoweightHash> gen{{lambda, 0}};
  std::deque<Coweight> queue{lambda};
  while (!queue.empty()) {
    Coweight mu = std::move(queue.front());
    queue.pop_front();
    const int g = gen.at(mu);
    for (std::size_t id = 0; id < rs.num_positive_roots(); ++id)
      for (auto& nu : step_set(rs, mu, id))
        if (gen.emplace(nu, g + 1).second) queue.push_back(std::move(nu));
  }
  PsiSet out;
  out.base = lambda;
  for (auto& [mu, g] : gen) out.members.push_back(mu);
  std::sort(out.members.begin(), out.members.end());
  for (const auto& mu : out.members) out.generations.push_back(gen.at(mu));
  return out;
}

std::vector<Coweight> dominant_candidates(const RootSystem& rs, const Coweight& lambda) {
  const Coweight top = rs.dominant_part(lambda);
  const RatVec y = rs.coroot_coordinates(top);
  const std::size_t n = rs.rank();
  IntVec bound(n);
  for (std::size_t i = 0; i < n; ++i) bound[i] = to_int(floor(y[i]));
  std::vector<Coweight> out;
  IntVec m(n, 0);
  while (true) {
    Coweight nu = top - rs.from_coroot_coordinates(m);
    if (nu.is_dominant()) out.push_back(nu);
    std::size_t i = 0;
    while (i < n && m[i] == bound[i]) m[i++] = 0;
    if (i == n) break;
    ++m[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<bool> same_chamber_leq(const RootSystem& rs, const Coweight& mu, const Coweight& lambda) {
  auto w = rs.common_chamber(mu, lambda);
  if (!w) return std::nullopt;
  return rs.positive_sum_in_chamber(lambda - mu, *w);
}

const AffineWeylElement& IwahoriOrder::representative(const Coweight& lambda) {
  auto it = reps_.find(lambda);
  if (it == reps_.end()) it = reps_.emplace(lambda, comps_->iota(lambda)).first;
  return it->second;
}

bool IwahoriOrder::leq(const Coweight& mu, const Coweight& lambda) {
  if (comps_->component_of(mu).kappa != comps_->component_of(lambda).kappa) return false;
  // Copies: representative() may rehash the cache.
  AffineWeylElement u = representative(mu);
  AffineWeylElement v = representative(lambda);
  return bruhat_.leq(u, v);
}

PsiSet IwahoriOrder::psi_by_oracle(const Coweight& lambda) {
  const RootSystem& rs = comps_->root_system();
  PsiSet out;
  out.base = lambda;
  for (const auto& nu : dominant_candidates(rs, lambda))
    for (const auto& mu : rs.weyl_orbit(nu))
      if (leq(mu, lambda)) out.members.push_back(mu);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace affgr
