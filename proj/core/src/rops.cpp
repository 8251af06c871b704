#include "affgr/rops.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace affgr {

namespace {

// w(x) for w = s_{i1} ... s_{ik}.
Coweight apply_word(const RootSystem& rs, const std::vector<int>& word, Coweight x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = rs.simple_reflect(x, *it);
  return x;
}

Coweight apply_word_inverse(const RootSystem& rs, const std::vector<int>& word, Coweight x) {
  for (int i : word) x = rs.simple_reflect(x, i);
  return x;
}

}  // namespace

Coweight r_op(const RootSystem& rs, const Coweight& lambda, std::size_t root_id) {
  const Int p = rs.pair(lambda, root_id);
  Coweight s = rs.reflect(lambda, root_id);
  if (p >= 0) return s;
  return s - rs.coroot(root_id);
}

std::vector<Coweight> r_closure(const RootSystem& rs, const Coweight& lambda) {
  std::unordered_set<Coweight, CoweightHash> seen{lambda};
  std::deque<Coweight> queue{lambda};
  while (!queue.empty()) {
    Coweight mu = std::move(queue.front());
    queue.pop_front();
    for (std::size_t id = 0; id < rs.num_positive_roots(); ++id) {
      Coweight nu = r_op(rs, mu, id);
      if (seen.insert(nu).second) queue.push_back(std::move(nu));
    }
  }
  std::vector<Coweight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

DimensionRoutes dimension_routes(const AffineWeylGroup& g, const Coweight& lambda) {
  const RootSystem& rs = g.root_system();
  std::vector<int> word;
  Coweight top = rs.dominant_part(lambda, &word);
  DimensionRoutes d;
  d.via_rho = checked_sub(rs.rho_pair(top), static_cast<Int>(word.size()));
  Coweight key = apply_word(rs, word, Coweight(IntVec(rs.rank(), 1)));
  d.via_length = g.length(-lambda, key);
  return d;
}

Int dim_orbit(const AffineWeylGroup& g, const Coweight& lambda) {
  auto d = dimension_routes(g, lambda);
  if (d.via_rho != d.via_length)
    throw ConsistencyError("dimension formulas disagree at " + to_string(lambda) + ": " + std::to_string(d.via_rho) +
                           " vs " + std::to_string(d.via_length));
  return d.via_rho;
}

bool is_alpha_regular(const RootSystem& rs, const Coweight& lambda, std::size_t root_id) {
  const Int p = rs.pair(lambda, root_id);
  if (p > 0) return true;
  if (p == 0) return false;
  std::vector<int> word;
  rs.dominant_part(lambda, &word);
  return apply_word_inverse(rs, word, lambda + rs.coroot(root_id)).is_dominant();
}

bool is_n_regular(const RootSystem& rs, const Coweight& lambda, Int n) {
  if (n < 0) throw ArgumentError("regularity level must be non-negative");
  Coweight top = rs.dominant_part(lambda);
  return std::all_of(top.coords().begin(), top.coords().end(), [&](Int x) { return x >= n; });
}

std::vector<Cover> covers(const AffineWeylGroup& g, const Coweight& lambda) {
  const RootSystem& rs = g.root_system();
  const Int d = dim_orbit(g, lambda);
  std::vector<Cover> out;
  for (std::size_t id = 0; id < rs.num_positive_roots(); ++id) {
    Coweight mu = r_op(rs, lambda, id);
    if (dim_orbit(g, mu) == d - 1) out.push_back(Cover{std::move(mu), id});
  }
  return out;
}

std::vector<Coweight> boundary(const AffineWeylGroup& g, const Coweight& lambda) {
  std::set<Coweight> s;
  for (auto& c : covers(g, lambda)) s.insert(c.mu);
  return {s.begin(), s.end()};
}

std::optional<bool> cover_characterization_check(const AffineWeylGroup& g, const Coweight& lambda,
                                                 std::size_t root_id) {
  const RootSystem& rs = g.root_system();
  const Int p = rs.pair(lambda, root_id);
  const Coweight mu = r_op(rs, lambda, root_id);
  const bool direct = dim_orbit(g, mu) == dim_orbit(g, lambda) - 1;
  if (p > 0) {
    WeylElement w = rs.dominant_translate(lambda).w;
    const bool weyl_cover = rs.length(rs.reflection(root_id) * w) == rs.length(w) + 1;
    return weyl_cover == direct;
  }
  if (p < 0 && is_alpha_regular(rs, lambda, root_id)) {
    std::vector<int> wl, wm;
    rs.dominant_part(lambda, &wl);
    rs.dominant_part(mu, &wm);
    Coweight pulled = apply_word_inverse(rs, wl, rs.coroot(root_id));
    const Int lhs = static_cast<Int>(wl.size()) - static_cast<Int>(wm.size());
    const bool criterion = lhs == -rs.rho_pair(pulled) - 1;
    return criterion == direct;
  }
  return std::nullopt;
}

bool cover_formula_holds(const AffineWeylGroup& g, const Coweight& lambda, const Coweight& mu) {
  const RootSystem& rs = g.root_system();
  std::vector<int> wl, wm;
  Coweight lp = rs.dominant_part(lambda, &wl);
  Coweight mp = rs.dominant_part(mu, &wm);
  return static_cast<Int>(wl.size()) - static_cast<Int>(wm.size()) == rs.rho_pair(lp - mp) - 1;
}

// ---------------------------------------------------------------- braids

std::string to_string(BraidPattern p) {
  switch (p) {
    case BraidPattern::Orthogonal: return "orthogonal";
    case BraidPattern::A2: return "A2";
    case BraidPattern::B2: return "B2";
    case BraidPattern::G2: return "G2";
  }
  return "?";
}

int braid_length(BraidPattern p) {
  switch (p) {
    case BraidPattern::Orthogonal: return 2;
    case BraidPattern::A2: return 3;
    case BraidPattern::B2: return 4;
    case BraidPattern::G2: return 6;
  }
  return 0;
}

RootPair classify_pair(const RootSystem& rs, std::size_t a, std::size_t b) {
  if (a >= rs.num_positive_roots() || b >= rs.num_positive_roots()) throw ArgumentError("root id out of range");
  if (a == b) throw ArgumentError("braid check needs two distinct roots");
  RootPair r{a, b, BraidPattern::Orthogonal, rs.pair(rs.coroot(b), a), rs.pair(rs.coroot(a), b)};
  auto swap = [&] {
    std::swap(r.alpha, r.beta);
    std::swap(r.alpha_on_beta, r.beta_on_alpha);
  };
  const Int p = r.alpha_on_beta, q = r.beta_on_alpha;
  if (p == 0 && q == 0) {
    r.pattern = BraidPattern::Orthogonal;
  } else if (p == -1 && q == -1) {
    r.pattern = BraidPattern::A2;
  } else if ((p == -1 && q == -2) || (p == -2 && q == -1)) {
    r.pattern = BraidPattern::B2;
    if (p == -2) swap();
  } else if ((p == -1 && q == -3) || (p == -3 && q == -1)) {
    r.pattern = BraidPattern::G2;
    if (p == -3) swap();
  } else {
    throw ArgumentError("roots do not form a rank-2 simple system (pairings " + std::to_string(p) + ", " +
                        std::to_string(q) + ")");
  }
  return r;
}

std::string to_string(const CriticalLine& h) {
  std::ostringstream os;
  os << "H(";
  auto term = [&](Int c, const char* name, bool first) {
    if (c == 0) return;
    if (!first) os << '+';
    if (c != 1) os << c;
    os << name;
  };
  term(h.ca, "a", true);
  term(h.cb, "b", h.ca == 0);
  os << ',' << h.level << ')';
  return os.str();
}

std::vector<CriticalLine> critical_lines(BraidPattern p) {
  switch (p) {
    case BraidPattern::Orthogonal: return {};
    case BraidPattern::A2: return {{1, 1, -1}};
    case BraidPattern::B2: return {{1, 1, -1}, {2, 1, -1}, {2, 1, -2}};
    case BraidPattern::G2: return {{2, 1, -1}, {3, 2, -1}};
  }
  return {};
}

Coweight braid_w(const RootSystem& rs, const RootPair& pair, const Coweight& lambda) {
  const int n = braid_length(pair.pattern);
  Coweight x = lambda;
  // s_alpha s_beta ... with n letters; the rightmost letter acts first.
  for (int k = n - 1; k >= 0; --k) x = rs.reflect(x, k % 2 == 0 ? pair.alpha : pair.beta);
  return x;
}

BraidReport braid_check(const RootSystem& rs, const Coweight& lambda, std::size_t a, std::size_t b) {
  BraidReport rep;
  rep.pair = classify_pair(rs, a, b);
  rep.lambda = lambda;
  const int n = braid_length(rep.pair.pattern);
  auto composite = [&](std::size_t first_letter, std::size_t second_letter) {
    Coweight x = lambda;
    for (int k = n - 1; k >= 0; --k) x = r_op(rs, x, k % 2 == 0 ? first_letter : second_letter);
    return x;
  };
  rep.lhs = composite(rep.pair.alpha, rep.pair.beta);
  rep.rhs = composite(rep.pair.beta, rep.pair.alpha);
  rep.equal = rep.lhs == rep.rhs;
  const Int pa = rs.pair(lambda, rep.pair.alpha), pb = rs.pair(lambda, rep.pair.beta);
  for (const auto& h : critical_lines(rep.pair.pattern))
    if (checked_add(checked_mul(h.ca, pa), checked_mul(h.cb, pb)) == h.level) rep.critical_lines_hit.push_back(h);
  return rep;
}

Coweight evaluate(const RootSystem& rs, const RootPair& pair, const Coweight& lambda, const BraidExpr& e) {
  return braid_w(rs, pair, lambda) - e.a * rs.coroot(pair.alpha) - e.b * rs.coroot(pair.beta);
}

std::string to_string(BraidBucket b) {
  switch (b) {
    case BraidBucket::Equal: return "equal";
    case BraidBucket::UnequalOnCriticalLine: return "unequal-on-critical-line";
    case BraidBucket::UnequalElsewhere: return "unequal-elsewhere";
  }
  return "?";
}

std::size_t BraidScan::count(BraidBucket b) const {
  std::size_t n = 0;
  for (const auto& e : pairs)
    if (auto it = e.counts.find(b); it != e.counts.end()) n += it->second;
  return n;
}

BraidScan braid_scan(const RootSystem& rs, Int box) {
  if (box < 0) throw ArgumentError("box radius must be non-negative");
  BraidScan scan{rs.type().name(), box, {}};
  for (std::size_t a = 0; a < rs.num_positive_roots(); ++a)
    for (std::size_t b = a + 1; b < rs.num_positive_roots(); ++b) {
      RootPair pair;
      try {
        pair = classify_pair(rs, a, b);
      } catch (const ArgumentError&) {
        continue;
      }
      BraidScanEntry entry{pair, {}, {}};
      for (auto bucket : {BraidBucket::Equal, BraidBucket::UnequalOnCriticalLine, BraidBucket::UnequalElsewhere})
        entry.counts[bucket] = 0;
      for_each_in_box(rs.rank(), box, [&](const Coweight& lambda) {
        BraidReport rep = braid_check(rs, lambda, a, b);
        BraidBucket bucket = rep.equal ? BraidBucket::Equal
                             : rep.critical_lines_hit.empty() ? BraidBucket::UnequalElsewhere
                                                              : BraidBucket::UnequalOnCriticalLine;
        ++entry.counts[bucket];
        if (!rep.equal) entry.failures.push_back(std::move(rep));
      });
      scan.pairs.push_back(std::move(entry));
    }
  return scan;
}

}  // namespace affgr
