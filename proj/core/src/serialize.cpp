#include <algorithm>
#include <charconv>

#include "affgr/io.hpp"

namespace affgr {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Coweight parse_coweight(const RootSystem& rs, std::string_view text, Basis basis) {
  if (basis == Basis::Fundamental) {
    IntVec v = parse_int_list(text);
    if (v.size() != rs.rank())
      throw ArgumentError("expected " + std::to_string(rs.rank()) + " coordinates, got " + std::to_string(v.size()));
    return Coweight(std::move(v));
  }
  RatVec x;
  for (auto tok : split(text, ',')) x.push_back(parse_rational(trim(tok)));
  if (x.size() != rs.rank())
    throw ArgumentError("expected " + std::to_string(rs.rank()) + " coordinates, got " + std::to_string(x.size()));
  Coweight c = Coweight::zero(rs.rank());
  for (std::size_t k = 0; k < rs.rank(); ++k) {
    Rational s = 0;
    for (std::size_t j = 0; j < rs.rank(); ++j) s += x[j] * rs.cartan(j, k);
    if (!is_integer(s)) throw ArgumentError("coroot coordinates '" + std::string(text) + "' are not a coweight");
    c[k] = to_int(s);
  }
  return c;
}

Json to_json(const Coweight& c) { return Json(c.coords()); }

Json to_json(const std::vector<Coweight>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

Json to_json(const PsiSet& psi) {
  Json j;
  j["lambda"] = to_json(psi.base);
  j["members"] = to_json(psi.members);
  Json g = Json::object();
  for (std::size_t i = 0; i < psi.generations.size(); ++i) g[to_string(psi.members[i])] = psi.generations[i];
  j["generations"] = g;
  return j;
}

Json to_json(const RootSystem& rs, const AffineWeylElement& x) {
  Json j;
  j["trans"] = to_json(x.translation());
  j["word"] = rs.reduced_word(x.finite_part());
  return j;
}

Json to_json(const AffineWeight& h) {
  Json j;
  j["level"] = to_string(h.level);
  Json c = Json::array();
  for (const auto& x : h.classical) c.push_back(to_string(x));
  j["classical"] = c;
  j["delta"] = to_string(h.delta);
  return j;
}

Json to_json(const DualAffineRoot& r) {
  Json j;
  j["coroot"] = r.coroot;
  j["delta"] = to_string(r.delta);
  return j;
}

Json to_json(const MomentPolytope& mp, const std::vector<Coweight>& gaps) {
  Json j;
  j["lambda"] = to_json(mp.base);
  j["vertices"] = to_json(mp.vertices);
  Json facets = Json::array();
  Json eqs = Json::array();
  if (mp.hull) {
    for (const auto& f : mp.hull->facets) facets.push_back(Json{{"normal", f.normal}, {"rhs", std::to_string(f.rhs)}});
    for (const auto& e : mp.hull->equalities) eqs.push_back(Json{{"normal", e.normal}, {"rhs", std::to_string(e.rhs)}});
  }
  j["facets"] = facets;
  j["equalities"] = eqs;
  j["gaps"] = to_json(gaps);
  return j;
}

std::string root_label(const IntVec& beta) {
  std::string s;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    if (beta[i] < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    Int a = beta[i] < 0 ? -beta[i] : beta[i];
    if (a != 1) s += std::to_string(a);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::size_t parse_root(const RootSystem& rs, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ArgumentError("empty root");
  if (text.front() == '#') {
    IntVec v = parse_int_list(text.substr(1));
    if (v.size() != 1 || v[0] < 0 || static_cast<std::size_t>(v[0]) >= rs.num_positive_roots())
      throw ArgumentError("root id out of range: " + std::string(text));
    return static_cast<std::size_t>(v[0]);
  }
  IntVec v = parse_int_list(text);
  if (v.size() == 1 && rs.rank() != 1) return rs.simple_root_id(static_cast<int>(v[0]));
  if (auto id = rs.find_root(v)) return *id;
  throw ArgumentError("not a positive root of " + rs.type().name() + ": " + std::string(text));
}

Json to_json(const RootSystem& rs, const BraidReport& rep) {
  Json j;
  j["alpha"] = root_label(rs.root(rep.pair.alpha));
  j["beta"] = root_label(rs.root(rep.pair.beta));
  j["pattern"] = to_string(rep.pair.pattern);
  j["pairings"] = {rep.pair.alpha_on_beta, rep.pair.beta_on_alpha};
  j["lambda"] = to_json(rep.lambda);
  j["lhs"] = to_json(rep.lhs);
  j["rhs"] = to_json(rep.rhs);
  j["equal"] = rep.equal;
  Json hits = Json::array();
  for (const auto& h : rep.critical_lines_hit) hits.push_back(to_string(h));
  j["critical_lines_hit"] = hits;
  return j;
}

Json to_json(const RootSystem& rs, const BraidScan& scan) {
  Json j;
  j["type"] = scan.type;
  j["box"] = scan.box;
  Json pairs = Json::array();
  for (const auto& e : scan.pairs) {
    Json p;
    p["alpha"] = root_label(rs.root(e.pair.alpha));
    p["beta"] = root_label(rs.root(e.pair.beta));
    p["pattern"] = to_string(e.pair.pattern);
    Json counts = Json::object();
    for (const auto& [b, n] : e.counts) counts[to_string(b)] = n;
    p["counts"] = counts;
    Json elsewhere = Json::array();
    for (const auto& f : e.failures)
      if (f.critical_lines_hit.empty()) elsewhere.push_back(to_json(f.lambda));
    p["unequal_elsewhere"] = elsewhere;
    pairs.push_back(p);
  }
  j["pairs"] = pairs;
  Json totals = Json::object();
  for (auto b : {BraidBucket::Equal, BraidBucket::UnequalOnCriticalLine, BraidBucket::UnequalElsewhere})
    totals[to_string(b)] = scan.count(b);
  j["totals"] = totals;
  return j;
}

}  // namespace affgr
