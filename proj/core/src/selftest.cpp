#include "affgr/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "affgr/io.hpp"
#include "affgr/kmweights.hpp"
#include "affgr/polytope.hpp"
#include "affgr/psi.hpp"
#include "affgr/rops.hpp"

namespace affgr {

namespace {

constexpr double kOracleSecondsLimit = 60.0;
constexpr double kBraidSecondsLimit = 30.0;
constexpr std::size_t kMaxSamples = 5;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Counts failures and keeps the first few descriptions.
struct Mismatches {
  std::size_t count = 0;
  std::vector<std::string> samples;
  void add(std::string s) {
    ++count;
    if (samples.size() < kMaxSamples) samples.push_back(std::move(s));
  }
  std::string summary() const {
    std::string s = std::to_string(count) + " mismatches";
    for (const auto& x : samples) s += "; " + x;
    return s;
  }
};

template <class Body>
CriterionResult run_criterion(int id, std::string title, bool exploratory, Body&& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.exploratory = exploratory;
  auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = since(t0);
  return r;
}

std::string show(const std::vector<Coweight>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s + "}";
}

std::vector<Coweight> sorted(std::vector<Coweight> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Coweight coroot_combo(const RootSystem& rs, IntVec x) { return rs.from_coroot_coordinates(x); }

// Types and radii for the dimension scan. E7 and E8 use radius 3 and 2: the
// full radius-4 boxes hold 4.8M and 43M coweights.
std::vector<std::pair<std::string, Int>> dimension_types(Int box) {
  return {{"A1", box}, {"A2", box}, {"A3", box}, {"A4", box}, {"A5", box}, {"B2", box},
          {"B3", box}, {"B4", box}, {"C3", box}, {"C4", box}, {"D4", box}, {"D5", box},
          {"F4", box}, {"G2", box}, {"E6", box}, {"E7", std::min<Int>(box, 3)}, {"E8", std::min<Int>(box, 2)}};
}

}  // namespace

CriterionResult criterion_oracle_equivalence(const SelftestOptions& opt) {
  return run_criterion(1, "oracle equivalence psi_infinity = psi_by_oracle = r_closure", false, [&](auto& r) {
    auto t0 = Clock::now();
    Mismatches bad;
    std::size_t checked = 0;
    for (const char* label : {"A1", "A2", "B2"}) {
      RootSystem rs(label);
      AffineWeylGroup g(rs);
      Components comps(g);
      IwahoriOrder order(comps);
      for_each_in_box(rs.rank(), opt.box, [&](const Coweight& lambda) {
        auto inf = psi_infinity(rs, lambda).members;
        auto orc = order.psi_by_oracle(lambda).members;
        auto clo = r_closure(rs, lambda);
        ++checked;
        if (inf != orc || inf != clo)
          bad.add(std::string(label) + " " + to_string(lambda) + ": |inf|=" + std::to_string(inf.size()) +
                  " |oracle|=" + std::to_string(orc.size()) + " |closure|=" + std::to_string(clo.size()));
      });
    }
    const double secs = since(t0);
    std::ostringstream os;
    os << checked << " coweights in A1/A2/B2 box " << opt.box << ", " << bad.summary() << ", " << std::fixed
       << std::setprecision(1) << secs << " s (limit " << kOracleSecondsLimit << " s)";
    r.detail = os.str();
    r.passed = bad.count == 0 && secs < kOracleSecondsLimit;
  });
}

CriterionResult criterion_boundary_examples(const SelftestOptions&) {
  return run_criterion(2, "A2 boundary examples", false, [&](auto& r) {
    RootSystem rs("A2");
    AffineWeylGroup g(rs);
    Mismatches bad;
    auto cw = [&](Int a, Int b) { return coroot_combo(rs, {a, b}); };
    struct Case {
      Coweight lambda;
      std::vector<Coweight> expected;
    };
    std::vector<Case> cases = {
        {cw(1, 1), {cw(1, 0), cw(0, 1)}},
        {cw(-1, -1), {cw(0, 0)}},
        {cw(-2, -2), {cw(-2, -1), cw(-1, -2), cw(1, 1)}},
        {cw(-3, 0), {cw(-1, 2), cw(-3, -3)}},
    };
    for (auto& c : cases) {
      auto got = boundary(g, c.lambda);
      auto want = sorted(c.expected);
      if (got != want) bad.add("boundary of " + to_string(c.lambda) + " = " + show(got) + ", expected " + show(want));
    }
    const Coweight lam = cw(-3, 0);
    auto expect_dim = [&](const Coweight& mu, Int d) {
      Int got = dim_orbit(g, mu);
      if (got != d) bad.add("dim " + to_string(mu) + " = " + std::to_string(got) + ", expected " + std::to_string(d));
    };
    expect_dim(lam, 10);
    expect_dim(cw(-1, 2), 9);
    expect_dim(cw(-3, -3), 9);
    Coweight target = r_op(rs, lam, rs.simple_root_id(1));
    if (target != cw(2, 0)) bad.add("R_a1(-3a1^) = " + to_string(target));
    expect_dim(target, 7);
    r.detail = bad.summary();
    r.passed = bad.count == 0;
  });
}

CriterionResult criterion_braid_tables(const SelftestOptions& opt) {
  return run_criterion(3, "braid tables and critical lines", false, [&](auto& r) {
    auto t0 = Clock::now();
    Mismatches bad;
    std::ostringstream info;
    for (const char* label : {"A2", "B2"}) {
      RootSystem rs(label);
      const RootPair pair = classify_pair(rs, rs.simple_root_id(1), rs.simple_root_id(2));
      const auto& table = braid_table(pair.pattern);
      const auto& printed = braid_table(pair.pattern, TableEdition::Printed);
      std::vector<std::size_t> hits(table.size(), 0);
      std::set<std::size_t> printed_wrong;
      std::size_t uncovered = 0, printed_uncovered = 0;
      for_each_in_box(2, opt.braid_box, [&](const Coweight& lambda) {
        const Int pa = rs.pair(lambda, pair.alpha), pb = rs.pair(lambda, pair.beta);
        BraidReport rep = braid_check(rs, lambda, pair.alpha, pair.beta);
        auto matches = [&](const BraidTableRow& row) {
          return rep.lhs == evaluate(rs, pair, lambda, row.lhs) && rep.rhs == evaluate(rs, pair, lambda, row.rhs);
        };
        bool any = false, any_printed = false;
        for (std::size_t k = 0; k < table.size(); ++k) {
          if (printed[k].applies(pa, pb)) {
            any_printed = true;
            if (!matches(printed[k])) printed_wrong.insert(k + 1);
          }
          if (!table[k].applies(pa, pb)) continue;
          any = true;
          ++hits[k];
          if (!matches(table[k])) {
            std::ostringstream os;
            os << label << " row " << k + 1 << " at <l,a>=" << pa << ",<l,b>=" << pb << ": got " << to_string(rep.lhs)
               << " | " << to_string(rep.rhs) << ", table " << to_string(evaluate(rs, pair, lambda, table[k].lhs))
               << " | " << to_string(evaluate(rs, pair, lambda, table[k].rhs));
            bad.add(os.str());
          }
        }
        if (!any) ++uncovered;
        if (!any_printed) ++printed_uncovered;
      });
      for (std::size_t k = 0; k < table.size(); ++k)
        if (hits[k] == 0) bad.add(std::string(label) + " row " + std::to_string(k + 1) + " never exercised");
      BraidScan scan = braid_scan(rs, opt.braid_box);
      const std::size_t elsewhere = scan.count(BraidBucket::UnequalElsewhere);
      if (elsewhere != 0) bad.add(std::string(label) + ": " + std::to_string(elsewhere) + " failures off the critical lines");
      info << label << ": " << table.size() << " rows, " << uncovered << " coweights outside every row, scan "
           << scan.count(BraidBucket::Equal) << "/" << scan.count(BraidBucket::UnequalOnCriticalLine) << "/" << elsewhere;
      if (!printed_wrong.empty() || printed_uncovered != 0) {
        info << ", printed rows disagreeing {";
        bool first = true;
        for (auto k : printed_wrong) info << (std::exchange(first, false) ? "" : ",") << k;
        info << "} with " << printed_uncovered << " uncovered, checked corrected rows {";
        first = true;
        for (auto k : braid_table_errata(pair.pattern)) info << (std::exchange(first, false) ? "" : ",") << k;
        info << "}";
      }
      info << "; ";
    }
    const double secs = since(t0);
    info << bad.summary() << ", " << std::fixed << std::setprecision(1) << secs << " s (limit " << kBraidSecondsLimit
         << " s)";
    r.detail = info.str();
    r.passed = bad.count == 0 && secs < kBraidSecondsLimit;
  });
}

CriterionResult criterion_same_chamber(const SelftestOptions& opt) {
  return run_criterion(4, "same-chamber criterion agrees with the oracle", false, [&](auto& r) {
    Mismatches bad;
    std::size_t compared = 0;
    for (const char* label : {"A2", "B2"}) {
      RootSystem rs(label);
      AffineWeylGroup g(rs);
      Components comps(g);
      IwahoriOrder order(comps);
      std::vector<Coweight> pts;
      for_each_in_box(2, opt.box, [&](const Coweight& c) { pts.push_back(c); });
      for (const auto& mu : pts)
        for (const auto& lambda : pts) {
          auto sc = same_chamber_leq(rs, mu, lambda);
          if (!sc) continue;
          ++compared;
          if (*sc != order.leq(mu, lambda))
            bad.add(std::string(label) + " mu=" + to_string(mu) + " lambda=" + to_string(lambda));
        }
    }
    r.detail = std::to_string(compared) + " same-chamber pairs, " + bad.summary();
    r.passed = bad.count == 0 && compared > 0;
  });
}

CriterionResult criterion_dimension(const SelftestOptions& opt) {
  return run_criterion(5, "dimension formulas agree", false, [&](auto& r) {
    Mismatches bad;
    std::ostringstream info;
    std::size_t total = 0;
    for (const auto& [label, radius] : dimension_types(opt.box)) {
      RootSystem rs(label);
      AffineWeylGroup g(rs);
      std::size_t n = 0;
      for_each_in_box(rs.rank(), radius, [&](const Coweight& lambda) {
        auto d = dimension_routes(g, lambda);
        ++n;
        if (d.via_rho != d.via_length)
          bad.add(label + " " + to_string(lambda) + ": " + std::to_string(d.via_rho) + " vs " +
                  std::to_string(d.via_length));
      });
      total += n;
      info << label << "[" << radius << "] ";
    }
    r.detail = std::to_string(total) + " coweights over " + info.str() + "; " + bad.summary();
    r.passed = bad.count == 0;
  });
}

CriterionResult criterion_covers(const SelftestOptions& opt) {
  return run_criterion(6, "cover characterizations and cover formula", false, [&](auto& r) {
    Mismatches bad;
    std::size_t case1 = 0, case2 = 0, cover_count = 0;
    const std::vector<std::pair<std::string, Int>> types = {{"A1", opt.box}, {"A2", opt.box}, {"B2", opt.box},
                                                            {"G2", opt.box}, {"A3", opt.box},
                                                            {"B3", opt.box},          {"C3", opt.box},
                                                            {"D4", std::min<Int>(opt.box, 2)},
                                                            {"F4", std::min<Int>(opt.box, 2)}};
    for (const auto& [label, radius] : types) {
      RootSystem rs(label);
      AffineWeylGroup g(rs);
      for_each_in_box(rs.rank(), radius, [&](const Coweight& lambda) {
        for (std::size_t id = 0; id < rs.num_positive_roots(); ++id) {
          auto ok = cover_characterization_check(g, lambda, id);
          if (!ok) continue;
          (rs.pair(lambda, id) > 0 ? case1 : case2)++;
          if (!*ok) bad.add(label + " lambda=" + to_string(lambda) + " root=" + root_label(rs.root(id)));
        }
        for (const auto& c : covers(g, lambda)) {
          ++cover_count;
          if (!cover_formula_holds(g, lambda, c.mu))
            bad.add(label + " cover formula " + to_string(c.mu) + " -> " + to_string(lambda));
        }
      });
    }
    r.detail = std::to_string(case1) + " positive-pairing cases, " + std::to_string(case2) +
               " alpha-regular negative cases, " + std::to_string(cover_count) + " covers; " + bad.summary();
    r.passed = bad.count == 0;
  });
}

CriterionResult criterion_component_bijection(const SelftestOptions& opt) {
  return run_criterion(7, "component translation is an order isomorphism", false, [&](auto& r) {
    Mismatches bad;
    std::size_t sets = 0, pairs = 0;
    for (auto [label, kappa] : {std::pair{"A2", 1}, std::pair{"A2", 2}, std::pair{"B2", 1}}) {
      RootSystem rs(label);
      AffineWeylGroup g(rs);
      Components comps(g);
      IwahoriOrder order(comps);
      std::vector<Coweight> pts;
      for_each_in_box(rs.rank(), opt.component_box, [&](const Coweight& c) {
        if (rs.in_coroot_lattice(c)) pts.push_back(c);
      });
      for (const auto& lambda : pts) {
        const Coweight image = comps.translate(lambda, kappa);
        std::vector<Coweight> mapped;
        const auto psi = psi_infinity(rs, lambda);
        for (const auto& mu : psi.members) mapped.push_back(comps.translate(mu, kappa));
        mapped = sorted(mapped);
        ++sets;
        if (mapped.size() != psi.size() || mapped != psi_infinity(rs, image).members)
          bad.add(std::string(label) + " kappa=" + std::to_string(kappa) + " lambda=" + to_string(lambda));
      }
      for (const auto& mu : pts)
        for (const auto& lambda : pts) {
          ++pairs;
          if (order.leq(mu, lambda) != order.leq(comps.translate(mu, kappa), comps.translate(lambda, kappa)))
            bad.add(std::string(label) + " order mu=" + to_string(mu) + " lambda=" + to_string(lambda));
        }
    }
    r.detail = std::to_string(sets) + " sets, " + std::to_string(pairs) + " ordered pairs; " + bad.summary();
    r.passed = bad.count == 0;
  });
}

CriterionResult criterion_dual_weights(const SelftestOptions& opt) {
  return run_criterion(8, "level-one weights, stabilizers, eta equivariance", false, [&](auto& r) {
    Mismatches bad;
    {
      RootSystem rs("A1");
      AffineWeylGroup g(rs);
      Components comps(g);
      LevelOneWeights km(comps);
      AffineWeight expected{1, {Rational(4)}, Rational(-4)};
      AffineWeight got = km.varpi(Coweight{-4});
      if (got != expected) bad.add("varpi(-2a^) = " + to_string(got));
    }
    std::size_t kappas = 0;
    for (const char* label : {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
      RootSystem rs(label);
      AffineWeylGroup g(rs);
      Components comps(g);
      LevelOneWeights km(comps);
      for (const auto& c : comps.indices()) {
        ++kappas;
        const AffineWeight lk = km.lambda_kappa(c.kappa);
        if (km.varpi(-c.omega) != lk) bad.add(std::string(label) + " varpi(-omega_" + std::to_string(c.kappa) + ")");
        for (int i = 0; i <= static_cast<int>(rs.rank()); ++i) {
          const bool moved = km.act(g.simple_reflection(i), lk) != lk;
          if (moved != (i == c.kappa))
            bad.add(std::string(label) + " s_" + std::to_string(i) + " on L_" + std::to_string(c.kappa));
        }
      }
    }
    std::mt19937 rng(opt.seed);
    std::size_t samples = 0;
    for (const char* label : {"A2", "B2"}) {
      RootSystem rs(label);
      AffineWeylGroup g(rs);
      Components comps(g);
      LevelOneWeights km(comps);
      std::uniform_int_distribution<Int> coeff(-3, 3), kdist(-5, 5);
      std::uniform_int_distribution<int> len(0, 6), letter(1, static_cast<int>(rs.rank()));
      std::uniform_int_distribution<std::size_t> rootd(0, rs.num_positive_roots() - 1);
      std::bernoulli_distribution sign(0.5);
      for (int s = 0; s < opt.eta_samples; ++s) {
        IntVec x(rs.rank());
        for (auto& v : x) v = coeff(rng);
        std::vector<int> word(static_cast<std::size_t>(len(rng)));
        for (auto& l : word) l = letter(rng);
        AffineWeylElement elt(rs.from_coroot_coordinates(x), rs.from_word(word));
        AffineRoot root{rs.root(rootd(rng)), kdist(rng)};
        if (sign(rng)) root = -root;
        ++samples;
        if (km.eta(g.act(elt, root)) != km.act(elt, km.eta(root)))
          bad.add(std::string(label) + " eta equivariance, root " + root_label(root.classical) + "+" +
                  std::to_string(root.k) + "d");
      }
    }
    r.detail = std::to_string(kappas) + " component weights, " + std::to_string(samples) + " eta samples; " +
               bad.summary();
    r.passed = bad.count == 0;
  });
}

CriterionResult criterion_moment_polytope(const SelftestOptions& opt) {
  return run_criterion(9, "moment polytope maxima, vertices and gap scan", false, [&](auto& r) {
    Mismatches bad;
    {
      RootSystem rs("A2");
      const Coweight lambda = coroot_combo(rs, {-3, -3});
      const auto psi = psi_infinity(rs, lambda);
      auto maxima = chamber_maxima(rs, psi, WeylElement::identity(2));
      const std::vector<Coweight> want{coroot_combo(rs, {2, 2})};
      if (maxima != want) bad.add("A2 dominant maxima " + show(maxima));
      auto gaps = integral_gap_scan(rs, lambda);
      if (!gaps.empty()) bad.add("A2 gaps for -3(a1^+a2^): " + show(gaps));
    }
    std::size_t dominant = 0;
    const std::vector<std::pair<std::string, Int>> types = {{"A1", opt.box}, {"A2", opt.box}, {"B2", opt.box},
                                                            {"G2", opt.box}, {"A3", opt.box},
                                                            {"B3", opt.box},          {"C3", opt.box}};
    for (const auto& [label, radius] : types) {
      RootSystem rs(label);
      for_each_in_box(rs.rank(), radius, [&](const Coweight& lambda) {
        if (!lambda.is_dominant()) return;
        ++dominant;
        auto mp = moment_polytope(rs, lambda);
        if (mp.vertices != rs.weyl_orbit(lambda)) bad.add(label + " vertices of " + to_string(lambda));
        auto gaps = integral_gap_scan(rs, mp);
        if (!gaps.empty()) bad.add(label + " gaps for " + to_string(lambda) + ": " + show(gaps));
      });
    }
    r.detail = std::to_string(dominant) + " dominant coweights; " + bad.summary();
    r.passed = bad.count == 0;
  });
}

CriterionResult criterion_exploratory(const SelftestOptions& opt) {
  return run_criterion(10, "exploratory report: G2 braid scan and chamber maxima census", true, [&](auto& r) {
    std::ostringstream rep;
    rep << "# Exploratory report\n\n";

    rep << "## G2 braid scan on [-" << opt.g2_braid_box << "," << opt.g2_braid_box << "]^2\n\n";
    {
      RootSystem rs("G2");
      BraidScan scan = braid_scan(rs, opt.g2_braid_box);
      rep << "| alpha | beta | pattern | equal | unequal on candidate lines | unequal elsewhere |\n";
      rep << "|---|---|---|---|---|---|\n";
      for (const auto& e : scan.pairs) {
        rep << "| " << root_label(rs.root(e.pair.alpha)) << " | " << root_label(rs.root(e.pair.beta)) << " | "
            << to_string(e.pair.pattern) << " | " << e.counts.at(BraidBucket::Equal) << " | "
            << e.counts.at(BraidBucket::UnequalOnCriticalLine) << " | " << e.counts.at(BraidBucket::UnequalElsewhere)
            << " |\n";
        for (const auto& f : e.failures)
          if (f.critical_lines_hit.empty())
            r.findings.push_back("G2 braid failure off candidate lines: pair (" + root_label(rs.root(e.pair.alpha)) +
                                 ", " + root_label(rs.root(e.pair.beta)) + ") " + to_string(e.pair.pattern) +
                                 " at " + to_string(f.lambda));
      }
      rep << "\nCandidate lines (alpha short): ";
      for (const auto& h : critical_lines(BraidPattern::G2)) rep << to_string(h) << ' ';
      rep << "\n\n";
    }

    rep << "## Braid failures versus the antidominant chamber (A2, B2, G2)\n\n";
    for (const char* label : {"A2", "B2", "G2"}) {
      RootSystem rs(label);
      const RootPair pair = classify_pair(rs, rs.simple_root_id(1), rs.simple_root_id(2));
      const WeylElement w0 = rs.longest_element();
      const Int box = std::string(label) == "G2" ? opt.g2_braid_box : opt.braid_box;
      std::size_t on_line_outside = 0, on_line_outside_fail = 0, fail_in_w0 = 0;
      for_each_in_box(2, box, [&](const Coweight& lambda) {
        BraidReport b = braid_check(rs, lambda, pair.alpha, pair.beta);
        const bool in_w0 = rs.in_chamber(lambda, w0);
        if (!b.equal && in_w0) ++fail_in_w0;
        if (!b.critical_lines_hit.empty() && !in_w0) {
          ++on_line_outside;
          if (!b.equal) ++on_line_outside_fail;
        }
      });
      rep << "- " << label << " simple pair: " << on_line_outside_fail << " of " << on_line_outside
          << " coweights on a (candidate) line outside C_w0 fail; " << fail_in_w0 << " failures inside C_w0\n";
      if (on_line_outside_fail != on_line_outside)
        r.findings.push_back(std::string(label) + ": " + std::to_string(on_line_outside - on_line_outside_fail) +
                             " coweights on a critical line outside C_w0 satisfy the braid relation");
      if (fail_in_w0 != 0)
        r.findings.push_back(std::string(label) + ": " + std::to_string(fail_in_w0) + " braid failures inside C_w0");
    }
    rep << "\n";

    rep << "## |M_y(lambda)| census on [-" << opt.box << "," << opt.box << "]^rank\n\n";
    rep << "| type | coweights | chambers checked | histogram of |M_y| |\n|---|---|---|---|\n";
    for (const char* label : {"A2", "B2", "G2", "A3"}) {
      RootSystem rs(label);
      const Int radius = rs.rank() >= 3 ? std::min<Int>(opt.box, 2) : opt.box;
      std::map<std::size_t, std::size_t> hist;
      std::size_t count = 0;
      for_each_in_box(rs.rank(), radius, [&](const Coweight& lambda) {
        ++count;
        const auto psi = psi_infinity(rs, lambda);
        for (const auto& y : rs.elements()) {
          auto m = chamber_maxima(rs, psi, y);
          ++hist[m.size()];
          if (m.size() > 1)
            r.findings.push_back(std::string(label) + " lambda=" + to_string(lambda) + " y=" +
                                 Json(rs.reduced_word(y)).dump() + " |M_y|=" + std::to_string(m.size()) + " " +
                                 show(m));
        }
      });
      std::size_t chambers = 0;
      for (auto& [k, v] : hist) chambers += v;
      rep << "| " << label << "[" << radius << "] | " << count << " | " << chambers << " | ";
      for (auto& [k, v] : hist) rep << k << ":" << v << " ";
      rep << "|\n";
    }
    rep << "\n## Findings\n\n";
    if (r.findings.empty()) rep << "none\n";
    for (const auto& f : r.findings) rep << "- " << f << "\n";

    if (!opt.report_path.empty()) {
      std::ofstream out(opt.report_path);
      if (!out) throw std::runtime_error("cannot write report to " + opt.report_path);
      out << rep.str();
    }
    r.detail = std::to_string(r.findings.size()) + " findings" +
               (opt.report_path.empty() ? std::string() : ", report at " + opt.report_path);
    r.passed = true;
  });
}

const std::vector<CriterionFn>& acceptance_criteria() {
  static const std::vector<CriterionFn> all = {
      criterion_oracle_equivalence, criterion_boundary_examples, criterion_braid_tables, criterion_same_chamber,
      criterion_dimension,          criterion_covers,              criterion_component_bijection,
      criterion_dual_weights,       criterion_moment_polytope,     criterion_exploratory};
  return all;
}

std::vector<CriterionResult> run_selftest(const SelftestOptions& opt,
                                          const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (auto fn : acceptance_criteria()) {
    out.push_back(fn(opt));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.title;
  if (r.exploratory) os << " (exploratory)";
  os << " [" << std::fixed << std::setprecision(2) << r.seconds << " s] " << r.detail;
  return os.str();
}

}  // namespace affgr
