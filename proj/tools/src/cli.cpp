#include "affgr_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "affgr/io.hpp"
#include "affgr/selftest.hpp"

namespace affgr::cli {

namespace {

struct Common {
  std::string type;
  std::string lambda;
  std::string mu;
  std::string basis = "fundamental";
  std::string format = "text";
};

// CLI11 reads "-4" or "-6,3" as an option name. Rewrite "--opt VALUE" as
// "--opt=VALUE" whenever VALUE looks like a negative number.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < args.size()) {
      const std::string& v = args[i + 1];
      if (v.size() >= 2 && v[0] == '-' && (std::isdigit(static_cast<unsigned char>(v[1])) || v[1] == '.')) {
        out.push_back(a + "=" + v);
        ++i;
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

void add_common(CLI::App* sub, Common& c, bool needs_lambda, bool needs_mu = false) {
  sub->add_option("--type", c.type, "Cartan type, e.g. A2, B3, G2")->required();
  auto* l = sub->add_option("--lambda", c.lambda, "coweight, comma separated");
  if (needs_lambda) l->required();
  if (needs_mu) sub->add_option("--mu", c.mu, "second coweight")->required();
  sub->add_option("--basis", c.basis, "coordinates of coweight arguments")
      ->check(CLI::IsMember({"fundamental", "coroot"}));
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

Basis basis_of(const Common& c) { return c.basis == "coroot" ? Basis::Coroot : Basis::Fundamental; }

std::string join(const std::vector<Coweight>& v, const char* sep = "\n") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + to_string(v[i]);
  return s;
}

std::string word_string(const std::vector<int>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

void emit(std::ostream& out, const Common& c, const Json& j, const std::string& text) {
  if (c.format == "json")
    out << j.dump(2) << '\n';
  else
    out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

void print_table(std::ostream& out, const RootSystem& rs, const RootPair& pair, const BraidScan* scan) {
  const auto& table = braid_table(pair.pattern);
  out << "braid table " << to_string(pair.pattern) << " for alpha=" << root_label(rs.root(pair.alpha))
      << ", beta=" << root_label(rs.root(pair.beta)) << "\n";
  out << "lambda written with a = <lambda,alpha>, b = <lambda,beta>; values are w(lambda) - x alpha^ - y beta^ as (x,y)\n";
  out << "row | conditions | R_alpha R_beta ... | R_beta R_alpha ... | hits\n";
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::string conds;
    for (std::size_t i = 0; i < table[k].conditions.size(); ++i)
      conds += (i ? ", " : "") + to_string(table[k].conditions[i]);
    std::size_t hits = 0;
    if (scan)
      for_each_in_box(2, scan->box, [&](const Coweight& lambda) {
        if (table[k].applies(rs.pair(lambda, pair.alpha), rs.pair(lambda, pair.beta))) ++hits;
      });
    out << k + 1 << " | " << conds << " | " << to_string(table[k].lhs) << " | " << to_string(table[k].rhs) << " | "
        << hits << "\n";
  }
  out << "critical lines:";
  for (const auto& h : critical_lines(pair.pattern)) out << ' ' << to_string(h);
  out << "\n";
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iwahori orbit closures in the affine Grassmannian", "affgr"};
  app.require_subcommand(1);
  Common c;

  auto* psi_cmd = app.add_subcommand("psi", "closure Psi(lambda)");
  add_common(psi_cmd, c, true);
  std::string method = "infinity";
  psi_cmd->add_option("--method", method, "infinity, oracle or closure")
      ->check(CLI::IsMember({"infinity", "oracle", "closure"}));

  auto* order_cmd = app.add_subcommand("order", "decide mu below lambda in the Iwahori order");
  add_common(order_cmd, c, true, true);

  std::string root_text;
  auto* rop_cmd = app.add_subcommand("rop", "apply R_alpha");
  add_common(rop_cmd, c, true);
  rop_cmd->add_option("--root", root_text, "root: simple index, #id or simple-root coordinates")->required();

  auto* closure_cmd = app.add_subcommand("closure", "closure of lambda under R-operators");
  add_common(closure_cmd, c, true);

  auto* dim_cmd = app.add_subcommand("dim", "dimension of the Iwahori orbit");
  add_common(dim_cmd, c, true);

  auto* covers_cmd = app.add_subcommand("covers", "orbits of codimension one in the closure");
  add_common(covers_cmd, c, true);

  std::string alpha_text = "1", beta_text = "2";
  auto* braid_cmd = app.add_subcommand("braid", "compare the two braid composites of R-operators");
  add_common(braid_cmd, c, true);
  braid_cmd->add_option("--alpha", alpha_text, "first root");
  braid_cmd->add_option("--beta", beta_text, "second root");

  Int box = 8;
  bool emit_table = false;
  auto* scan_cmd = app.add_subcommand("braid-scan", "braid relations over a box");
  add_common(scan_cmd, c, false);
  scan_cmd->add_option("--box", box, "radius")->check(CLI::Range(0, 64));
  scan_cmd->add_flag("--emit-table", emit_table, "print the braid table of the simple pair");

  auto* comp_cmd = app.add_subcommand("component", "connected component and coset representative");
  add_common(comp_cmd, c, true);

  int kappa = 0;
  auto* tr_cmd = app.add_subcommand("translate", "move a coroot-lattice coweight to component kappa");
  add_common(tr_cmd, c, true);
  tr_cmd->add_option("--kappa", kappa, "component index")->required();

  auto* varpi_cmd = app.add_subcommand("varpi", "maximal level-one weight of lambda");
  add_common(varpi_cmd, c, true);

  auto* poly_cmd = app.add_subcommand("polytope", "moment polytope of Psi(lambda)");
  add_common(poly_cmd, c, true);

  auto* gap_cmd = app.add_subcommand("gap-scan", "integral points of the polytope missing from Psi(lambda)");
  add_common(gap_cmd, c, true);

  SelftestOptions st;
  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
  self_cmd->add_option("--box", st.box, "coweight box radius")->check(CLI::Range(1, 8));
  self_cmd->add_option("--braid-box", st.braid_box, "braid table box radius")->check(CLI::Range(1, 16));
  self_cmd->add_option("--seed", st.seed, "seed for sampled checks");
  self_cmd->add_option("--report", st.report_path, "path of the exploratory report");

  try {
    std::vector<std::string> args = glue_negative_values(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kArgumentError;
  }

  try {
    if (self_cmd->parsed()) {
      bool ok = true;
      run_selftest(st, [&](const CriterionResult& r) {
        out << format_result(r) << '\n';
        for (const auto& f : r.findings) out << "  finding: " << f << '\n';
        if (!r.exploratory && !r.passed) ok = false;
      });
      return ok ? kOk : kCounterexample;
    }

    RootSystem rs(c.type);
    AffineWeylGroup g(rs);
    Components comps(g);
    auto coweight = [&](const std::string& text) { return parse_coweight(rs, text, basis_of(c)); };

    if (psi_cmd->parsed()) {
      const Coweight lambda = coweight(c.lambda);
      PsiSet psi;
      if (method == "oracle") {
        IwahoriOrder order(comps);
        psi = order.psi_by_oracle(lambda);
      } else if (method == "closure") {
        psi.base = lambda;
        psi.members = r_closure(rs, lambda);
      } else {
        psi = psi_infinity(rs, lambda);
      }
      std::ostringstream t;
      t << "Psi(" << to_string(lambda) << "): " << psi.size() << " members\n";
      for (std::size_t i = 0; i < psi.size(); ++i) {
        t << to_string(psi.members[i]);
        if (!psi.generations.empty()) t << "  gen " << psi.generations[i];
        t << '\n';
      }
      emit(out, c, to_json(psi), t.str());
    } else if (order_cmd->parsed()) {
      const Coweight mu = coweight(c.mu), lambda = coweight(c.lambda);
      IwahoriOrder order(comps);
      const bool leq = order.leq(mu, lambda);
      Json j{{"mu", to_json(mu)}, {"lambda", to_json(lambda)}, {"leq", leq}};
      emit(out, c, j, leq ? "true" : "false");
    } else if (rop_cmd->parsed()) {
      const Coweight lambda = coweight(c.lambda);
      const std::size_t id = parse_root(rs, root_text);
      const Coweight r = r_op(rs, lambda, id);
      Json j{{"lambda", to_json(lambda)}, {"root", root_label(rs.root(id))}, {"result", to_json(r)}};
      emit(out, c, j, to_string(r));
    } else if (closure_cmd->parsed()) {
      const Coweight lambda = coweight(c.lambda);
      const auto cl = r_closure(rs, lambda);
      Json j{{"lambda", to_json(lambda)}, {"members", to_json(cl)}};
      emit(out, c, j, join(cl));
    } else if (dim_cmd->parsed()) {
      const Coweight lambda = coweight(c.lambda);
      const Int d = dim_orbit(g, lambda);
      const auto routes = dimension_routes(g, lambda);
      Json j{{"lambda", to_json(lambda)}, {"dim", d}, {"via_rho", routes.via_rho}, {"via_length", routes.via_length}};
      emit(out, c, j, std::to_string(d));
    } else if (covers_cmd->parsed()) {
      const Coweight lambda = coweight(c.lambda);
      Json arr = Json::array();
      std::ostringstream t;
      for (const auto& cv : covers(g, lambda)) {
        arr.push_back(Json{{"mu", to_json(cv.mu)}, {"root", root_label(rs.root(cv.root_id))}});
        t << to_string(cv.mu) << "  via " << root_label(rs.root(cv.root_id)) << '\n';
      }
      emit(out, c, Json{{"lambda", to_json(lambda)}, {"covers", arr}}, t.str());
    } else if (braid_cmd->parsed()) {
      const Coweight lambda = coweight(c.lambda);
      const auto rep = braid_check(rs, lambda, parse_root(rs, alpha_text), parse_root(rs, beta_text));
      std::ostringstream t;
      t << to_string(rep.pair.pattern) << " alpha=" << root_label(rs.root(rep.pair.alpha))
        << " beta=" << root_label(rs.root(rep.pair.beta)) << '\n'
        << "lhs " << to_string(rep.lhs) << "\nrhs " << to_string(rep.rhs) << '\n'
        << (rep.equal ? "equal" : "unequal") << '\n';
      for (const auto& h : rep.critical_lines_hit) t << "on line " << to_string(h) << '\n';
      emit(out, c, to_json(rs, rep), t.str());
    } else if (scan_cmd->parsed()) {
      const BraidScan scan = braid_scan(rs, box);
      if (emit_table) {
        if (rs.rank() < 2) throw ArgumentError("--emit-table needs rank at least 2");
        const RootPair pair = classify_pair(rs, rs.simple_root_id(1), rs.simple_root_id(2));
        if (braid_table(pair.pattern).empty())
          throw ArgumentError("no braid table for pattern " + to_string(pair.pattern));
        print_table(out, rs, pair, &scan);
        return kOk;
      }
      std::ostringstream t;
      t << "alpha | beta | pattern | equal | unequal on critical lines | unequal elsewhere\n";
      for (const auto& e : scan.pairs)
        t << root_label(rs.root(e.pair.alpha)) << " | " << root_label(rs.root(e.pair.beta)) << " | "
          << to_string(e.pair.pattern) << " | " << e.counts.at(BraidBucket::Equal) << " | "
          << e.counts.at(BraidBucket::UnequalOnCriticalLine) << " | " << e.counts.at(BraidBucket::UnequalElsewhere)
          << '\n';
      emit(out, c, to_json(rs, scan), t.str());
    } else if (comp_cmd->parsed()) {
      const Coweight lambda = coweight(c.lambda);
      const auto& ci = comps.component_of(lambda);
      const auto rep = comps.iota(lambda);
      Json j{{"lambda", to_json(lambda)},
             {"kappa", ci.kappa},
             {"omega", to_json(ci.omega)},
             {"representative", to_json(rs, rep)}};
      std::ostringstream t;
      t << "kappa " << ci.kappa << "\nomega " << to_string(ci.omega) << "\nrepresentative tau_("
        << to_string(rep.translation()) << ") w" << word_string(rs.reduced_word(rep.finite_part())) << '\n';
      emit(out, c, j, t.str());
    } else if (tr_cmd->parsed()) {
      const Coweight lambda = coweight(c.lambda);
      const Coweight image = comps.translate(lambda, kappa);
      Json j{{"lambda", to_json(lambda)}, {"kappa", kappa}, {"image", to_json(image)}};
      emit(out, c, j, to_string(image));
    } else if (varpi_cmd->parsed()) {
      LevelOneWeights km(comps);
      const AffineWeight h = km.varpi(coweight(c.lambda));
      emit(out, c, to_json(h), to_string(h));
    } else if (poly_cmd->parsed() || gap_cmd->parsed()) {
      const Coweight lambda = coweight(c.lambda);
      const MomentPolytope mp = moment_polytope(rs, lambda);
      if (gap_cmd->parsed() && !mp.hull) throw UnsupportedRank("gap-scan is limited to rank <= 3");
      const auto gaps = mp.hull ? integral_gap_scan(rs, mp) : std::vector<Coweight>{};
      std::ostringstream t;
      if (poly_cmd->parsed()) {
        t << "vertices\n" << join(mp.vertices) << '\n';
        if (mp.hull) {
          t << "facets (normal . x <= rhs)\n";
          for (const auto& f : mp.hull->facets) t << Json(f.normal).dump() << " <= " << f.rhs << '\n';
          for (const auto& e : mp.hull->equalities) t << Json(e.normal).dump() << " == " << e.rhs << '\n';
        }
      }
      t << "gaps " << gaps.size() << '\n';
      if (!gaps.empty()) t << join(gaps) << '\n';
      Json j = to_json(mp, gaps);
      if (gap_cmd->parsed()) j = Json{{"lambda", to_json(lambda)}, {"gaps", to_json(gaps)}};
      emit(out, c, j, t.str());
    }
    return kOk;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kConsistencyError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  }
}

}  // namespace affgr::cli
