#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affgr/afweyl.hpp"

namespace affgr {

/// R_alpha(lambda): s_alpha(lambda) if <lambda,alpha> >= 0, else s_alpha(lambda) - alpha coroot.
Coweight r_op(const RootSystem& rs, const Coweight& lambda, std::size_t root_id);

/// Closure of {lambda} under all R-operators, sorted.
std::vector<Coweight> r_closure(const RootSystem& rs, const Coweight& lambda);

struct DimensionRoutes {
  Int via_rho = 0;     // 2<lambda^+, rho> - l(w^lambda)
  Int via_length = 0;  // l(tau_{-lambda} w^lambda)
};
DimensionRoutes dimension_routes(const AffineWeylGroup& g, const Coweight& lambda);
/// Dimension of the Iwahori orbit. Throws ConsistencyError if the two routes disagree.
Int dim_orbit(const AffineWeylGroup& g, const Coweight& lambda);

bool is_alpha_regular(const RootSystem& rs, const Coweight& lambda, std::size_t root_id);
bool is_n_regular(const RootSystem& rs, const Coweight& lambda, Int n);

struct Cover {
  Coweight mu;
  std::size_t root_id;
  friend bool operator==(const Cover&, const Cover&) = default;
};
/// All (R_alpha(lambda), alpha) one dimension below lambda.
std::vector<Cover> covers(const AffineWeylGroup& g, const Coweight& lambda);
/// The distinct first components of covers(), sorted.
std::vector<Coweight> boundary(const AffineWeylGroup& g, const Coweight& lambda);

/// Compares the Weyl-cover criterion (<lambda,alpha> > 0) or the length
/// identity (<lambda,alpha> < 0, alpha-regular) with the direct dimension
/// test. nullopt when neither case applies.
std::optional<bool> cover_characterization_check(const AffineWeylGroup& g, const Coweight& lambda,
                                                 std::size_t root_id);

/// l(w^lambda) - l(w^mu) = 2<lambda^+ - mu^+, rho> - 1 for a cover mu of lambda.
bool cover_formula_holds(const AffineWeylGroup& g, const Coweight& lambda, const Coweight& mu);

// ---------------------------------------------------------------- braids

enum class BraidPattern { Orthogonal, A2, B2, G2 };
std::string to_string(BraidPattern p);

// A pair of positive roots, ordered so that in the B2 and G2 patterns alpha
// is the short root.
struct RootPair {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  BraidPattern pattern = BraidPattern::Orthogonal;
  Int alpha_on_beta = 0;  // <alpha, beta coroot>
  Int beta_on_alpha = 0;  // <beta, alpha coroot>
};
/// Throws ArgumentError when the pair does not fit one of the four patterns.
RootPair classify_pair(const RootSystem& rs, std::size_t a, std::size_t b);
/// Length of the alternating words compared by braid_check.
int braid_length(BraidPattern p);

// The hyperplane <lambda, root> = level, root = ca*alpha + cb*beta.
struct CriticalLine {
  Int ca = 0;
  Int cb = 0;
  Int level = 0;
  friend bool operator==(const CriticalLine&, const CriticalLine&) = default;
};
std::string to_string(const CriticalLine& h);
/// Lines where the braid relation may fail. For G2 these are candidates only.
std::vector<CriticalLine> critical_lines(BraidPattern p);

struct BraidReport {
  RootPair pair;
  Coweight lambda;
  Coweight lhs;  // R_alpha R_beta R_alpha ... (lambda)
  Coweight rhs;  // R_beta R_alpha R_beta ... (lambda)
  bool equal = false;
  std::vector<CriticalLine> critical_lines_hit;
};
BraidReport braid_check(const RootSystem& rs, const Coweight& lambda, std::size_t a, std::size_t b);

/// The full alternating reflection word s_alpha s_beta ... applied to lambda.
Coweight braid_w(const RootSystem& rs, const RootPair& pair, const Coweight& lambda);

// One row of a braid table: conditions on (<lambda,alpha>, <lambda,beta>),
// and both sides written as w(lambda) - a alpha coroot - b beta coroot.
struct BraidCondition {
  enum class Rel { LE, LT, EQ, GE, GT, IN2 };
  Int ca = 0;  // coefficient of alpha
  Int cb = 0;  // coefficient of beta
  Rel rel = Rel::EQ;
  Int v = 0;
  Int v2 = 0;  // second admissible value for IN2
  bool holds(Int pa, Int pb) const;
};
struct BraidExpr {
  Int a = 0;
  Int b = 0;
  friend bool operator==(const BraidExpr&, const BraidExpr&) = default;
};
struct BraidTableRow {
  std::vector<BraidCondition> conditions;
  BraidExpr lhs;
  BraidExpr rhs;
  bool applies(Int pa, Int pb) const;
};
std::string to_string(const BraidCondition& c);
std::string to_string(const BraidExpr& e);

// Printed: rows exactly as published. Corrected: the same rows after the
// fixes listed by braid_table_errata, verified by direct evaluation.
enum class TableEdition { Printed, Corrected };
/// Empty for the orthogonal and G2 patterns.
const std::vector<BraidTableRow>& braid_table(BraidPattern p, TableEdition edition = TableEdition::Corrected);
/// 1-based numbers of the rows changed in the corrected edition.
std::vector<std::size_t> braid_table_errata(BraidPattern p);
/// Expression value for lambda under the given pair.
Coweight evaluate(const RootSystem& rs, const RootPair& pair, const Coweight& lambda, const BraidExpr& e);

enum class BraidBucket { Equal, UnequalOnCriticalLine, UnequalElsewhere };
std::string to_string(BraidBucket b);

struct BraidScanEntry {
  RootPair pair;
  std::map<BraidBucket, std::size_t> counts;
  std::vector<BraidReport> failures;  // every unequal report
};
struct BraidScan {
  std::string type;
  Int box = 0;
  std::vector<BraidScanEntry> pairs;
  std::size_t count(BraidBucket b) const;
};
/// braid_check for every classified root pair and every lambda in [-box, box]^rank.
BraidScan braid_scan(const RootSystem& rs, Int box);

/// Visit every integer vector in [-box, box]^n in lexicographic order.
template <class F>
void for_each_in_box(std::size_t n, Int box, F&& f) {
  IntVec v(n, -box);
  while (true) {
    f(Coweight(v));
    std::size_t i = n;
    while (i > 0 && v[i - 1] == box) v[--i] = -box;
    if (i == 0) return;
    ++v[i - 1];
  }
}

}  // namespace affgr
