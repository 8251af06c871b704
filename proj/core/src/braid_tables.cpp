#include <sstream>

#include "affgr/rops.hpp"

namespace affgr {

bool BraidCondition::holds(Int pa, Int pb) const {
  const Int x = checked_add(checked_mul(ca, pa), checked_mul(cb, pb));
  switch (rel) {
    case Rel::LE: return x <= v;
    case Rel::LT: return x < v;
    case Rel::EQ: return x == v;
    case Rel::GE: return x >= v;
    case Rel::GT: return x > v;
    case Rel::IN2: return x == v || x == v2;
  }
  return false;
}

bool BraidTableRow::applies(Int pa, Int pb) const {
  for (const auto& c : conditions)
    if (!c.holds(pa, pb)) return false;
  return true;
}

std::string to_string(const BraidCondition& c) {
  std::ostringstream os;
  os << "<l,";
  bool first = true;
  for (auto [k, name] : {std::pair{c.ca, "a"}, std::pair{c.cb, "b"}}) {
    if (k == 0) continue;
    if (!first) os << '+';
    if (k != 1) os << k;
    os << name;
    first = false;
  }
  os << '>';
  switch (c.rel) {
    case BraidCondition::Rel::LE: os << "<=" << c.v; break;
    case BraidCondition::Rel::LT: os << '<' << c.v; break;
    case BraidCondition::Rel::EQ: os << '=' << c.v; break;
    case BraidCondition::Rel::GE: os << ">=" << c.v; break;
    case BraidCondition::Rel::GT: os << '>' << c.v; break;
    case BraidCondition::Rel::IN2: os << " in {" << c.v << ',' << c.v2 << '}'; break;
  }
  return os.str();
}

std::string to_string(const BraidExpr& e) {
  std::ostringstream os;
  os << "w(l)";
  if (e.a != 0) os << " - " << (e.a == 1 ? "" : std::to_string(e.a)) << "a^";
  if (e.b != 0) os << " - " << (e.b == 1 ? "" : std::to_string(e.b)) << "b^";
  return os.str();
}

namespace {

using R = BraidCondition::Rel;

BraidCondition cond(Int ca, Int cb, R rel, Int v, Int v2 = 0) { return BraidCondition{ca, cb, rel, v, v2}; }

BraidTableRow row(std::vector<BraidCondition> cs, BraidExpr lhs, BraidExpr rhs) {
  return BraidTableRow{std::move(cs), lhs, rhs};
}
BraidTableRow row(std::vector<BraidCondition> cs, BraidExpr both) { return BraidTableRow{std::move(cs), both, both}; }

const std::vector<BraidTableRow> kA2 = {
    row({cond(1, 0, R::LE, -1), cond(0, 1, R::LE, -1)}, {2, 2}),
    row({cond(1, 0, R::EQ, -1), cond(0, 1, R::EQ, 0)}, {1, 1}),
    row({cond(1, 0, R::EQ, 0), cond(0, 1, R::EQ, -1)}, {1, 1}),
    row({cond(1, 0, R::GE, 0), cond(1, 1, R::LT, -1)}, {2, 1}),
    row({cond(1, 0, R::GE, 1), cond(1, 1, R::EQ, -1)}, {2, 1}, {1, 0}),
    row({cond(1, 1, R::GE, 0), cond(0, 1, R::LE, -1)}, {1, 0}),
    row({cond(1, 0, R::GE, 0), cond(0, 1, R::GE, 0)}, {0, 0}),
    row({cond(0, 1, R::GE, 0), cond(1, 1, R::LT, -1)}, {1, 2}),
    row({cond(1, 1, R::EQ, -1), cond(0, 1, R::GE, 1)}, {0, 1}, {1, 2}),
    row({cond(1, 1, R::GE, 0), cond(1, 0, R::LE, -1)}, {0, 1}),
};

const std::vector<BraidTableRow> kB2 = {
    row({cond(1, 0, R::LE, -1), cond(0, 1, R::LT, 0)}, {3, 4}),
    row({cond(1, 0, R::EQ, 0), cond(0, 1, R::EQ, -2)}, {2, 3}),
    row({cond(0, 1, R::EQ, 0), cond(1, 0, R::EQ, -1)}, {2, 2}),
    row({cond(0, 1, R::EQ, -1), cond(1, 0, R::EQ, 0)}, {1, 2}),
    row({cond(1, 1, R::LT, -1), cond(0, 1, R::GE, 0)}, {3, 3}),
    row({cond(1, 1, R::EQ, -1), cond(0, 1, R::GT, 0)}, {3, 3}, {2, 1}),
    row({cond(0, 1, R::EQ, 1), cond(1, 0, R::EQ, -2)}, {3, 3}, {2, 2}),
    row({cond(1, 1, R::GE, 0), cond(2, 1, R::LT, -2)}, {2, 2}),
    row({cond(1, 0, R::LE, -2), cond(2, 1, R::IN2, -2, -1)}, {2, 1}, {1, 0}),
    row({cond(0, 1, R::EQ, 1), cond(1, 0, R::EQ, -1)}, {1, 1}),
    row({cond(2, 1, R::GE, 0), cond(1, 0, R::LE, -1)}, {1, 0}),
    row({cond(1, 0, R::GE, 0), cond(0, 1, R::GE, 0)}, {0, 0}),
    row({cond(1, 0, R::GE, 0), cond(2, 1, R::LT, -2)}, {2, 4}),
    row({cond(1, 0, R::GT, 0), cond(2, 1, R::IN2, -2, -1)}, {1, 3}, {2, 4}),
    row({cond(2, 1, R::GE, 0), cond(1, 1, R::LT, -1)}, {1, 3}),
    row({cond(1, 1, R::EQ, -1), cond(2, 1, R::GE, 2)}, {0, 1}, {1, 3}),
    row({cond(1, 1, R::EQ, -1), cond(2, 1, R::EQ, 0)}, {0, 1}, {1, 2}),
    row({cond(1, 1, R::GE, 0), cond(0, 1, R::LT, 0)}, {0, 1}),
};

// Printed B2 rows 6, 8 and 16 disagree with direct evaluation: row 6 also
// claims the point of row 7, row 8 has the wrong lhs, and row 16 misses
// <l,2a+b> = 1 on the line <l,a+b> = -1.
std::vector<BraidTableRow> corrected_b2() {
  std::vector<BraidTableRow> t = kB2;
  t[5].conditions[1] = cond(0, 1, R::GT, 1);
  t[7].lhs = t[7].rhs = {2, 1};
  t[15].conditions[1] = cond(2, 1, R::GE, 1);
  return t;
}

const std::vector<BraidTableRow> kB2Corrected = corrected_b2();

const std::vector<BraidTableRow> kEmpty;

}  // namespace

const std::vector<BraidTableRow>& braid_table(BraidPattern p, TableEdition edition) {
  switch (p) {
    case BraidPattern::A2: return kA2;
    case BraidPattern::B2: return edition == TableEdition::Printed ? kB2 : kB2Corrected;
    default: return kEmpty;
  }
}

std::vector<std::size_t> braid_table_errata(BraidPattern p) {
  if (p == BraidPattern::B2) return {6, 8, 16};
  return {};
}

}  // namespace affgr
