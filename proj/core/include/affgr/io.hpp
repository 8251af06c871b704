#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "affgr/kmweights.hpp"
#include "affgr/polytope.hpp"
#include "affgr/psi.hpp"
#include "affgr/rops.hpp"

namespace affgr {

using Json = nlohmann::ordered_json;

enum class Basis { Fundamental, Coroot };

/// Parses "a,b,..." in the given basis. Coroot coordinates may be rationals;
/// the result must be an integral coweight. Throws ArgumentError.
Coweight parse_coweight(const RootSystem& rs, std::string_view text, Basis basis = Basis::Fundamental);

Json to_json(const Coweight& c);
Json to_json(const std::vector<Coweight>& cs);
Json to_json(const PsiSet& psi);
/// {"trans": [...], "word": [...]}, word a reduced word of the finite part.
Json to_json(const RootSystem& rs, const AffineWeylElement& x);
Json to_json(const AffineWeight& h);
Json to_json(const DualAffineRoot& r);
Json to_json(const MomentPolytope& mp, const std::vector<Coweight>& gaps);
Json to_json(const RootSystem& rs, const BraidReport& rep);
Json to_json(const RootSystem& rs, const BraidScan& scan);

/// Root in simple-root coordinates, e.g. "a1+2a2".
std::string root_label(const IntVec& beta);
/// Accepts a root id ("#3"), simple index ("2"), or simple-root coordinates ("1,1").
std::size_t parse_root(const RootSystem& rs, std::string_view text);

}  // namespace affgr
