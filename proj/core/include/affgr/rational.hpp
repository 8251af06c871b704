#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "affgr/checked.hpp"

namespace affgr {

using Rational = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rational>;

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& q);

/// Inverse of to_string. Throws ArgumentError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// Throws std::overflow_error when q is not an integer fitting in Int.
Int to_int(const Rational& q);

Rational floor(const Rational& q);

}  // namespace affgr
