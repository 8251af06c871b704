#include "affgr/rational.hpp"

#include <charconv>
#include <stdexcept>

#include "affgr/errors.hpp"

namespace affgr {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view s) {
  if (s.empty()) throw ArgumentError("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ArgumentError("malformed integer '" + std::string(s) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ArgumentError("malformed integer '" + std::string(s) + "'");
  }
  boost::multiprecision::cpp_int v(std::string(s.substr(start)));
  return s[0] == '-' ? -v : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ArgumentError("zero denominator");
  return Rational(num) / Rational(den);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int to_int(const Rational& q) {
  if (!is_integer(q)) throw std::overflow_error("rational " + to_string(q) + " is not an integer");
  const auto& n = numerator(q);
  if (n > INT64_MAX || n < INT64_MIN) throw std::overflow_error("integer out of range");
  return static_cast<Int>(n);
}

Rational floor(const Rational& q) {
  boost::multiprecision::cpp_int n = numerator(q), d = denominator(q);
  boost::multiprecision::cpp_int f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return Rational(f);
}

}  // namespace affgr
