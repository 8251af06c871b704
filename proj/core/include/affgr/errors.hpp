#pragma once

#include <stdexcept>
#include <string>

namespace affgr {

// Bad input from a caller: malformed coweight, unknown type, root pair
// outside the supported patterns, and so on.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent computations of the same quantity disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested operation is only implemented up to some rank.
class UnsupportedRank : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace affgr
