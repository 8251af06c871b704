#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affgr::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kArgumentError = 1;
inline constexpr int kConsistencyError = 2;
inline constexpr int kCounterexample = 3;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affgr::cli
