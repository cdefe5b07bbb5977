#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cattool::cli {

// Exit codes: 0 all checks pass or the query was answered, 1 a law failed or
// a required object does not exist, 2 bad input (schema, semantics, guards).
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cattool::cli
