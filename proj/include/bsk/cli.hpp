#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsk::cli {

/// Exit codes.
inline constexpr int ok = 0;
inline constexpr int invalid_input = 2;
inline constexpr int inconsistent = 3;
inline constexpr int usage = 64;

/// Runs one command line (without the program name). JSON goes to out unless --pretty.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bsk::cli
